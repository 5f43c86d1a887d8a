// Copyright 2026 The OGK Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <gtest/gtest.h>

#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "ogk/error.h"
#include "ogk/rational.h"
#include "ogk/space.h"
#include "ogk/value.h"
#include "support.h"

namespace ogk {
namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no ogk::Error thrown";
  return ErrorCode::kInvalidArgument;
}

// --- Rational ---------------------------------------------------------------

TEST(Rational, NormalizesSignAndGcd) {
  const Rational a(6, -4);
  EXPECT_EQ(a.numerator(), -3);
  EXPECT_EQ(a.denominator(), 2);
  EXPECT_EQ(Rational(0, 7), Rational(0));
  EXPECT_EQ(Rational(0, 7).denominator(), 1);
  EXPECT_EQ(code_of([] { Rational(1, 0); }), ErrorCode::kInvalidArgument);
}

TEST(Rational, ToString) {
  EXPECT_EQ(Rational(5).to_string(), "5");
  EXPECT_EQ(Rational(-3, 2).to_string(), "-3/2");
}

TEST(Rational, ParseAcceptsIntegersFractionsDecimals) {
  EXPECT_EQ(Rational::parse("-3"), Rational(-3));
  EXPECT_EQ(Rational::parse("3/2"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("0.25"), Rational(1, 4));
  EXPECT_EQ(Rational::parse("-1.5"), Rational(-3, 2));
  EXPECT_EQ(Rational::parse("0.1"), Rational(1, 10));
  for (const char* bad : {"", "-", "1/0", "1.", "1/", "x", "1/-2", "1.2.3", "--1", "1e3", " 1"}) {
    EXPECT_FALSE(Rational::parse(bad).has_value()) << bad;
  }
}

TEST(Rational, OverflowIsReported) {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  EXPECT_EQ(code_of([&] { (void)(big + Rational(1)); }), ErrorCode::kOverflow);
  EXPECT_EQ(code_of([&] { (void)(big * Rational(2)); }), ErrorCode::kOverflow);
  EXPECT_FALSE(Rational::parse("99999999999999999999").has_value());
}

// Arithmetic and order against integer cross-multiplication.
TEST(Rational, AgreesWithCrossMultiplication) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000), den(1, 1000);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::int64_t n1 = num(rng), d1 = den(rng), n2 = num(rng), d2 = den(rng);
    const Rational a(n1, d1), b(n2, d2);
    const Rational sum = a + b, diff = a - b, prod = a * b;
    EXPECT_EQ(sum.numerator() * (d1 * d2), (n1 * d2 + n2 * d1) * sum.denominator());
    EXPECT_EQ(diff.numerator() * (d1 * d2), (n1 * d2 - n2 * d1) * diff.denominator());
    EXPECT_EQ(prod.numerator() * (d1 * d2), (n1 * n2) * prod.denominator());
    EXPECT_EQ(a < b, n1 * d2 < n2 * d1);
    EXPECT_EQ(a == b, n1 * d2 == n2 * d1);
    EXPECT_GT(sum.denominator(), 0);
    EXPECT_EQ(std::gcd(sum.numerator() < 0 ? -sum.numerator() : sum.numerator(), sum.denominator()),
              sum.numerator() == 0 ? sum.denominator() : 1);
  }
}

// --- Value --------------------------------------------------------------------

TEST(Value, AccessorsCheckKind) {
  const Value t = Value::tuple({Value::index(1), Value::point()});
  EXPECT_EQ(t[0].as_index(), 1u);
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(code_of([&] { (void)t.as_index(); }), ErrorCode::kTypeMismatch);
  EXPECT_EQ(code_of([] { (void)Value::point().tag(); }), ErrorCode::kTypeMismatch);
  const Value g = Value::tagged(2, Value::index(0));
  EXPECT_EQ(g.tag(), 2u);
  EXPECT_EQ(g.item(), Value::index(0));
  EXPECT_EQ(Value::rewards({1, Rational(1, 2)}).rewards()[1], Rational(1, 2));
}

TEST(Value, WithItemReplacesOneComponent) {
  const Value p = Value::by_player({Value::index(0), Value::index(1)});
  const Value q = with_item(p, 1, Value::index(0));
  EXPECT_EQ(q, Value::by_player({Value::index(0), Value::index(0)}));
  EXPECT_EQ(p[1], Value::index(1));
}

TEST(Value, OrderIsTotalAndStructural) {
  EXPECT_LT(Value::index(0), Value::index(1));
  EXPECT_EQ(Value::tuple({Value::index(1)}), Value::tuple({Value::index(1)}));
  EXPECT_NE(Value::tagged(0, Value::point()), Value::tagged(1, Value::point()));
}

// --- FinSpace -------------------------------------------------------------------

TEST(FinSpace, EnumerateExamples) {
  EXPECT_EQ(enumerate(FinSpace::range(2)), (std::vector<Value>{Value::index(0), Value::index(1)}));
  const auto pairs = enumerate(FinSpace::product({FinSpace::range(2), FinSpace::range(2)}));
  ASSERT_EQ(pairs.size(), 4u);
  const std::vector<std::pair<int, int>> expected{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(pairs[i], Value::tuple({Value::index(expected[i].first), Value::index(expected[i].second)}));
  }
  EXPECT_EQ(enumerate(FinSpace::sum({FinSpace::unit(), FinSpace::range(2)})),
            (std::vector<Value>{Value::tagged(0, Value::point()), Value::tagged(1, Value::index(0)),
                                Value::tagged(1, Value::index(1))}));
}

TEST(FinSpace, CardinalityExamples) {
  EXPECT_EQ(cardinality(FinSpace::unit()), 1u);
  EXPECT_EQ(cardinality(FinSpace::product({FinSpace::range(3), FinSpace::range(2)})), 6u);
  EXPECT_EQ(cardinality(FinSpace::sum({FinSpace::range(2), FinSpace::range(2)})), 4u);
  EXPECT_EQ(cardinality(FinSpace::product({})), 1u);
  EXPECT_EQ(cardinality(FinSpace::player_indexed({"a", "b"}, {FinSpace::range(2), FinSpace::range(3)})), 6u);
}

TEST(FinSpace, TypecheckExamples) {
  EXPECT_TRUE(typecheck(Value::index(1), FinSpace::range(2)));
  EXPECT_FALSE(typecheck(Value::index(2), FinSpace::range(2)));
  EXPECT_TRUE(typecheck(Value::tagged(1, Value::index(0)), FinSpace::sum({FinSpace::unit(), FinSpace::range(2)})));
  EXPECT_FALSE(typecheck(Value::tagged(2, Value::point()), FinSpace::sum({FinSpace::unit()})));
  EXPECT_TRUE(typecheck(Value::rewards({1, 2}), FinSpace::reward_space({"a", "b"})));
  EXPECT_FALSE(typecheck(Value::rewards({1}), FinSpace::reward_space({"a", "b"})));
}

TEST(FinSpace, Errors) {
  EXPECT_EQ(code_of([] { FinSpace::range(0); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { cardinality(FinSpace::reward_space({"a"})); }), ErrorCode::kNotEnumerable);
  EXPECT_EQ(code_of([] { enumerate(FinSpace::product({FinSpace::range(2), FinSpace::reward_space({"a"})})); }),
            ErrorCode::kNotEnumerable);
  const FinSpace big = FinSpace::product(std::vector<FinSpace>(8, FinSpace::range(10)));
  EXPECT_EQ(code_of([&] { enumerate(big); }), ErrorCode::kCapExceeded);
  EXPECT_EQ(code_of([] { enumerate(FinSpace::range(5), 4); }), ErrorCode::kCapExceeded);
  EXPECT_EQ(enumerate(FinSpace::range(4), 4).size(), 4u);
}

FinSpace random_space(testing::Rng& rng, int depth) {
  const std::size_t choice = depth == 0 ? testing::pick(rng, 0, 1) : testing::pick(rng, 0, 4);
  switch (choice) {
    case 0: return FinSpace::unit();
    case 1: return FinSpace::range(testing::pick(rng, 1, 3));
    case 2:
    case 3: {
      std::vector<FinSpace> parts;
      const std::size_t n = testing::pick(rng, 0, 3);
      for (std::size_t i = 0; i < n; ++i) parts.push_back(random_space(rng, depth - 1));
      if (choice == 3 && parts.empty()) parts.push_back(FinSpace::unit());
      return choice == 2 ? FinSpace::product(parts) : FinSpace::sum(parts);
    }
    default: {
      std::vector<FinSpace> parts{random_space(rng, depth - 1), random_space(rng, depth - 1)};
      return FinSpace::player_indexed({"a", "b"}, parts);
    }
  }
}

TEST(FinSpace, EnumerationInvariants) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const FinSpace s = random_space(rng, 3);
    const auto all = enumerate(s);
    ASSERT_EQ(all.size(), cardinality(s)) << s.to_string();
    std::set<Value> seen;
    for (std::size_t i = 0; i < all.size(); ++i) {
      EXPECT_TRUE(typecheck(all[i], s));
      EXPECT_TRUE(seen.insert(all[i]).second) << "duplicate in " << s.to_string();
      EXPECT_EQ(rank(s, all[i]), i);
      EXPECT_EQ(unrank(s, i), all[i]);
    }
  }
}

}  // namespace
}  // namespace ogk
