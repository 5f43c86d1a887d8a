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

#include <functional>

#include "ogk/error.h"
#include "ogk/selection.h"
#include "support.h"

namespace ogk {
namespace {

using testing::as_set;
using testing::pick;
using testing::scalar;

Value idx(std::size_t k) { return Value::index(k); }
Value rw(Rational r) { return Value::rewards({r}); }

// Scalar costate on a Range(n) from a list of values.
Costate scalar_costate(std::vector<Rational> values, const std::string& player = "u") {
  const FinSpace dom = FinSpace::range(values.size());
  return Costate(dom, scalar(player), [values](const Value& v) { return rw(values.at(v.as_index())); });
}

// Player-indexed costate from a table indexed by profile rank.
Costate table_costate(const FinSpace& omega, const FinSpace& coomega,
                      std::vector<std::vector<Rational>> table) {
  return Costate(omega, coomega, [omega, table](const Value& profile) {
    std::vector<Value> items;
    for (const Rational& r : table.at(rank(omega, profile))) items.push_back(rw(r));
    return Value::by_player(std::move(items));
  });
}

struct TwoByTwo {
  FinSpace omega = FinSpace::player_indexed({"a", "b"}, {FinSpace::range(2), FinSpace::range(2)});
  FinSpace coomega = FinSpace::player_indexed({"a", "b"}, {scalar("a"), scalar("b")});
  SelectionFn eps = nash_product({"a", "b"}, {argmax(FinSpace::range(2), scalar("a")),
                                              argmax(FinSpace::range(2), scalar("b"))});
};

Value profile(std::size_t a, std::size_t b) { return Value::by_player({idx(a), idx(b)}); }

TEST(Argmax, KeepsAllMaximisers) {
  const SelectionFn eps = argmax(FinSpace::range(3), scalar("u"));
  EXPECT_EQ(select(eps, scalar_costate({5, 2, 5})), (std::vector<Value>{idx(0), idx(2)}));
  EXPECT_EQ(select(eps, scalar_costate({1, 1, 1})).size(), 3u);
  const SelectionFn unit = argmax(FinSpace::unit(), scalar("u"));
  const Costate k(FinSpace::unit(), scalar("u"), [](const Value&) { return rw(-4); });
  EXPECT_EQ(select(unit, k), std::vector<Value>{Value::point()});
}

TEST(Argmax, SimpleSelectAndMember) {
  const SelectionFn eps = argmax(FinSpace::range(2), scalar("u"));
  const Costate k = scalar_costate({0, 1});
  EXPECT_EQ(select(eps, k), std::vector<Value>{idx(1)});
  EXPECT_TRUE(member(eps, k, idx(1)));
  EXPECT_FALSE(member(eps, k, idx(0)));
}

TEST(Argmax, CustomExtractor) {
  // Maximise the negated reward, i.e. minimise.
  const SelectionFn eps = argmax(FinSpace::range(3), scalar("u"),
                                 [](const Value& r) { return -r.rewards()[0]; });
  EXPECT_EQ(select(eps, scalar_costate({3, 1, 2})), std::vector<Value>{idx(1)});
}

TEST(NashProduct, MatchingPenniesHasNoPureEquilibrium) {
  TwoByTwo g;
  const Costate k = table_costate(g.omega, g.coomega, {{1, -1}, {-1, 1}, {-1, 1}, {1, -1}});
  EXPECT_TRUE(select(g.eps, k).empty());
}

TEST(NashProduct, PrisonersDilemma) {
  TwoByTwo g;  // move 0 = C, move 1 = D
  const Costate k = table_costate(g.omega, g.coomega, {{-1, -1}, {-3, 0}, {0, -3}, {-2, -2}});
  EXPECT_EQ(select(g.eps, k), std::vector<Value>{profile(1, 1)});
  EXPECT_TRUE(member(g.eps, k, profile(1, 1)));
  EXPECT_FALSE(member(g.eps, k, profile(0, 0)));
}

TEST(NashProduct, ConstantCostateSelectsEverything) {
  TwoByTwo g;
  const Costate k = table_costate(g.omega, g.coomega, {{0, 0}, {0, 0}, {0, 0}, {0, 0}});
  EXPECT_EQ(select(g.eps, k).size(), 4u);
  for (const Value& v : enumerate(g.omega)) EXPECT_TRUE(member(g.eps, k, v));
}

TEST(NashProduct, SinglePlayerIsTheUnderlyingSelection) {
  const SelectionFn inner = argmax(FinSpace::range(3), scalar("a"));
  const SelectionFn eps = nash_product({"a"}, {inner});
  const FinSpace omega = FinSpace::player_indexed({"a"}, {FinSpace::range(3)});
  const FinSpace coomega = FinSpace::player_indexed({"a"}, {scalar("a")});
  const Costate k = table_costate(omega, coomega, {{2}, {7}, {7}});
  EXPECT_EQ(select(eps, k), (std::vector<Value>{Value::by_player({idx(1)}), Value::by_player({idx(2)})}));
  EXPECT_EQ(select(inner, scalar_costate({2, 7, 7}, "a")), (std::vector<Value>{idx(1), idx(2)}));
}

TEST(NashProduct, RejectsMismatchedParts) {
  EXPECT_THROW(nash_product({"a", "b"}, {argmax(FinSpace::range(2), scalar("a"))}), Error);
}

// A lens that relabels Range(2) and passes rewards through.
Lens swap_lens() {
  const FinSpace m = FinSpace::range(2);
  return Lens(m, scalar("u"), m, scalar("u"), [](const Value& v) { return idx(1 - v.as_index()); },
              [](const Value&, const Value& r) { return r; });
}

TEST(Pushforward, AlongSwap) {
  const SelectionFn eps = argmax(FinSpace::range(2), scalar("u"));
  const Costate k = scalar_costate({1, 0});
  EXPECT_EQ(select(eps, k), std::vector<Value>{idx(0)});
  // The preimage choice flips; its image under get lands back on the maximiser.
  EXPECT_EQ(select(eps, precompose(swap_lens(), k)), std::vector<Value>{idx(1)});
  EXPECT_EQ(select(pushforward(swap_lens(), eps), k), std::vector<Value>{idx(0)});
}

TEST(Pushforward, AlongIdentity) {
  testing::Rng rng(41);
  const SelectionFn eps = argmax(FinSpace::range(3), scalar("u"));
  const SelectionFn pushed = pushforward(lens_identity(FinSpace::range(3), scalar("u")), eps);
  for (int trial = 0; trial < 50; ++trial) {
    const Costate k = scalar_costate({Rational(pick(rng, 0, 2)), Rational(pick(rng, 0, 2)), Rational(pick(rng, 0, 2))});
    EXPECT_EQ(select(pushed, k), select(eps, k));
  }
}

TEST(Pushforward, RejectsMismatch) {
  EXPECT_THROW(pushforward(swap_lens(), argmax(FinSpace::range(3), scalar("u"))), Error);
}

Rational index_value(const Value& v) { return Rational(static_cast<std::int64_t>(v.as_index())); }

TEST(SelectionLaws, PushforwardIsFunctorial) {
  testing::Rng rng(42);
  for (int trial = 0; trial < 80; ++trial) {
    const FinSpace omega = FinSpace::range(pick(rng, 1, 4));
    const FinSpace score = FinSpace::range(3);
    const FinSpace b = testing::small_space(rng), bbar = FinSpace::range(pick(rng, 1, 3));
    const FinSpace c = testing::small_space(rng), cbar = FinSpace::range(pick(rng, 1, 3));
    const SelectionFn eps = argmax(omega, score, index_value);
    const Lens l1 = testing::random_lens(rng, omega, score, b, bbar);
    const Lens l2 = testing::random_lens(rng, b, bbar, c, cbar);
    const SelectionFn once = pushforward(lens_compose(l1, l2), eps);
    const SelectionFn twice = pushforward(l2, pushforward(l1, eps));
    const SelectionFn id_pushed = pushforward(lens_identity(c, cbar), twice);
    for (int j = 0; j < 8; ++j) {
      const Costate k = testing::random_costate(rng, c, cbar);
      const auto expected = as_set(select(once, k));
      EXPECT_EQ(as_set(select(twice, k)), expected);
      EXPECT_EQ(as_set(select(id_pushed, k)), expected);
    }
  }
}

TEST(SelectionLaws, MemberAgreesWithSelect) {
  testing::Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<PlayerId> players{"a", "b", "c"};
    std::vector<FinSpace> moves, rewards;
    std::vector<SelectionFn> parts;
    for (const auto& p : players) {
      moves.push_back(FinSpace::range(pick(rng, 1, 3)));
      rewards.push_back(scalar(p));
      parts.push_back(argmax(moves.back(), rewards.back()));
    }
    const FinSpace omega = FinSpace::player_indexed(players, moves);
    const FinSpace coomega = FinSpace::player_indexed(players, rewards);
    std::vector<std::vector<Rational>> table;
    for (std::uint64_t i = 0; i < cardinality(omega); ++i) {
      table.push_back({Rational(pick(rng, 0, 2)), Rational(pick(rng, 0, 2)), Rational(pick(rng, 0, 2))});
    }
    const Costate k = table_costate(omega, coomega, table);
    const SelectionFn eps = nash_product(players, parts);
    const auto chosen = as_set(select(eps, k));
    for (const Value& v : enumerate(omega)) EXPECT_EQ(member(eps, k, v), chosen.count(v) == 1);
  }
}

// The displayed two-player formula, evaluated directly on a payoff table.
std::set<Value> binary_formula(std::size_t n, std::size_t m, const std::vector<std::vector<Rational>>& t) {
  std::set<Value> out;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      bool best_x = true, best_y = true;
      for (std::size_t x2 = 0; x2 < n; ++x2) best_x = best_x && t[x * m + y][0] >= t[x2 * m + y][0];
      for (std::size_t y2 = 0; y2 < m; ++y2) best_y = best_y && t[x * m + y][1] >= t[x * m + y2][1];
      if (best_x && best_y) out.insert(profile(x, y));
    }
  }
  return out;
}

void check_binary(std::size_t n, std::size_t m, const std::vector<std::vector<Rational>>& table) {
  const FinSpace omega = FinSpace::player_indexed({"a", "b"}, {FinSpace::range(n), FinSpace::range(m)});
  const FinSpace coomega = FinSpace::player_indexed({"a", "b"}, {scalar("a"), scalar("b")});
  const SelectionFn eps = nash_product({"a", "b"}, {argmax(FinSpace::range(n), scalar("a")),
                                                    argmax(FinSpace::range(m), scalar("b"))});
  EXPECT_EQ(as_set(select(eps, table_costate(omega, coomega, table))), binary_formula(n, m, table));
}

TEST(SelectionLaws, BinaryProductMatchesFormulaExhaustively) {
  // Every costate with rewards in {0,1,2} over |Omega_a|, |Omega_b| <= 2.
  for (std::size_t n = 1; n <= 2; ++n) {
    for (std::size_t m = 1; m <= 2; ++m) {
      const std::size_t cells = 2 * n * m;
      std::size_t total = 1;
      for (std::size_t i = 0; i < cells; ++i) total *= 3;
      for (std::size_t code = 0; code < total; ++code) {
        std::vector<std::vector<Rational>> table(n * m);
        std::size_t c = code;
        for (auto& row : table) {
          for (int j = 0; j < 2; ++j, c /= 3) row.push_back(Rational(static_cast<std::int64_t>(c % 3)));
        }
        check_binary(n, m, table);
      }
    }
  }
}

TEST(SelectionLaws, BinaryProductMatchesFormulaOnLargerSpaces) {
  testing::Rng rng(44);
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = pick(rng, 1, 3), m = pick(rng, 1, 3);
    std::vector<std::vector<Rational>> table(n * m);
    for (auto& row : table) row = {Rational(pick(rng, 0, 2)), Rational(pick(rng, 0, 2))};
    check_binary(n, m, table);
  }
}

TEST(SelectionLaws, ArgmaxIsInvariantUnderMonotoneRescaling) {
  testing::Rng rng(45);
  const std::vector<std::function<Rational(const Rational&)>> maps{
      [](const Rational& r) { return Rational(2) * r + Rational(1); },
      [](const Rational& r) { return r * Rational(1, 3) - Rational(5); },
  };
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = pick(rng, 1, 3), m = pick(rng, 1, 3);
    const FinSpace omega = FinSpace::player_indexed({"a", "b"}, {FinSpace::range(n), FinSpace::range(m)});
    const FinSpace coomega = FinSpace::player_indexed({"a", "b"}, {scalar("a"), scalar("b")});
    const SelectionFn eps = nash_product({"a", "b"}, {argmax(FinSpace::range(n), scalar("a")),
                                                      argmax(FinSpace::range(m), scalar("b"))});
    std::vector<std::vector<Rational>> table(n * m);
    for (auto& row : table) row = {Rational(pick(rng, 0, 3)), Rational(pick(rng, 0, 3))};
    const auto base = select(eps, table_costate(omega, coomega, table));
    for (const auto& f : maps) {
      auto scaled = table;
      for (auto& row : scaled) {
        for (auto& r : row) r = f(r);
      }
      EXPECT_EQ(select(eps, table_costate(omega, coomega, scaled)), base);
    }
  }
}

TEST(Costate, TabulatedAgreesWithDirect) {
  TwoByTwo g;
  const Costate k = table_costate(g.omega, g.coomega, {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
  const Costate t = k.tabulated();
  for (const Value& v : enumerate(g.omega)) EXPECT_EQ(t(v), k(v));
}

TEST(Costate, FromLensReadsPut) {
  const FinSpace m = FinSpace::range(2);
  const Lens l(m, scalar("u"), FinSpace::unit(), FinSpace::unit(),
               [](const Value&) { return Value::point(); },
               [](const Value& x, const Value&) { return rw(Rational(static_cast<std::int64_t>(x.as_index()) + 10)); });
  const Costate k = Costate::from_lens(l);
  EXPECT_EQ(k(idx(1)), rw(11));
}

TEST(Extensional, UsesTheEnumerator) {
  const FinSpace m = FinSpace::range(3);
  const SelectionFn eps = extensional(m, scalar("u"), [](const Costate&) { return std::vector<Value>{idx(2)}; });
  const Costate k = scalar_costate({0, 0, 0});
  EXPECT_EQ(select(eps, k), std::vector<Value>{idx(2)});
  EXPECT_TRUE(member(eps, k, idx(2)));
  EXPECT_FALSE(member(eps, k, idx(0)));
}

}  // namespace
}  // namespace ogk
