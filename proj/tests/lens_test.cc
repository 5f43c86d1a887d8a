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

#include "ogk/error.h"
#include "ogk/lens.h"
#include "support.h"

namespace ogk {
namespace {

using testing::pick;
using testing::random_lens;
using testing::random_plens;
using testing::small_space;

const FinSpace kR = FinSpace::reward_space({"u"});
const FinSpace k2 = FinSpace::range(2);

Value idx(std::size_t k) { return Value::index(k); }
Value pair(Value a, Value b) { return Value::tuple({std::move(a), std::move(b)}); }

Lens swap2() {
  return Lens(k2, k2, k2, k2, [](const Value& v) { return idx(1 - v.as_index()); },
              [](const Value&, const Value& r) { return idx(1 - r.as_index()); });
}

Lens const0() {
  return Lens(k2, k2, k2, k2, [](const Value&) { return idx(0); },
              [](const Value& x, const Value& r) { return idx(x.as_index() ^ r.as_index()); });
}

// Dec-shaped stage: the parameter is the move, state ignored, utility copied.
ParamLens dec_stage(std::size_t n, const FinSpace& x) {
  const FinSpace m = FinSpace::range(n);
  return ParamLens(m, kR,
                   Lens(FinSpace::product({m, x}), FinSpace::product({kR, kR}), m, kR,
                        [](const Value& v) { return v[0]; },
                        [](const Value&, const Value& r) { return pair(r, r); }));
}

TEST(Lens, IdentityExamples) {
  const Lens id = lens_identity(k2, k2);
  EXPECT_EQ(id.get(idx(1)), idx(1));
  EXPECT_EQ(id.put(idx(0), idx(1)), idx(1));
  EXPECT_EQ(lens_identity(FinSpace::unit(), FinSpace::unit()).get(Value::point()), Value::point());
}

TEST(Lens, ComposeExamples) {
  const Lens l = const0();
  EXPECT_TRUE(lens_equal(lens_compose(l, lens_identity(k2, k2)), l));
  const Lens c = lens_compose(const0(), swap2());
  EXPECT_EQ(c.get(idx(1)), idx(1));
  EXPECT_EQ(c.get(idx(0)), idx(1));
  // put(x, t) = put_first(x, put_second(get_first(x), t)), all 4 pairs.
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t t = 0; t < 2; ++t) {
      const std::size_t inner = 1 - t;
      EXPECT_EQ(c.put(idx(x), idx(t)), idx(x ^ inner));
    }
  }
}

TEST(Lens, ComposeRejectsBoundaryMismatch) {
  const Lens a = lens_identity(k2, k2);
  const Lens b = lens_identity(FinSpace::range(3), k2);
  try {
    lens_compose(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTypeMismatch);
  }
}

TEST(Lens, TensorExamples) {
  const Lens id = lens_identity(k2, k2);
  const FinSpace k22 = FinSpace::product({k2, k2});
  EXPECT_TRUE(lens_equal(lens_tensor(id, id), lens_identity(k22, k22)));
  const Lens t = lens_tensor(swap2(), id);
  EXPECT_EQ(t.get(pair(idx(0), idx(1))), pair(idx(1), idx(1)));
  for (const Value& x : enumerate(k22)) {
    for (const Value& r : enumerate(k22)) {
      EXPECT_EQ(t.put(x, r), pair(idx(1 - r[0].as_index()), r[1]));
    }
  }
}

TEST(Lens, EqualityExamples) {
  const Lens id = lens_identity(k2, FinSpace::unit());
  EXPECT_TRUE(lens_equal(id, id));
  const Lens swap(k2, FinSpace::unit(), k2, FinSpace::unit(),
                  [](const Value& v) { return idx(1 - v.as_index()); },
                  [](const Value&, const Value& r) { return r; });
  EXPECT_FALSE(lens_equal(id, swap));
  try {
    lens_equal(id, lens_identity(k2, k2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotComparable);
  }
}

TEST(Lens, EqualityProbesRewardPositions) {
  const Lens a = lens_identity(k2, kR);
  const Lens b(k2, kR, k2, kR, [](const Value& v) { return v; },
               [](const Value&, const Value& r) {
                 return r.rewards()[0] == Rational(2) ? Value::rewards({Rational(0)}) : r;
               });
  EXPECT_TRUE(lens_equal(a, b, {Rational(-1), Rational(0), Rational(1)}));
  EXPECT_FALSE(lens_equal(a, b));
}

TEST(LensLaws, CategoryLaws) {
  testing::Rng rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<FinSpace> sp;
    for (int i = 0; i < 8; ++i) sp.push_back(small_space(rng));
    const Lens l1 = random_lens(rng, sp[0], sp[1], sp[2], sp[3]);
    const Lens l2 = random_lens(rng, sp[2], sp[3], sp[4], sp[5]);
    const Lens l3 = random_lens(rng, sp[4], sp[5], sp[6], sp[7]);
    EXPECT_TRUE(lens_equal(lens_compose(lens_compose(l1, l2), l3), lens_compose(l1, lens_compose(l2, l3))));
    EXPECT_TRUE(lens_equal(lens_compose(lens_identity(sp[0], sp[1]), l1), l1));
    EXPECT_TRUE(lens_equal(lens_compose(l1, lens_identity(sp[2], sp[3])), l1));
  }
}

TEST(LensLaws, TensorOfIdentitiesIsIdentity) {
  testing::Rng rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const FinSpace a = small_space(rng), b = small_space(rng), c = small_space(rng), d = small_space(rng);
    EXPECT_TRUE(lens_equal(lens_tensor(lens_identity(a, b), lens_identity(c, d)),
                           lens_identity(FinSpace::product({a, c}), FinSpace::product({b, d}))));
  }
}

TEST(LensLaws, TensorIsFunctorial) {
  testing::Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<FinSpace> sp;
    for (int i = 0; i < 12; ++i) sp.push_back(pick(rng, 0, 1) ? FinSpace::range(pick(rng, 1, 2)) : FinSpace::unit());
    const Lens a1 = random_lens(rng, sp[0], sp[1], sp[2], sp[3]);
    const Lens a2 = random_lens(rng, sp[2], sp[3], sp[4], sp[5]);
    const Lens b1 = random_lens(rng, sp[6], sp[7], sp[8], sp[9]);
    const Lens b2 = random_lens(rng, sp[8], sp[9], sp[10], sp[11]);
    EXPECT_TRUE(lens_equal(lens_tensor(lens_compose(a1, a2), lens_compose(b1, b2)),
                           lens_compose(lens_tensor(a1, b1), lens_tensor(a2, b2))));
  }
}

TEST(ParamLens, RejectsBadUnderlying) {
  EXPECT_THROW(ParamLens(k2, kR, lens_identity(k2, kR)), Error);
}

TEST(ParamLens, UnitParametrisedCompositionIsPlainComposition) {
  testing::Rng rng(24);
  const Lens a = random_lens(rng, k2, k2, FinSpace::range(3), k2);
  const Lens b = random_lens(rng, FinSpace::range(3), k2, k2, FinSpace::unit());
  const ParamLens c = plens_compose(ParamLens::from_lens(a), ParamLens::from_lens(b));
  EXPECT_EQ(c.p(), FinSpace::product({FinSpace::unit(), FinSpace::unit()}));
  const Lens plain = lens_compose(a, b);
  const Value units = pair(Value::point(), Value::point());
  for (const Value& x : enumerate(k2)) {
    EXPECT_EQ(c.get(units, x), plain.get(x));
    EXPECT_EQ(c.put(units, x, Value::point()), pair(units, plain.put(x, Value::point())));
  }
}

TEST(ParamLens, TwoDecisionStagesInSequence) {
  const ParamLens first = dec_stage(2, FinSpace::unit());
  const ParamLens second = dec_stage(2, k2);
  const ParamLens both = plens_compose(first, second);
  EXPECT_EQ(both.p(), FinSpace::product({k2, k2}));
  EXPECT_EQ(both.q(), FinSpace::product({kR, kR}));
  const Value u = Value::rewards({Rational(3, 2)});
  for (const Value& p : enumerate(both.p())) {
    EXPECT_EQ(both.get(p, Value::point()), p[1]);
    EXPECT_EQ(both.put(p, Value::point(), u), pair(pair(u, u), u));
  }
}

TEST(ParamLens, ReparametriseAlongIdentity) {
  const ParamLens l = dec_stage(3, FinSpace::unit());
  EXPECT_TRUE(plens_equal(reparametrise(lens_identity(l.p(), l.q()), l), l));
}

TEST(ParamLens, ReparametriseAlongClone) {
  const FinSpace mm = FinSpace::product({k2, k2});
  const ParamLens l(mm, kR,
                    Lens(FinSpace::product({mm, FinSpace::unit()}), FinSpace::product({kR, kR}), mm, kR,
                         [](const Value& v) { return v[0]; },
                         [](const Value&, const Value& r) { return pair(r, r); }));
  const ParamLens cloned = reparametrise(clone_lens_simple(k2, kR), l);
  EXPECT_EQ(cloned.p(), k2);
  EXPECT_EQ(cloned.q(), kR);
  EXPECT_EQ(cloned.get(idx(1), Value::point()), pair(idx(1), idx(1)));
}

TEST(ParamLens, ReparametriseAlongResum) {
  const FinSpace rr = FinSpace::product({kR, kR});
  const ParamLens l(k2, rr,
                    Lens(FinSpace::product({k2, FinSpace::unit()}), FinSpace::product({rr, FinSpace::unit()}),
                         FinSpace::unit(), rr, [](const Value&) { return Value::point(); },
                         [](const Value&, const Value& r) { return pair(r, Value::point()); }));
  const ParamLens summed = reparametrise(resum_lens(k2, kR, 2), l);
  const Value out = summed.put(idx(0), Value::point(),
                               pair(Value::rewards({Rational(3)}), Value::rewards({Rational(4)})));
  EXPECT_EQ(out[0], Value::rewards({Rational(7)}));
}

TEST(ParamLens, ReparametriseRejectsMismatch) {
  EXPECT_THROW(reparametrise(lens_identity(FinSpace::range(3), kR), dec_stage(2, FinSpace::unit())), Error);
}

TEST(ParamLens, TensorExamples) {
  const ParamLens u = ParamLens::from_lens(lens_identity(k2, k2));
  const ParamLens uu = plens_tensor(u, u);
  const FinSpace unit2 = FinSpace::product({FinSpace::unit(), FinSpace::unit()});
  EXPECT_EQ(uu.p(), unit2);
  EXPECT_EQ(uu.q(), unit2);

  const ParamLens t = plens_tensor(dec_stage(2, FinSpace::unit()), dec_stage(3, FinSpace::unit()));
  EXPECT_EQ(t.p(), FinSpace::product({k2, FinSpace::range(3)}));
  const auto params = enumerate(t.p());
  ASSERT_EQ(params.size(), 6u);
  const Value xs = pair(Value::point(), Value::point());
  for (const Value& p : params) EXPECT_EQ(t.get(p, xs), p);
  const Value a = Value::rewards({Rational(1)}), b = Value::rewards({Rational(2)});
  EXPECT_EQ(t.put(params[4], xs, pair(a, b)), pair(pair(a, b), pair(a, b)));
}

TEST(ParamLensLaws, CompositionAssociativeUpToReassociation) {
  testing::Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<FinSpace> sp;
    for (int i = 0; i < 14; ++i) sp.push_back(pick(rng, 0, 2) ? FinSpace::range(pick(rng, 1, 2)) : FinSpace::unit());
    const ParamLens k = random_plens(rng, sp[0], sp[1], sp[6], sp[7], sp[8], sp[9]);
    const ParamLens l = random_plens(rng, sp[2], sp[3], sp[8], sp[9], sp[10], sp[11]);
    const ParamLens m = random_plens(rng, sp[4], sp[5], sp[10], sp[11], sp[12], sp[13]);
    const ParamLens left = plens_compose(plens_compose(k, l), m);
    const ParamLens right = plens_compose(k, plens_compose(l, m));
    const Lens assoc = lens_associator(sp[0], sp[2], sp[4], sp[1], sp[3], sp[5]);
    EXPECT_TRUE(plens_equal(reparametrise(assoc, left), right));
  }
}

TEST(ParamLensLaws, ReparametrisationIsFunctorial) {
  testing::Rng rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<FinSpace> sp;
    for (int i = 0; i < 10; ++i) sp.push_back(small_space(rng));
    const ParamLens l = random_plens(rng, sp[0], sp[1], sp[2], sp[3], sp[4], sp[5]);
    const Lens w2 = random_lens(rng, sp[6], sp[7], sp[0], sp[1]);
    const Lens w1 = random_lens(rng, sp[8], sp[9], sp[6], sp[7]);
    EXPECT_TRUE(plens_equal(reparametrise(lens_compose(w1, w2), l), reparametrise(w1, reparametrise(w2, l))));
    EXPECT_TRUE(plens_equal(reparametrise(lens_identity(sp[0], sp[1]), l), l));
  }
}

}  // namespace
}  // namespace ogk
