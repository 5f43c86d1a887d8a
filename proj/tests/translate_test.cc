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

#include "ogk/arena.h"
#include "ogk/error.h"
#include "ogk/exform.h"
#include "ogk/translate.h"
#include "trees.h"

namespace ogk {
namespace {

using namespace ogk::testing;  // NOLINT

Value idx(std::size_t k) { return Value::index(k); }
Value path(std::vector<std::size_t> moves) {
  Value v = Value::point();
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) v = Value::tagged(*it, v);
  return v;
}

Value scalar_profile(const std::vector<Rational>& r) {
  std::vector<Value> items;
  for (const Rational& x : r) items.push_back(Value::rewards({x}));
  return Value::by_player(std::move(items));
}

Value by_player_of(const PerfectGame& g, const Flat& f) { return pet_profile_by_player(g, unflatten_pet(g, f)); }

std::set<Value> as_values(const std::vector<Value>& v) { return {v.begin(), v.end()}; }

TEST(PetToArena, LeafDuplicatesUtility) {
  const PerfectGame g({"a", "b"}, leaf({3, 4}));
  const Arena a = pet_to_arena(g);
  const Value profile = enumerate(a.omega()).front();
  EXPECT_EQ(cardinality(a.omega()), 1u);
  EXPECT_EQ(play(a, profile, Value::point()), Value::point());
  const Value u = Value::rewards({3, 4});
  const Coplay c = coplay(a, profile, Value::point(), u);
  EXPECT_EQ(c.coutility, u);
  const OpenGame game = pet_to_game(g);
  EXPECT_EQ(equilibria(game, payoff_context(g)).size(), 1u);
}

TEST(PetToArena, LeftExample) {
  const PerfectGame g = pet_left();
  const Arena a = pet_to_arena(g);
  EXPECT_EQ(a.players(), g.players);
  EXPECT_EQ(a.omega(), player_profiles_pet(g));
  EXPECT_EQ(a.y(), paths_pet(g));
  const Value lll = by_player_of(g, {0, 0, 0});
  EXPECT_EQ(play(a, lll, Value::point()), path({0, 0}));
  const Costate k = costate_of(pet_to_game(g), payoff_context(g));
  EXPECT_EQ(k(lll), scalar_profile({1, 3, 1}));
  for (const Value& w : enumerate(a.omega())) {
    EXPECT_EQ(play(a, w, Value::point()), play_pet(g, pet_profile_from_players(g, w)));
  }
  EXPECT_TRUE(as_values(equilibria(pet_to_game(g), payoff_context(g))).count(lll));
}

TEST(PetToArena, RightExample) {
  const PerfectGame g = pet_right();
  const Arena a = pet_to_arena(g);
  EXPECT_EQ(cardinality(a.strategies(0)), 4u);
  EXPECT_EQ(cardinality(a.strategies(1)), 2u);
  EXPECT_FALSE(as_values(equilibria(pet_to_game(g), payoff_context(g))).count(by_player_of(g, {0, 0, 0})));
}

TEST(PayoffContext, Examples) {
  const PerfectGame g = pet_left();
  const Context ctx = payoff_context(g);
  EXPECT_EQ(ctx.state, Value::point());
  EXPECT_EQ(ctx.continuation(path({0, 0})), Value::rewards({1, 3, 1}));
  for (const Value& p : enumerate(paths_pet(g))) EXPECT_EQ(ctx.continuation(p), Value::rewards(payoff_pet(g, p)));
  const PerfectGame single({"a"}, leaf({9}));
  EXPECT_EQ(payoff_context(single).continuation(Value::point()), Value::rewards({9}));
}

TEST(CloneLens, RightExampleCopiesTheMove) {
  const ImperfectGame g = iet_right();
  const PerfectGame p = iet_to_pet(g);
  const Lens c = clone_lens(g);
  const Value rl = iet_profile_by_player(g, unflatten_iet({1, 0}));
  const Flat expanded = flatten_pet(p, pet_profile_from_players(p, c.get(rl)));
  EXPECT_EQ(expanded, (Flat{1, 0, 0}));  // L at both p2 nodes
  const Value r = scalar_profile({2, 7});
  EXPECT_EQ(c.put(rl, r), r);
}

TEST(CloneLens, SingletonsGiveTheBijection) {
  const ImperfectGame g = iet_left();
  const PerfectGame p = iet_to_pet(g);
  const Lens c = clone_lens(g);
  std::set<Value> images;
  for (const Value& w : enumerate(c.x())) {
    images.insert(c.get(w));
    EXPECT_EQ(flatten_pet(p, pet_profile_from_players(p, c.get(w))), flatten_iet(iet_profile_from_players(g, w)));
  }
  EXPECT_EQ(images.size(), cardinality(c.y()));
}

TEST(IetToGame, Examples) {
  const ImperfectGame right = iet_right();
  const OpenGame gr = iet_to_game(right);
  const Context cr = payoff_context(iet_to_pet(right));
  const auto eq = equilibria(gr, cr);
  EXPECT_EQ(as_values(eq), as_values(nash_oracle_iet(right)));
  const Value rl = iet_profile_by_player(right, unflatten_iet({1, 0}));
  EXPECT_TRUE(as_values(eq).count(rl));
  EXPECT_EQ(costate_of(gr, cr)(rl), scalar_profile({5, 2}));
  EXPECT_EQ(eq.size(), 2u);

  const ImperfectGame left = iet_left();
  const auto eql = equilibria(iet_to_game(left), payoff_context(iet_to_pet(left)));
  EXPECT_TRUE(as_values(eql).count(iet_profile_by_player(left, unflatten_iet({0, 0, 1}))));
}

TEST(NormalFormGame, Examples) {
  const NormalFormGame pd = NormalFormGame::from_table({"a", "b"}, {2, 2}, {{-1, -1}, {-3, 0}, {0, -3}, {-2, -2}});
  EXPECT_EQ(equilibria(normal_form_to_game(pd), normal_form_context(pd)),
            std::vector<Value>{Value::by_player({idx(1), idx(1)})});
  const NormalFormGame mp = NormalFormGame::from_table({"a", "b"}, {2, 2}, {{1, -1}, {-1, 1}, {-1, 1}, {1, -1}});
  EXPECT_TRUE(equilibria(normal_form_to_game(mp), normal_form_context(mp)).empty());
  const NormalFormGame solo = NormalFormGame::from_table({"a"}, {3}, {{2}, {5}, {5}});
  EXPECT_EQ(equilibria(normal_form_to_game(solo), normal_form_context(solo)),
            (std::vector<Value>{Value::by_player({idx(1)}), Value::by_player({idx(2)})}));
}

TEST(NormalFormGame, RandomThreePlayerAgreesWithOracle) {
  Rng rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<Rational>> table(12);
    for (auto& row : table) {
      for (int p = 0; p < 3; ++p) row.emplace_back(static_cast<std::int64_t>(pick(rng, 0, 4)));
    }
    const NormalFormGame nf = NormalFormGame::from_table({"a", "b", "c"}, {2, 3, 2}, table);
    EXPECT_EQ(as_values(equilibria(normal_form_to_game(nf), normal_form_context(nf))),
              as_values(nash_oracle_normal_form(nf)));
  }
}

TEST(TranslateProperties, ArenaPlayMatchesTreePlay) {
  Rng rng(72);
  for (int trial = 0; trial < 60; ++trial) {
    const PerfectGame g = random_pet(rng, {3, 3, 3, 4, 256});
    const Arena a = pet_to_arena(g);
    ASSERT_EQ(a.omega(), player_profiles_pet(g));
    for (const Value& w : enumerate(a.omega())) {
      EXPECT_EQ(play(a, w, Value::point()), play_pet(g, pet_profile_from_players(g, w)));
    }
  }
}

// Preorder node -> information set, matching flatten_pet's slot order.
void node_sets(const IETree& t, std::vector<std::size_t>& out) {
  if (t.is_leaf()) return;
  out.push_back(t.infoset());
  for (const auto& c : t.children()) node_sets(c, out);
}

TEST(TranslateProperties, CloneIsConstantOnInfosets) {
  Rng rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    const ImperfectGame g = random_iet(rng, {3, 3, 3, 4, 256});
    const PerfectGame p = iet_to_pet(g);
    const Lens c = clone_lens(g);
    std::vector<std::size_t> sets;
    node_sets(g.tree, sets);
    for (const Value& w : enumerate(c.x())) {
      const Flat moves = flatten_pet(p, pet_profile_from_players(p, c.get(w)));
      std::map<std::size_t, std::size_t> seen;
      for (std::size_t n = 0; n < sets.size(); ++n) {
        const auto [it, fresh] = seen.emplace(sets[n], moves[n]);
        EXPECT_EQ(it->second, moves[n]);
      }
    }
  }
}

TEST(TranslateProperties, EquilibriaMatchOraclesOnRandomTrees) {
  Rng rng(74);
  for (int trial = 0; trial < 40; ++trial) {
    const PerfectGame g = random_pet(rng, {3, 3, 3, 4, 512});
    EXPECT_EQ(as_values(equilibria(pet_to_game(g), payoff_context(g))), as_values(nash_oracle_pet(g)));
    const ImperfectGame i = random_iet(rng, {3, 3, 3, 4, 512});
    EXPECT_EQ(as_values(equilibria(iet_to_game(i), payoff_context(iet_to_pet(i)))), as_values(nash_oracle_iet(i)));
  }
}

}  // namespace
}  // namespace ogk
