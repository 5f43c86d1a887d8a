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
#include "ogk/translate.h"

#include <algorithm>

#include "ogk/error.h"

namespace ogk {
namespace {

std::size_t position_of(const std::vector<PlayerId>& players, const PlayerId& p) {
  const auto it = std::find(players.begin(), players.end(), p);
  if (it == players.end()) throw Error(ErrorCode::kUnknownPlayer, "missing player " + p);
  return static_cast<std::size_t>(it - players.begin());
}

Value split_rewards(const Value& vector) {
  std::vector<Value> items;
  for (const auto& r : vector.rewards()) items.push_back(Value::rewards({r}));
  return Value::by_player(std::move(items));
}

Arena leaf_arena(const std::vector<PlayerId>& players) {
  const FinSpace all = FinSpace::reward_space(players);
  const FinSpace omega =
      FinSpace::player_indexed(players, std::vector<FinSpace>(players.size(), FinSpace::unit()));
  const FinSpace coomega = scalar_rewards(players);
  Lens underlying(
      FinSpace::product({omega, FinSpace::unit()}), FinSpace::product({coomega, all}),
      FinSpace::unit(), all, [](const Value&) { return Value::point(); },
      [](const Value&, const Value& r) { return Value::tuple({split_rewards(r), r}); });
  return Arena(ParamLens(omega, coomega, std::move(underlying)));
}

Arena translate_node(const PETree& t, const std::vector<PlayerId>& players) {
  if (t.is_leaf()) return leaf_arena(players);
  const std::size_t n = t.arity();
  const FinSpace all = FinSpace::reward_space(players);

  const Arena dec = decision(FinSpace::range(n), all, players[t.player()]);
  const Lens codiagonal = lens_adapter(
      FinSpace::range(n), all, FinSpace::sum(std::vector<FinSpace>(n, FinSpace::unit())),
      FinSpace::sum(std::vector<FinSpace>(n, all)),
      [](const Value& m) { return Value::tagged(m.as_index(), Value::point()); },
      [](const Value& r) { return r.item(); });
  std::vector<Arena> branches;
  for (const auto& c : t.children()) branches.push_back(translate_node(c, players));
  const Arena continuation = externalize_players(external_choice(branches));
  const Arena staged = arena_seq(arena_seq(dec, lens_arena(codiagonal)), continuation);

  // discard: keep the decision's copy of the utility, drop the branch rewards.
  const auto& staged_players = staged.players();
  const std::size_t decider = position_of(staged_players, tag_player(0, tag_player(0, players[t.player()])));
  const Lens discard = lens_adapter(
      staged.omega(), all, staged.omega(), staged.coomega(), [](const Value& v) { return v; },
      [decider](const Value& r) { return r[decider]; });

  // regroup_p: {p} + P -> P, and split R^P into one reward per player.
  std::vector<std::size_t> continuing(players.size());
  std::vector<FinSpace> strategies;
  for (std::size_t q = 0; q < players.size(); ++q) {
    continuing[q] = position_of(staged_players, tag_player(1, players[q]));
    strategies.push_back(FinSpace::product(
        {q == t.player() ? FinSpace::range(n) : FinSpace::unit(), continuation.strategies(q)}));
  }
  const std::size_t owner = t.player();
  const std::size_t width = staged_players.size();
  const Lens regroup_p = lens_adapter(
      FinSpace::player_indexed(players, std::move(strategies)), scalar_rewards(players),
      staged.omega(), all,
      [continuing, decider, owner, width](const Value& v) {
        std::vector<Value> items(width);
        items[decider] = v[owner][0];
        for (std::size_t q = 0; q < continuing.size(); ++q) items[continuing[q]] = v[q][1];
        return Value::by_player(std::move(items));
      },
      split_rewards);
  return arena_reparametrise(lens_compose(regroup_p, discard), staged);
}

Value clone_strategy(const IETree& t, const InfoSetTable& table, std::size_t player,
                     const Value& moves, const std::vector<std::size_t>& slot) {
  if (t.is_leaf()) return Value::point();
  std::vector<Value> below;
  for (const auto& c : t.children()) below.push_back(clone_strategy(c, table, player, moves, slot));
  const bool mine = table[t.infoset()].owner == player;
  return Value::tuple({mine ? moves[slot[t.infoset()]] : Value::point(),
                       Value::tuple(std::move(below))});
}

}  // namespace

FinSpace scalar_rewards(const std::vector<PlayerId>& players) {
  std::vector<FinSpace> parts;
  for (const auto& p : players) parts.push_back(FinSpace::reward_space({p}));
  return FinSpace::player_indexed(players, std::move(parts));
}

Arena pet_to_arena(const PerfectGame& g) { return translate_node(g.tree, g.players); }

Context payoff_context(const PerfectGame& g) {
  return Context{Value::point(),
                 [g](const Value& path) { return Value::rewards(payoff_pet(g, path)); }};
}

OpenGame pet_to_game(const PerfectGame& g) { return with_argmax_players(pet_to_arena(g)); }

Lens clone_lens(const ImperfectGame& g) {
  const PerfectGame expanded = iet_to_pet(g);
  // Position of each occurring information set inside its owner's strategy.
  std::vector<std::size_t> slot(g.infosets.size(), 0);
  std::vector<std::size_t> next(g.players.size(), 0);
  for (std::size_t i : infosets_in_tree(g)) slot[i] = next[g.infosets[i].owner]++;
  const FinSpace rewards = scalar_rewards(g.players);
  return lens_adapter(
      player_profiles_iet(g), rewards, player_profiles_pet(expanded), rewards,
      [g, slot](const Value& s) {
        std::vector<Value> items;
        for (std::size_t p = 0; p < g.players.size(); ++p) {
          items.push_back(clone_strategy(g.tree, g.infosets, p, s[p], slot));
        }
        return Value::by_player(std::move(items));
      },
      [](const Value& r) { return r; });
}

OpenGame iet_to_game(const ImperfectGame& g) {
  const Arena expanded = pet_to_arena(iet_to_pet(g));
  return with_argmax_players(arena_reparametrise(clone_lens(g), expanded));
}

OpenGame normal_form_to_game(const NormalFormGame& nf) {
  const FinSpace actions = nf.action_profiles();
  const FinSpace rewards = scalar_rewards(nf.players);
  Lens underlying(
      FinSpace::product({actions, FinSpace::unit()}), FinSpace::product({rewards, FinSpace::unit()}),
      actions, rewards, [](const Value& v) { return v[0]; },
      [](const Value&, const Value& r) { return Value::tuple({r, Value::point()}); });
  return with_argmax_players(Arena(ParamLens(actions, rewards, std::move(underlying))));
}

Context normal_form_context(const NormalFormGame& nf) {
  return Context{Value::point(), [nf](const Value& a) {
                   std::vector<Value> items;
                   for (const auto& r : nf.utility(a)) items.push_back(Value::rewards({r}));
                   return Value::by_player(std::move(items));
                 }};
}

}  // namespace ogk
