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
#include "ogk/exform.h"

#include <algorithm>
#include <map>

#include "ogk/error.h"

namespace ogk {
namespace {

std::size_t find_player(const std::vector<PlayerId>& players, const PlayerId& p) {
  const auto it = std::find(players.begin(), players.end(), p);
  if (it == players.end()) throw Error(ErrorCode::kUnknownPlayer, "unknown player " + p);
  return static_cast<std::size_t>(it - players.begin());
}

void check_rewards(const std::vector<Rational>& rewards, std::size_t players) {
  if (rewards.size() != players) {
    throw Error(ErrorCode::kInvalidArgument, "leaf has " + std::to_string(rewards.size()) +
                                                 " rewards for " + std::to_string(players) +
                                                 " players");
  }
}

void check_pet(const PETree& t, std::size_t players) {
  if (t.is_leaf()) return check_rewards(t.rewards(), players);
  if (t.player() >= players) throw Error(ErrorCode::kUnknownPlayer, "node owner out of range");
  for (const auto& c : t.children()) check_pet(c, players);
}

void check_iet(const IETree& t, const InfoSetTable& table, std::size_t players) {
  if (t.is_leaf()) return check_rewards(t.rewards(), players);
  if (t.infoset() >= table.size()) {
    throw Error(ErrorCode::kInvalidArgument, "node refers to an undeclared information set");
  }
  if (t.arity() != table[t.infoset()].arity) {
    throw Error(ErrorCode::kInvalidArgument,
                "node has " + std::to_string(t.arity()) + " children but information set " +
                    table[t.infoset()].name + " has " +
                    std::to_string(table[t.infoset()].arity) + " moves");
  }
  for (const auto& c : t.children()) check_iet(c, table, players);
}

FinSpace strategies_at(const PETree& t, std::size_t player) {
  if (t.is_leaf()) return FinSpace::unit();
  std::vector<FinSpace> below;
  for (const auto& c : t.children()) below.push_back(strategies_at(c, player));
  return FinSpace::product({t.player() == player ? FinSpace::range(t.arity()) : FinSpace::unit(),
                            FinSpace::product(std::move(below))});
}

FinSpace profiles_at(const PETree& t) {
  if (t.is_leaf()) return FinSpace::unit();
  std::vector<FinSpace> below;
  for (const auto& c : t.children()) below.push_back(profiles_at(c));
  return FinSpace::product({FinSpace::range(t.arity()), FinSpace::product(std::move(below))});
}

FinSpace paths_at(const PETree& t) {
  if (t.is_leaf()) return FinSpace::unit();
  std::vector<FinSpace> below;
  for (const auto& c : t.children()) below.push_back(paths_at(c));
  return FinSpace::sum(std::move(below));
}

Value play_at(const PETree& t, const Value& profile) {
  if (t.is_leaf()) return Value::point();
  const std::size_t m = profile[0].as_index();
  return Value::tagged(m, play_at(t.child(m), profile[1][m]));
}

template <typename Tree>
const std::vector<Rational>& payoff_at(const Tree& t, const Value& path) {
  if (t.is_leaf()) return t.rewards();
  return payoff_at(t.child(path.tag()), path.item());
}

Value strategy_of(const PETree& t, const Value& profile, std::size_t player) {
  if (t.is_leaf()) return Value::point();
  std::vector<Value> below;
  for (std::size_t m = 0; m < t.arity(); ++m) {
    below.push_back(strategy_of(t.child(m), profile[1][m], player));
  }
  return Value::tuple({t.player() == player ? profile[0] : Value::point(),
                       Value::tuple(std::move(below))});
}

Value assemble(const PETree& t, const std::vector<Value>& strategies) {
  if (t.is_leaf()) return Value::point();
  std::vector<Value> below;
  for (std::size_t m = 0; m < t.arity(); ++m) {
    std::vector<Value> sub;
    sub.reserve(strategies.size());
    for (const auto& s : strategies) sub.push_back(s[1][m]);
    below.push_back(assemble(t.child(m), sub));
  }
  return Value::tuple({strategies[t.player()][0], Value::tuple(std::move(below))});
}

void collect_infosets(const IETree& t, std::vector<std::size_t>& order, std::vector<bool>& seen) {
  if (t.is_leaf()) return;
  if (!seen[t.infoset()]) {
    seen[t.infoset()] = true;
    order.push_back(t.infoset());
  }
  for (const auto& c : t.children()) collect_infosets(c, order, seen);
}

std::size_t count_uses(const IETree& t, std::vector<std::size_t>& uses) {
  if (t.is_leaf()) return 0;
  ++uses[t.infoset()];
  std::size_t total = 1;
  for (const auto& c : t.children()) total += count_uses(c, uses);
  return total;
}

PETree pet_of(const IETree& t, const InfoSetTable& table) {
  if (t.is_leaf()) return PETree::leaf(t.rewards());
  std::vector<PETree> children;
  for (const auto& c : t.children()) children.push_back(pet_of(c, table));
  return PETree::node(table[t.infoset()].owner, std::move(children));
}

IETree iet_of(const PETree& t, InfoSetTable& table) {
  if (t.is_leaf()) return IETree::leaf(t.rewards());
  const std::size_t id = table.size();
  table.push_back(InfoSet{"n" + std::to_string(id), t.player(), t.arity()});
  std::vector<IETree> children;
  for (const auto& c : t.children()) children.push_back(iet_of(c, table));
  return IETree::node(id, std::move(children));
}

Value play_iet_at(const IETree& t, const Value& profile, const std::vector<std::size_t>& position) {
  if (t.is_leaf()) return Value::point();
  const std::size_t m = profile[position[t.infoset()]].as_index();
  return Value::tagged(m, play_iet_at(t.child(m), profile, position));
}

std::vector<Value> sort_canonical(const FinSpace& space, std::vector<Value> values) {
  std::sort(values.begin(), values.end(), [&space](const Value& a, const Value& b) {
    return rank(space, a) < rank(space, b);
  });
  return values;
}

}  // namespace

PETree PETree::leaf(std::vector<Rational> rewards) {
  Rep rep;
  rep.rewards = std::move(rewards);
  return PETree(std::make_shared<const Rep>(std::move(rep)));
}

PETree PETree::node(std::size_t player, std::vector<PETree> children) {
  if (children.empty()) throw Error(ErrorCode::kInvalidArgument, "a node needs at least one child");
  Rep rep;
  rep.label = player;
  rep.children = std::move(children);
  return PETree(std::make_shared<const Rep>(std::move(rep)));
}

IETree IETree::leaf(std::vector<Rational> rewards) {
  Rep rep;
  rep.rewards = std::move(rewards);
  return IETree(std::make_shared<const Rep>(std::move(rep)));
}

IETree IETree::node(std::size_t infoset, std::vector<IETree> children) {
  if (children.empty()) throw Error(ErrorCode::kInvalidArgument, "a node needs at least one child");
  Rep rep;
  rep.label = infoset;
  rep.children = std::move(children);
  return IETree(std::make_shared<const Rep>(std::move(rep)));
}

PerfectGame::PerfectGame(std::vector<PlayerId> players_in, PETree tree_in)
    : players(std::move(players_in)), tree(std::move(tree_in)) {
  check_pet(tree, players.size());
}

std::size_t PerfectGame::player_index(const PlayerId& p) const { return find_player(players, p); }

ImperfectGame::ImperfectGame(std::vector<PlayerId> players_in, InfoSetTable infosets_in,
                             IETree tree_in)
    : players(std::move(players_in)), infosets(std::move(infosets_in)), tree(std::move(tree_in)) {
  for (const auto& info : infosets) {
    if (info.owner >= players.size()) {
      throw Error(ErrorCode::kUnknownPlayer, "information set " + info.name + " has no owner");
    }
    if (info.arity == 0) {
      throw Error(ErrorCode::kInvalidArgument, "information set " + info.name + " has no moves");
    }
  }
  check_iet(tree, infosets, players.size());
}

std::size_t ImperfectGame::player_index(const PlayerId& p) const { return find_player(players, p); }

FinSpace strategies_pet(const PerfectGame& g, std::size_t player) {
  if (player >= g.players.size()) throw Error(ErrorCode::kUnknownPlayer, "player index out of range");
  return strategies_at(g.tree, player);
}

FinSpace strategies_pet(const PerfectGame& g, const PlayerId& player) {
  return strategies_at(g.tree, g.player_index(player));
}

FinSpace profiles_pet(const PerfectGame& g) { return profiles_at(g.tree); }

FinSpace player_profiles_pet(const PerfectGame& g) {
  std::vector<FinSpace> parts;
  for (std::size_t p = 0; p < g.players.size(); ++p) parts.push_back(strategies_at(g.tree, p));
  return FinSpace::player_indexed(g.players, std::move(parts));
}

FinSpace paths_pet(const PerfectGame& g) { return paths_at(g.tree); }

std::vector<Rational> payoff_pet(const PerfectGame& g, const Value& path) {
  expect_type(path, paths_pet(g), "payoff path");
  return payoff_at(g.tree, path);
}

Value play_pet(const PerfectGame& g, const Value& profile) {
  expect_type(profile, profiles_pet(g), "play profile");
  return play_at(g.tree, profile);
}

Value pet_profile_by_player(const PerfectGame& g, const Value& profile) {
  std::vector<Value> items;
  for (std::size_t p = 0; p < g.players.size(); ++p) items.push_back(strategy_of(g.tree, profile, p));
  return Value::by_player(std::move(items));
}

Value pet_profile_from_players(const PerfectGame& g, const Value& by_player) {
  return assemble(g.tree, by_player.items());
}

std::vector<Value> nash_oracle_pet(const PerfectGame& g, std::uint64_t cap) {
  const FinSpace by_player_space = player_profiles_pet(g);
  std::vector<std::vector<Value>> deviations;
  for (std::size_t p = 0; p < g.players.size(); ++p) {
    deviations.push_back(enumerate(strategies_at(g.tree, p), cap));
  }
  // Best deviation payoff per player, keyed by the others' strategies.
  std::vector<std::map<Value, Rational>> best(g.players.size());
  std::vector<Value> out;
  for (const auto& profile : enumerate(profiles_at(g.tree), cap)) {
    const auto& current = payoff_at(g.tree, play_at(g.tree, profile));
    const Value split = pet_profile_by_player(g, profile);
    bool nash = true;
    for (std::size_t p = 0; p < g.players.size() && nash; ++p) {
      const auto [it, fresh] = best[p].try_emplace(with_item(split, p, Value::point()), current[p]);
      if (fresh) {
        for (const auto& alternative : deviations[p]) {
          const Value deviated = assemble(g.tree, with_item(split, p, alternative).items());
          it->second = std::max(it->second, payoff_at(g.tree, play_at(g.tree, deviated))[p]);
        }
      }
      nash = !(it->second > current[p]);
    }
    if (nash) out.push_back(split);
  }
  return sort_canonical(by_player_space, std::move(out));
}

ImperfectGame pet_as_iet(const PerfectGame& g) {
  InfoSetTable table;
  IETree tree = iet_of(g.tree, table);
  return ImperfectGame(g.players, std::move(table), std::move(tree));
}

std::vector<std::size_t> infosets_in_tree(const ImperfectGame& g) {
  std::vector<std::size_t> order;
  std::vector<bool> seen(g.infosets.size(), false);
  collect_infosets(g.tree, order, seen);
  return order;
}

FinSpace strategies_iet(const ImperfectGame& g, std::size_t player) {
  if (player >= g.players.size()) throw Error(ErrorCode::kUnknownPlayer, "player index out of range");
  std::vector<FinSpace> moves;
  for (std::size_t i : infosets_in_tree(g)) {
    if (g.infosets[i].owner == player) moves.push_back(FinSpace::range(g.infosets[i].arity));
  }
  return FinSpace::product(std::move(moves));
}

FinSpace strategies_iet(const ImperfectGame& g, const PlayerId& player) {
  return strategies_iet(g, g.player_index(player));
}

FinSpace profiles_iet(const ImperfectGame& g) {
  std::vector<FinSpace> moves;
  for (std::size_t i : infosets_in_tree(g)) moves.push_back(FinSpace::range(g.infosets[i].arity));
  return FinSpace::product(std::move(moves));
}

FinSpace player_profiles_iet(const ImperfectGame& g) {
  std::vector<FinSpace> parts;
  for (std::size_t p = 0; p < g.players.size(); ++p) parts.push_back(strategies_iet(g, p));
  return FinSpace::player_indexed(g.players, std::move(parts));
}

FinSpace paths_iet(const ImperfectGame& g) { return paths_pet(iet_to_pet(g)); }

Value iet_profile_by_player(const ImperfectGame& g, const Value& profile) {
  const auto order = infosets_in_tree(g);
  std::vector<std::vector<Value>> per_player(g.players.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    per_player[g.infosets[order[k]].owner].push_back(profile[k]);
  }
  std::vector<Value> items;
  for (auto& moves : per_player) items.push_back(Value::tuple(std::move(moves)));
  return Value::by_player(std::move(items));
}

Value iet_profile_from_players(const ImperfectGame& g, const Value& by_player) {
  const auto order = infosets_in_tree(g);
  std::vector<std::size_t> cursor(g.players.size(), 0);
  std::vector<Value> flat;
  for (std::size_t i : order) {
    const std::size_t owner = g.infosets[i].owner;
    flat.push_back(by_player[owner][cursor[owner]++]);
  }
  return Value::tuple(std::move(flat));
}

Value play_iet(const ImperfectGame& g, const Value& profile) {
  expect_type(profile, profiles_iet(g), "play profile");
  const auto order = infosets_in_tree(g);
  std::vector<std::size_t> position(g.infosets.size(), 0);
  for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = k;
  return play_iet_at(g.tree, profile, position);
}

std::vector<Rational> payoff_iet(const ImperfectGame& g, const Value& path) {
  expect_type(path, paths_iet(g), "payoff path");
  return payoff_at(g.tree, path);
}

PerfectGame iet_to_pet(const ImperfectGame& g) { return PerfectGame(g.players, pet_of(g.tree, g.infosets)); }

std::vector<Value> nash_oracle_iet(const ImperfectGame& g, std::uint64_t cap) {
  const auto order = infosets_in_tree(g);
  std::vector<std::size_t> position(g.infosets.size(), 0);
  for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = k;
  // Slots of the flat profile owned by each player.
  std::vector<std::vector<std::size_t>> owned(g.players.size());
  for (std::size_t k = 0; k < order.size(); ++k) owned[g.infosets[order[k]].owner].push_back(k);
  std::vector<std::vector<Value>> deviations;
  for (std::size_t p = 0; p < g.players.size(); ++p) {
    deviations.push_back(enumerate(strategies_iet(g, p), cap));
  }
  auto outcome = [&](const Value& flat) -> const std::vector<Rational>& {
    return payoff_at(g.tree, play_iet_at(g.tree, flat, position));
  };
  std::vector<std::map<Value, Rational>> best(g.players.size());
  std::vector<Value> out;
  for (const auto& profile : enumerate(profiles_iet(g), cap)) {
    const auto& current = outcome(profile);
    bool nash = true;
    for (std::size_t p = 0; p < g.players.size() && nash; ++p) {
      std::vector<Value> others = profile.items();
      for (std::size_t k : owned[p]) others[k] = Value::point();
      const auto [it, fresh] = best[p].try_emplace(Value::tuple(others), current[p]);
      if (fresh) {
        for (const auto& alternative : deviations[p]) {
          std::vector<Value> moves = others;
          for (std::size_t j = 0; j < owned[p].size(); ++j) moves[owned[p][j]] = alternative[j];
          it->second = std::max(it->second, outcome(Value::tuple(std::move(moves)))[p]);
        }
      }
      nash = !(it->second > current[p]);
    }
    if (nash) out.push_back(iet_profile_by_player(g, profile));
  }
  return sort_canonical(player_profiles_iet(g), std::move(out));
}

std::vector<std::size_t> unused_infosets(const ImperfectGame& g) {
  std::vector<std::size_t> uses(g.infosets.size(), 0);
  count_uses(g.tree, uses);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < uses.size(); ++i) {
    if (uses[i] == 0) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> idle_players(const ImperfectGame& g) {
  std::vector<bool> plays(g.players.size(), false);
  for (std::size_t i : infosets_in_tree(g)) plays[g.infosets[i].owner] = true;
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < plays.size(); ++p) {
    if (!plays[p]) out.push_back(p);
  }
  return out;
}

bool is_perfect_information(const ImperfectGame& g) {
  std::vector<std::size_t> uses(g.infosets.size(), 0);
  count_uses(g.tree, uses);
  return std::all_of(uses.begin(), uses.end(), [](std::size_t u) { return u <= 1; });
}

FinSpace NormalFormGame::action_profiles() const {
  std::vector<FinSpace> parts;
  for (std::size_t p = 0; p < players.size(); ++p) parts.push_back(action_space(p));
  return FinSpace::player_indexed(players, std::move(parts));
}

NormalFormGame NormalFormGame::from_table(std::vector<PlayerId> players,
                                          std::vector<std::size_t> action_counts,
                                          std::vector<std::vector<Rational>> table) {
  NormalFormGame nf{std::move(players), std::move(action_counts), nullptr};
  const FinSpace space = nf.action_profiles();
  if (table.size() != cardinality(space)) {
    throw Error(ErrorCode::kInvalidArgument, "payoff table does not cover every profile");
  }
  for (const auto& row : table) check_rewards(row, nf.players.size());
  nf.utility = [space, table = std::move(table)](const Value& profile) {
    return table.at(rank(space, profile));
  };
  return nf;
}

std::vector<Value> nash_oracle_normal_form(const NormalFormGame& nf, std::uint64_t cap) {
  std::vector<Value> out;
  for (const auto& profile : enumerate(nf.action_profiles(), cap)) {
    const auto current = nf.utility(profile);
    bool nash = true;
    for (std::size_t p = 0; p < nf.players.size() && nash; ++p) {
      for (std::size_t a = 0; a < nf.action_counts[p]; ++a) {
        if (nf.utility(with_item(profile, p, Value::index(a)))[p] > current[p]) {
          nash = false;
          break;
        }
      }
    }
    if (nash) out.push_back(profile);
  }
  return out;
}

}  // namespace ogk
