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
#ifndef OGK_EXFORM_H_
#define OGK_EXFORM_H_

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ogk/rational.h"
#include "ogk/space.h"
#include "ogk/value.h"

namespace ogk {

// Extensive-form tree with perfect information. Players are indices into the
// owning PerfectGame's player list.
class PETree {
 public:
  static PETree leaf(std::vector<Rational> rewards);
  static PETree node(std::size_t player, std::vector<PETree> children);

  bool is_leaf() const { return rep_->children.empty(); }
  const std::vector<Rational>& rewards() const { return rep_->rewards; }
  std::size_t player() const { return rep_->label; }
  std::size_t arity() const { return rep_->children.size(); }
  const std::vector<PETree>& children() const { return rep_->children; }
  const PETree& child(std::size_t m) const { return rep_->children.at(m); }

 private:
  struct Rep {
    std::vector<Rational> rewards;
    std::size_t label = 0;
    std::vector<PETree> children;
  };
  explicit PETree(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

// Throws kInvalidArgument unless every reward vector covers all players and
// every node names a known player.
struct PerfectGame {
  PerfectGame(std::vector<PlayerId> players, PETree tree);

  std::vector<PlayerId> players;
  PETree tree;

  std::size_t player_index(const PlayerId& p) const;  // throws kUnknownPlayer
};

struct InfoSet {
  std::string name;
  std::size_t owner = 0;
  std::size_t arity = 1;
};

using InfoSetTable = std::vector<InfoSet>;

// Extensive-form tree whose nodes are labelled by information sets.
class IETree {
 public:
  static IETree leaf(std::vector<Rational> rewards);
  static IETree node(std::size_t infoset, std::vector<IETree> children);

  bool is_leaf() const { return rep_->children.empty(); }
  const std::vector<Rational>& rewards() const { return rep_->rewards; }
  std::size_t infoset() const { return rep_->label; }
  std::size_t arity() const { return rep_->children.size(); }
  const std::vector<IETree>& children() const { return rep_->children; }
  const IETree& child(std::size_t m) const { return rep_->children.at(m); }

 private:
  struct Rep {
    std::vector<Rational> rewards;
    std::size_t label = 0;
    std::vector<IETree> children;
  };
  explicit IETree(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

// Throws kInvalidArgument on arity mismatches, unknown owners/infosets, or
// short reward vectors. Unused infosets and idle players are allowed.
struct ImperfectGame {
  ImperfectGame(std::vector<PlayerId> players, InfoSetTable infosets, IETree tree);

  std::vector<PlayerId> players;
  InfoSetTable infosets;
  IETree tree;

  std::size_t player_index(const PlayerId& p) const;
};

// --- Perfect information -------------------------------------------------

FinSpace strategies_pet(const PerfectGame& g, std::size_t player);
FinSpace strategies_pet(const PerfectGame& g, const PlayerId& player);
// Tree-shaped profiles: Node -> ([n] x prod_m profiles(child m)), Leaf -> 1.
FinSpace profiles_pet(const PerfectGame& g);
// Player-indexed profiles: PlayerIndexed(players, strategies_pet).
FinSpace player_profiles_pet(const PerfectGame& g);
FinSpace paths_pet(const PerfectGame& g);

std::vector<Rational> payoff_pet(const PerfectGame& g, const Value& path);
Value play_pet(const PerfectGame& g, const Value& profile);

// The bijection between tree-shaped and player-indexed profiles.
Value pet_profile_by_player(const PerfectGame& g, const Value& profile);
Value pet_profile_from_players(const PerfectGame& g, const Value& by_player);

// Exact Nash set (weak inequality) by exhaustive unilateral deviation, as
// player-indexed profiles in canonical order.
std::vector<Value> nash_oracle_pet(const PerfectGame& g, std::uint64_t cap = kDefaultCap);

// Every node becomes its own singleton information set, named n0, n1, ...
// in depth-first order.
ImperfectGame pet_as_iet(const PerfectGame& g);

// --- Imperfect information -----------------------------------------------

// Information sets that occur in the tree, by first depth-first occurrence.
std::vector<std::size_t> infosets_in_tree(const ImperfectGame& g);

FinSpace strategies_iet(const ImperfectGame& g, std::size_t player);
FinSpace strategies_iet(const ImperfectGame& g, const PlayerId& player);
// One move per occurring information set, in infosets_in_tree order.
FinSpace profiles_iet(const ImperfectGame& g);
FinSpace player_profiles_iet(const ImperfectGame& g);
FinSpace paths_iet(const ImperfectGame& g);

Value iet_profile_by_player(const ImperfectGame& g, const Value& profile);
Value iet_profile_from_players(const ImperfectGame& g, const Value& by_player);

Value play_iet(const ImperfectGame& g, const Value& profile);
std::vector<Rational> payoff_iet(const ImperfectGame& g, const Value& path);

PerfectGame iet_to_pet(const ImperfectGame& g);

std::vector<Value> nash_oracle_iet(const ImperfectGame& g, std::uint64_t cap = kDefaultCap);

// Declared information sets that never label a node, and players that own no
// occurring information set.
std::vector<std::size_t> unused_infosets(const ImperfectGame& g);
std::vector<std::size_t> idle_players(const ImperfectGame& g);

// True iff no information set labels more than one node.
bool is_perfect_information(const ImperfectGame& g);

// --- Normal form -----------------------------------------------------------

struct NormalFormGame {
  std::vector<PlayerId> players;
  std::vector<std::size_t> action_counts;
  // Reward vector for a profile in action_profiles().
  std::function<std::vector<Rational>(const Value&)> utility;

  FinSpace action_space(std::size_t player) const { return FinSpace::range(action_counts.at(player)); }
  FinSpace action_profiles() const;

  // Table of reward vectors listed in enumerate(action_profiles()) order.
  static NormalFormGame from_table(std::vector<PlayerId> players,
                                   std::vector<std::size_t> action_counts,
                                   std::vector<std::vector<Rational>> table);
};

std::vector<Value> nash_oracle_normal_form(const NormalFormGame& nf,
                                           std::uint64_t cap = kDefaultCap);

}  // namespace ogk

#endif  // OGK_EXFORM_H_
