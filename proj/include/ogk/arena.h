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
#ifndef OGK_ARENA_H_
#define OGK_ARENA_H_

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "ogk/lens.h"
#include "ogk/selection.h"
#include "ogk/space.h"
#include "ogk/value.h"

namespace ogk {

// A parametrised lens whose parameters are strategy profiles (Omega) and
// reward vectors (CoOmega). It "has players" when both parameter spaces are
// PlayerIndexed over the same player list.
class Arena {
 public:
  explicit Arena(ParamLens plens) : plens_(std::move(plens)) {}

  const ParamLens& plens() const { return plens_; }
  const FinSpace& omega() const { return plens_.p(); }
  const FinSpace& coomega() const { return plens_.q(); }
  const FinSpace& x() const { return plens_.x(); }
  const FinSpace& s() const { return plens_.s(); }
  const FinSpace& y() const { return plens_.y(); }
  const FinSpace& r() const { return plens_.r(); }

  bool has_players() const;
  // Throw kTypeMismatch when the arena has no player factorization.
  const std::vector<PlayerId>& players() const;
  const FinSpace& strategies(std::size_t player) const;
  const FinSpace& rewards(std::size_t player) const;

 private:
  ParamLens plens_;
};

struct Coplay {
  Value coutility;  // in S
  Value rewards;    // in CoOmega
};

Value play(const Arena& a, const Value& profile, const Value& state);
Coplay coplay(const Arena& a, const Value& profile, const Value& state, const Value& utility);

// Player ids of composites are tagged with the side they came from.
PlayerId tag_player(std::size_t side, const PlayerId& player);

// Dec(M, R): one player picks a move; the utility is copied to both the
// coutility and the player's reward.
Arena decision(FinSpace moves, FinSpace rewards, PlayerId player);

// A plain lens as an arena with zero players.
Arena lens_arena(const Lens& lens);

// Sequential composition. With players on both sides the result has the
// tagged disjoint union of players (0.p then 1.q); otherwise params are the
// raw product.
Arena arena_seq(const Arena& a, const Arena& b);
Arena arena_tensor(const Arena& a, const Arena& b);

// Reparametrise along a lens onto the arena's own parameters.
Arena arena_reparametrise(const Lens& w, const Arena& a);

// The reindexing lens for regrouping along r : players(a) -> new_players:
// strategies of q are the product of those of r^{-1}(q), in a's player order.
Lens regroup_lens(const Arena& a, const std::vector<PlayerId>& new_players,
                  const std::map<PlayerId, PlayerId>& r);
Arena regroup(const Arena& a, const std::vector<PlayerId>& new_players,
              const std::map<PlayerId, PlayerId>& r);

// The environment chooses the arena: Omega = prod Omega_i, CoOmega = sum
// CoOmega_i, boundaries summed. Throws kRewardSpaceMismatch unless every
// member has the same utility space R.
Arena external_choice(const std::vector<Arena>& family);

// For an external choice over members that all have players P: redistributes
// to players P with Omega_p = prod_i Omega_{i,p}, CoOmega_p = sum_i CoOmega_{i,p}.
Arena externalize_players(const Arena& choice);

// The players choose the arena: Omega = sum Omega_i, X = prod X_i.
Arena internal_choice(const std::vector<Arena>& family);

// Zero-player arena (1, S) -> (1, R) that applies to_coutility on the way back.
Arena stop_arena(FinSpace utilities, FinSpace coutilities,
                 std::function<Value(const Value&)> to_coutility);

// One player decides go (Index 0, forwards x as Tagged(0, x)) or stop
// (Index 1, Tagged(1, *)); the coplay erases the tag.
Arena switch_arena(FinSpace states, FinSpace coutilities, PlayerId player);

// switch ; (a + stop): the switch player may stop before a is played.
Arena stoppable(const Arena& a, std::function<Value(const Value&)> to_coutility,
                PlayerId player);

// Majority vote over which arena of an internal choice to play. Each player's
// strategy is (vote, strategy for every arena); the winner needs strictly
// more than half the votes, else default_arena is played.
Lens vote_lens(const std::vector<PlayerId>& players,
               const std::vector<std::vector<FinSpace>>& strategies,  // [arena][player]
               const std::vector<FinSpace>& rewards,                  // [player]
               std::size_t default_arena);

// get = id, put sums a tuple of n reward vectors.
Lens resum_lens(FinSpace strategies, FinSpace reward, std::size_t n);

// get = diagonal, put = second projection.
Lens clone_lens_simple(FinSpace moves, FinSpace rewards);

// An arena with players together with one selection function per player.
class OpenGame {
 public:
  OpenGame(Arena arena, std::vector<SelectionFn> selections);

  const Arena& arena() const { return arena_; }
  const std::vector<SelectionFn>& selections() const { return selections_; }
  SelectionFn selection() const;

 private:
  Arena arena_;
  std::vector<SelectionFn> selections_;
};

// Every player maximises the single entry of their reward space.
OpenGame with_argmax_players(Arena arena);

struct Context {
  Value state;
  std::function<Value(const Value&)> continuation;  // Y -> R
};

// omega -> rewards part of coplay(a, omega, x, k(play(a, omega, x))).
Costate costate_of(const OpenGame& g, const Context& ctx);

std::vector<Value> equilibria(const OpenGame& g, const Context& ctx,
                              std::uint64_t cap = kDefaultCap);

}  // namespace ogk

#endif  // OGK_ARENA_H_
