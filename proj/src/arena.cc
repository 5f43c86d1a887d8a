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
#include "ogk/arena.h"

#include <algorithm>

#include "ogk/error.h"

namespace ogk {
namespace {

FinSpace no_players() { return FinSpace::player_indexed({}, {}); }

bool player_indexed_over(const FinSpace& space, const std::vector<PlayerId>& players) {
  return space.is(FinSpace::Kind::kPlayerIndexed) && space.players() == players;
}

std::vector<Value> concat(const std::vector<Value>& a, const std::vector<Value>& b) {
  std::vector<Value> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// PI(tagged players of a and b) <-> (PI_a x PI_b), on both parameter sides.
Lens split_players(const Arena& a, const Arena& b) {
  std::vector<PlayerId> players;
  std::vector<FinSpace> strategies, rewards;
  for (std::size_t side = 0; side < 2; ++side) {
    const Arena& part = side == 0 ? a : b;
    for (std::size_t p = 0; p < part.players().size(); ++p) {
      players.push_back(tag_player(side, part.players()[p]));
      strategies.push_back(part.strategies(p));
      rewards.push_back(part.rewards(p));
    }
  }
  const std::size_t left = a.players().size();
  return lens_adapter(
      FinSpace::player_indexed(players, strategies), FinSpace::player_indexed(players, rewards),
      FinSpace::product({a.omega(), b.omega()}), FinSpace::product({a.coomega(), b.coomega()}),
      [left](const Value& v) {
        const auto& items = v.items();
        return Value::tuple({Value::by_player({items.begin(), items.begin() + left}),
                             Value::by_player({items.begin() + left, items.end()})});
      },
      [](const Value& r) { return Value::by_player(concat(r[0].items(), r[1].items())); });
}

void expect_common_utility(const std::vector<Arena>& family) {
  if (family.empty()) throw Error(ErrorCode::kInvalidArgument, "choice over an empty family");
  for (const auto& a : family) {
    if (!(a.r() == family.front().r())) {
      throw Error(ErrorCode::kRewardSpaceMismatch,
                  "choice members must share the utility space: " + a.r().to_string() + " vs " +
                      family.front().r().to_string());
    }
  }
}

template <typename Fn>
std::vector<FinSpace> collect(const std::vector<Arena>& family, Fn fn) {
  std::vector<FinSpace> out;
  out.reserve(family.size());
  for (const auto& a : family) out.push_back(fn(a));
  return out;
}

}  // namespace

bool Arena::has_players() const {
  return omega().is(FinSpace::Kind::kPlayerIndexed) &&
         player_indexed_over(coomega(), omega().players());
}

const std::vector<PlayerId>& Arena::players() const {
  if (!has_players()) {
    throw Error(ErrorCode::kTypeMismatch, "arena has no players: " + omega().to_string());
  }
  return omega().players();
}

const FinSpace& Arena::strategies(std::size_t player) const {
  players();
  return omega().part(player);
}

const FinSpace& Arena::rewards(std::size_t player) const {
  players();
  return coomega().part(player);
}

Value play(const Arena& a, const Value& profile, const Value& state) {
  expect_type(profile, a.omega(), "play profile");
  expect_type(state, a.x(), "play state");
  return a.plens().get(profile, state);
}

Coplay coplay(const Arena& a, const Value& profile, const Value& state, const Value& utility) {
  expect_type(profile, a.omega(), "coplay profile");
  expect_type(state, a.x(), "coplay state");
  if (a.r().enumerable()) expect_type(utility, a.r(), "coplay utility");
  const Value out = a.plens().put(profile, state, utility);
  return Coplay{out[1], out[0]};
}

PlayerId tag_player(std::size_t side, const PlayerId& player) {
  return std::to_string(side) + "." + player;
}

Arena decision(FinSpace moves, FinSpace rewards, PlayerId player) {
  const FinSpace omega = FinSpace::player_indexed({player}, {moves});
  const FinSpace coomega = FinSpace::player_indexed({player}, {rewards});
  Lens underlying(
      FinSpace::product({omega, FinSpace::unit()}), FinSpace::product({coomega, rewards}), moves,
      rewards, [](const Value& v) { return v[0][0]; },
      [](const Value&, const Value& r) { return Value::tuple({Value::by_player({r}), r}); });
  return Arena(ParamLens(omega, coomega, std::move(underlying)));
}

Arena lens_arena(const Lens& lens) {
  const FinSpace none = no_players();
  const Lens drop = lens_adapter(
      FinSpace::product({none, lens.x()}), FinSpace::product({none, lens.s()}), lens.x(),
      lens.s(), [](const Value& v) { return v[1]; },
      [](const Value& s) { return Value::tuple({Value::by_player({}), s}); });
  return Arena(ParamLens(none, none, lens_compose(drop, lens)));
}

Arena arena_seq(const Arena& a, const Arena& b) {
  const ParamLens composite = plens_compose(a.plens(), b.plens());
  if (!a.has_players() || !b.has_players()) return Arena(composite);
  return Arena(reparametrise(split_players(a, b), composite));
}

Arena arena_tensor(const Arena& a, const Arena& b) {
  const ParamLens composite = plens_tensor(a.plens(), b.plens());
  if (!a.has_players() || !b.has_players()) return Arena(composite);
  return Arena(reparametrise(split_players(a, b), composite));
}

Arena arena_reparametrise(const Lens& w, const Arena& a) {
  return Arena(reparametrise(w, a.plens()));
}

Lens regroup_lens(const Arena& a, const std::vector<PlayerId>& new_players,
                  const std::map<PlayerId, PlayerId>& r) {
  const auto& old_players = a.players();
  // Per old player: (new player index, position within its group).
  std::vector<std::pair<std::size_t, std::size_t>> slot(old_players.size());
  std::vector<std::vector<FinSpace>> group_strategies(new_players.size());
  std::vector<std::vector<FinSpace>> group_rewards(new_players.size());
  for (std::size_t p = 0; p < old_players.size(); ++p) {
    const auto it = r.find(old_players[p]);
    if (it == r.end()) {
      throw Error(ErrorCode::kUnknownPlayer, "regroup map is not total on " + old_players[p]);
    }
    const auto q = std::find(new_players.begin(), new_players.end(), it->second);
    if (q == new_players.end()) {
      throw Error(ErrorCode::kUnknownPlayer, "regroup target " + it->second + " not listed");
    }
    const std::size_t qi = static_cast<std::size_t>(q - new_players.begin());
    slot[p] = {qi, group_strategies[qi].size()};
    group_strategies[qi].push_back(a.strategies(p));
    group_rewards[qi].push_back(a.rewards(p));
  }
  std::vector<FinSpace> strategies, rewards;
  for (std::size_t q = 0; q < new_players.size(); ++q) {
    strategies.push_back(FinSpace::product(group_strategies[q]));
    rewards.push_back(FinSpace::product(group_rewards[q]));
  }
  const std::size_t groups = new_players.size();
  return lens_adapter(
      FinSpace::player_indexed(new_players, strategies),
      FinSpace::player_indexed(new_players, rewards), a.omega(), a.coomega(),
      [slot](const Value& v) {
        std::vector<Value> items;
        items.reserve(slot.size());
        for (const auto& [q, j] : slot) items.push_back(v[q][j]);
        return Value::by_player(std::move(items));
      },
      [slot, groups](const Value& r) {
        std::vector<std::vector<Value>> grouped(groups);
        for (std::size_t p = 0; p < slot.size(); ++p) grouped[slot[p].first].push_back(r[p]);
        std::vector<Value> items;
        items.reserve(groups);
        for (auto& g : grouped) items.push_back(Value::tuple(std::move(g)));
        return Value::by_player(std::move(items));
      });
}

Arena regroup(const Arena& a, const std::vector<PlayerId>& new_players,
              const std::map<PlayerId, PlayerId>& r) {
  return arena_reparametrise(regroup_lens(a, new_players, r), a);
}

Arena external_choice(const std::vector<Arena>& family) {
  expect_common_utility(family);
  const FinSpace omega = FinSpace::product(collect(family, [](const Arena& a) { return a.omega(); }));
  const FinSpace coomega = FinSpace::sum(collect(family, [](const Arena& a) { return a.coomega(); }));
  const FinSpace xs = FinSpace::sum(collect(family, [](const Arena& a) { return a.x(); }));
  const FinSpace ss = FinSpace::sum(collect(family, [](const Arena& a) { return a.s(); }));
  const FinSpace ys = FinSpace::sum(collect(family, [](const Arena& a) { return a.y(); }));
  Lens underlying(
      FinSpace::product({omega, xs}), FinSpace::product({coomega, ss}), ys, family.front().r(),
      [family](const Value& v) {
        const std::size_t i = v[1].tag();
        return Value::tagged(i, family[i].plens().get(v[0][i], v[1].item()));
      },
      [family](const Value& v, const Value& r) {
        const std::size_t i = v[1].tag();
        const Value out = family[i].plens().put(v[0][i], v[1].item(), r);
        return Value::tuple({Value::tagged(i, out[0]), Value::tagged(i, out[1])});
      });
  return Arena(ParamLens(omega, coomega, std::move(underlying)));
}

Arena externalize_players(const Arena& choice) {
  const FinSpace& omega = choice.omega();
  const FinSpace& coomega = choice.coomega();
  if (!omega.is(FinSpace::Kind::kProduct) || !coomega.is(FinSpace::Kind::kSum) ||
      omega.parts().empty() || omega.parts().size() != coomega.parts().size()) {
    throw Error(ErrorCode::kTypeMismatch, "not the parameters of an external choice");
  }
  const std::size_t members = omega.parts().size();
  const FinSpace& first = omega.part(0);
  if (!first.is(FinSpace::Kind::kPlayerIndexed)) {
    throw Error(ErrorCode::kTypeMismatch, "external choice members must have players");
  }
  const std::vector<PlayerId> players = first.players();
  for (std::size_t i = 0; i < members; ++i) {
    if (!player_indexed_over(omega.part(i), players) ||
        !player_indexed_over(coomega.part(i), players)) {
      throw Error(ErrorCode::kTypeMismatch, "external choice members must share players");
    }
  }
  std::vector<FinSpace> strategies, rewards;
  for (std::size_t p = 0; p < players.size(); ++p) {
    std::vector<FinSpace> per_member_s, per_member_r;
    for (std::size_t i = 0; i < members; ++i) {
      per_member_s.push_back(omega.part(i).part(p));
      per_member_r.push_back(coomega.part(i).part(p));
    }
    strategies.push_back(FinSpace::product(std::move(per_member_s)));
    rewards.push_back(FinSpace::sum(std::move(per_member_r)));
  }
  const std::size_t n_players = players.size();
  const Lens distribute = lens_adapter(
      FinSpace::player_indexed(players, strategies), FinSpace::player_indexed(players, rewards),
      omega, coomega,
      [members, n_players](const Value& v) {
        std::vector<Value> per_member;
        for (std::size_t i = 0; i < members; ++i) {
          std::vector<Value> items;
          for (std::size_t p = 0; p < n_players; ++p) items.push_back(v[p][i]);
          per_member.push_back(Value::by_player(std::move(items)));
        }
        return Value::tuple(std::move(per_member));
      },
      [n_players](const Value& r) {
        std::vector<Value> items;
        for (std::size_t p = 0; p < n_players; ++p) {
          items.push_back(Value::tagged(r.tag(), r.item()[p]));
        }
        return Value::by_player(std::move(items));
      });
  return arena_reparametrise(distribute, choice);
}

Arena internal_choice(const std::vector<Arena>& family) {
  expect_common_utility(family);
  const FinSpace omega = FinSpace::sum(collect(family, [](const Arena& a) { return a.omega(); }));
  const FinSpace coomega = FinSpace::sum(collect(family, [](const Arena& a) { return a.coomega(); }));
  const FinSpace xs = FinSpace::product(collect(family, [](const Arena& a) { return a.x(); }));
  const FinSpace ss = FinSpace::sum(collect(family, [](const Arena& a) { return a.s(); }));
  const FinSpace ys = FinSpace::sum(collect(family, [](const Arena& a) { return a.y(); }));
  Lens underlying(
      FinSpace::product({omega, xs}), FinSpace::product({coomega, ss}), ys, family.front().r(),
      [family](const Value& v) {
        const std::size_t i = v[0].tag();
        return Value::tagged(i, family[i].plens().get(v[0].item(), v[1][i]));
      },
      [family](const Value& v, const Value& r) {
        const std::size_t i = v[0].tag();
        const Value out = family[i].plens().put(v[0].item(), v[1][i], r);
        return Value::tuple({Value::tagged(i, out[0]), Value::tagged(i, out[1])});
      });
  return Arena(ParamLens(omega, coomega, std::move(underlying)));
}

Arena stop_arena(FinSpace utilities, FinSpace coutilities,
                 std::function<Value(const Value&)> to_coutility) {
  const FinSpace none = no_players();
  Lens underlying(
      FinSpace::product({none, FinSpace::unit()}), FinSpace::product({none, coutilities}),
      FinSpace::unit(), utilities, [](const Value&) { return Value::point(); },
      [to_coutility = std::move(to_coutility)](const Value&, const Value& r) {
        return Value::tuple({Value::by_player({}), to_coutility(r)});
      });
  return Arena(ParamLens(none, none, std::move(underlying)));
}

Arena switch_arena(FinSpace states, FinSpace coutilities, PlayerId player) {
  const FinSpace omega = FinSpace::player_indexed({player}, {FinSpace::range(2)});
  const FinSpace coomega = FinSpace::player_indexed({player}, {coutilities});
  Lens underlying(
      FinSpace::product({omega, states}), FinSpace::product({coomega, coutilities}),
      FinSpace::sum({states, FinSpace::unit()}), FinSpace::sum({coutilities, coutilities}),
      [](const Value& v) {
        return v[0][0].as_index() == 0 ? Value::tagged(0, v[1]) : Value::tagged(1, Value::point());
      },
      [](const Value&, const Value& r) {
        return Value::tuple({Value::by_player({r.item()}), r.item()});
      });
  return Arena(ParamLens(omega, coomega, std::move(underlying)));
}

Arena stoppable(const Arena& a, std::function<Value(const Value&)> to_coutility,
                PlayerId player) {
  const Arena choice = external_choice({a, stop_arena(a.r(), a.s(), std::move(to_coutility))});
  return arena_seq(switch_arena(a.x(), a.s(), std::move(player)), choice);
}

Lens vote_lens(const std::vector<PlayerId>& players,
               const std::vector<std::vector<FinSpace>>& strategies,
               const std::vector<FinSpace>& rewards, std::size_t default_arena) {
  const std::size_t arenas = strategies.size();
  if (arenas == 0 || default_arena >= arenas) {
    throw Error(ErrorCode::kInvalidArgument, "vote needs a default among the arenas");
  }
  if (rewards.size() != players.size()) {
    throw Error(ErrorCode::kInvalidArgument, "vote needs one reward space per player");
  }
  std::vector<FinSpace> ballots, target_strategies, target_rewards;
  for (std::size_t p = 0; p < players.size(); ++p) {
    std::vector<FinSpace> per_arena;
    for (std::size_t i = 0; i < arenas; ++i) per_arena.push_back(strategies[i].at(p));
    ballots.push_back(
        FinSpace::product({FinSpace::range(arenas), FinSpace::product(std::move(per_arena))}));
  }
  for (std::size_t i = 0; i < arenas; ++i) {
    target_strategies.push_back(FinSpace::player_indexed(players, strategies[i]));
    target_rewards.push_back(FinSpace::player_indexed(players, rewards));
  }
  const std::size_t voters = players.size();
  return lens_adapter(
      FinSpace::player_indexed(players, ballots), FinSpace::player_indexed(players, rewards),
      FinSpace::sum(target_strategies), FinSpace::sum(target_rewards),
      [arenas, voters, default_arena](const Value& ballots) {
        std::vector<std::size_t> tally(arenas, 0);
        for (std::size_t p = 0; p < voters; ++p) ++tally[ballots[p][0].as_index()];
        std::size_t winner = default_arena;
        for (std::size_t i = 0; i < arenas; ++i) {
          if (2 * tally[i] > voters) winner = i;
        }
        std::vector<Value> chosen;
        for (std::size_t p = 0; p < voters; ++p) chosen.push_back(ballots[p][1][winner]);
        return Value::tagged(winner, Value::by_player(std::move(chosen)));
      },
      [](const Value& r) { return r.item(); });
}

Lens resum_lens(FinSpace strategies, FinSpace reward, std::size_t n) {
  if (!reward.is(FinSpace::Kind::kRewardSpace)) {
    throw Error(ErrorCode::kTypeMismatch, "resum needs a reward space");
  }
  const std::size_t width = reward.players().size();
  return lens_adapter(
      strategies, reward, strategies, FinSpace::product(std::vector<FinSpace>(n, reward)),
      [](const Value& v) { return v; },
      [width](const Value& r) {
        std::vector<Rational> total(width);
        for (const auto& part : r.items()) {
          for (std::size_t j = 0; j < width; ++j) total[j] += part.rewards()[j];
        }
        return Value::rewards(std::move(total));
      });
}

Lens clone_lens_simple(FinSpace moves, FinSpace rewards) {
  return lens_adapter(
      moves, rewards, FinSpace::product({moves, moves}), rewards,
      [](const Value& m) { return Value::tuple({m, m}); }, [](const Value& r) { return r; });
}

OpenGame::OpenGame(Arena arena, std::vector<SelectionFn> selections)
    : arena_(std::move(arena)), selections_(std::move(selections)) {
  const auto& players = arena_.players();
  if (players.size() != selections_.size()) {
    throw Error(ErrorCode::kTypeMismatch, "open game needs one selection function per player");
  }
  for (std::size_t p = 0; p < players.size(); ++p) {
    if (!(selections_[p].omega() == arena_.strategies(p)) ||
        !(selections_[p].coomega() == arena_.rewards(p))) {
      throw Error(ErrorCode::kTypeMismatch, "selection of " + players[p] +
                                                " does not match its strategies/rewards");
    }
  }
}

SelectionFn OpenGame::selection() const { return nash_product(arena_.players(), selections_); }

OpenGame with_argmax_players(Arena arena) {
  std::vector<SelectionFn> selections;
  for (std::size_t p = 0; p < arena.players().size(); ++p) {
    selections.push_back(argmax(arena.strategies(p), arena.rewards(p)));
  }
  return OpenGame(std::move(arena), std::move(selections));
}

Costate costate_of(const OpenGame& g, const Context& ctx) {
  const Arena& a = g.arena();
  expect_type(ctx.state, a.x(), "context state");
  return Costate(a.omega(), a.coomega(), [plens = a.plens(), ctx](const Value& profile) {
    const Value move = plens.get(profile, ctx.state);
    return plens.put(profile, ctx.state, ctx.continuation(move))[0];
  });
}

std::vector<Value> equilibria(const OpenGame& g, const Context& ctx, std::uint64_t cap) {
  return select(g.selection(), costate_of(g, ctx), cap);
}

}  // namespace ogk
