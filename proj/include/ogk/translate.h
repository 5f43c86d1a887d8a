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
#ifndef OGK_TRANSLATE_H_
#define OGK_TRANSLATE_H_

#include "ogk/arena.h"
#include "ogk/exform.h"
#include "ogk/lens.h"
#include "ogk/space.h"

namespace ogk {

// PlayerIndexed(players, R^{p}): one scalar reward per player.
FinSpace scalar_rewards(const std::vector<PlayerId>& players);

// Arena with players P whose strategies are strategies_pet(t, p) and whose
// rewards are scalars, over (1, R^P) -> (paths_pet t, R^P). Each node is a
// decision for its owner, followed by the tag-erasing codiagonal and the
// external choice of the translated subtrees; players are then regrouped and
// only the decision's copy of the utility is kept as reward.
Arena pet_to_arena(const PerfectGame& g);

// (*, payoff_pet t).
Context payoff_context(const PerfectGame& g);

// pet_to_arena with a scalar argmax selection for every player.
OpenGame pet_to_game(const PerfectGame& g);

// Lens (strategies_iet per player, scalar rewards) ->
// (strategies_pet of iet_to_pet per player, scalar rewards) that copies each
// information-set move to every node it labels; rewards pass through.
Lens clone_lens(const ImperfectGame& g);

// clone_lens reparametrisation of pet_to_arena(iet_to_pet g), with argmax.
OpenGame iet_to_game(const ImperfectGame& g);

// Identity arena (1, 1) -> (A, R^P) with params (A, R^P), plus argmax.
OpenGame normal_form_to_game(const NormalFormGame& nf);

// (*, u).
Context normal_form_context(const NormalFormGame& nf);

}  // namespace ogk

#endif  // OGK_TRANSLATE_H_
