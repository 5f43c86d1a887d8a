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
#ifndef OGK_CLI_GENERATE_H_
#define OGK_CLI_GENERATE_H_

#include <cstdint>
#include <random>

#include "ogk/gamefile.h"

namespace ogk::cli {

struct GenOptions {
  std::size_t max_players = 3;
  std::size_t max_depth = 3;  // decision levels
  std::size_t max_arity = 3;
  // Merge same-owner, same-arity nodes into shared information sets.
  bool merge_infosets = false;
  // Occasionally declare an information set that no node uses.
  bool allow_unused = false;
  // Fancy identifiers and fractional/decimal rewards.
  bool exotic_tokens = false;
  // Integer rewards are drawn uniformly from this range.
  std::int64_t min_reward = -2;
  std::int64_t max_reward = 9;
  // Rejection bound on the number of strategy profiles.
  std::uint64_t max_profiles = 4096;
};

// Always a valid document (validate() reports no errors).
gamefile::GameDoc random_extensive_doc(std::mt19937_64& rng, const GenOptions& opts = {});
gamefile::GameDoc random_normal_form_doc(std::mt19937_64& rng, const GenOptions& opts = {});

}  // namespace ogk::cli

#endif  // OGK_CLI_GENERATE_H_
