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
// Random small lenses, arenas and costates shared by the unit tests.
#ifndef OGK_TESTS_SUPPORT_H_
#define OGK_TESTS_SUPPORT_H_

#include <cstdint>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ogk/arena.h"
#include "ogk/lens.h"
#include "ogk/selection.h"
#include "ogk/space.h"
#include "ogk/value.h"

namespace ogk::testing {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Enumerable space with at most four elements, of varied shape.
inline FinSpace small_space(Rng& rng) {
  switch (pick(rng, 0, 5)) {
    case 0: return FinSpace::unit();
    case 1: return FinSpace::range(pick(rng, 1, 4));
    case 2: return FinSpace::product({FinSpace::range(2), FinSpace::range(2)});
    case 3: return FinSpace::sum({FinSpace::unit(), FinSpace::range(pick(rng, 1, 2))});
    case 4: return FinSpace::product({FinSpace::unit(), FinSpace::range(pick(rng, 1, 3))});
    default: return FinSpace::range(pick(rng, 2, 3));
  }
}

// A lens with tabulated random get and put. All four spaces enumerable.
inline Lens random_lens(Rng& rng, const FinSpace& x, const FinSpace& s, const FinSpace& y,
                        const FinSpace& r) {
  const std::uint64_t nx = cardinality(x), ns = cardinality(s), ny = cardinality(y),
                      nr = cardinality(r);
  auto gets = std::make_shared<std::vector<std::uint64_t>>();
  auto puts = std::make_shared<std::vector<std::uint64_t>>();
  for (std::uint64_t i = 0; i < nx; ++i) gets->push_back(pick(rng, 0, ny - 1));
  for (std::uint64_t i = 0; i < nx * nr; ++i) puts->push_back(pick(rng, 0, ns - 1));
  return Lens(
      x, s, y, r, [x, y, gets](const Value& v) { return unrank(y, gets->at(rank(x, v))); },
      [x, s, r, nr, puts](const Value& v, const Value& u) {
        return unrank(s, puts->at(rank(x, v) * nr + rank(r, u)));
      });
}

inline ParamLens random_plens(Rng& rng, const FinSpace& p, const FinSpace& q, const FinSpace& x,
                              const FinSpace& s, const FinSpace& y, const FinSpace& r) {
  return ParamLens(p, q,
                   random_lens(rng, FinSpace::product({p, x}), FinSpace::product({q, s}), y, r));
}

// A costate with a random table into an enumerable codomain.
inline Costate random_costate(Rng& rng, const FinSpace& domain, const FinSpace& codomain) {
  const std::uint64_t n = cardinality(codomain);
  auto table = std::make_shared<std::vector<std::uint64_t>>();
  for (std::uint64_t i = 0; i < cardinality(domain); ++i) table->push_back(pick(rng, 0, n - 1));
  return Costate(domain, codomain, [domain, codomain, table](const Value& v) {
    return unrank(codomain, table->at(rank(domain, v)));
  });
}

inline std::set<Value> as_set(const std::vector<Value>& v) { return {v.begin(), v.end()}; }

inline FinSpace scalar(const std::string& player) { return FinSpace::reward_space({player}); }

}  // namespace ogk::testing

#endif  // OGK_TESTS_SUPPORT_H_
