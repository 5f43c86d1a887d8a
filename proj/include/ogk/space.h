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
#ifndef OGK_SPACE_H_
#define OGK_SPACE_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "ogk/value.h"

namespace ogk {

inline constexpr std::uint64_t kDefaultCap = 1'000'000;
inline constexpr std::uint64_t kInfiniteCardinality =
    std::numeric_limits<std::uint64_t>::max();

// Descriptor of a finite set (or, for RewardSpace, of the rational reward
// vectors of a list of players). Immutable and cheap to copy.
class FinSpace {
 public:
  enum class Kind { kUnit, kRange, kProduct, kSum, kPlayerIndexed, kRewardSpace };

  FinSpace();  // Unit

  static FinSpace unit() { return FinSpace(); }
  static FinSpace range(std::size_t n);
  static FinSpace product(std::vector<FinSpace> factors);
  static FinSpace sum(std::vector<FinSpace> summands);
  static FinSpace player_indexed(std::vector<PlayerId> players,
                                 std::vector<FinSpace> components);
  static FinSpace reward_space(std::vector<PlayerId> players);

  Kind kind() const { return rep_->kind; }
  bool is(Kind k) const { return rep_->kind == k; }

  std::size_t range_size() const;
  // Factors of a Product, summands of a Sum, components of a PlayerIndexed.
  const std::vector<FinSpace>& parts() const;
  const FinSpace& part(std::size_t i) const { return parts().at(i); }
  // Players of a PlayerIndexed or RewardSpace.
  const std::vector<PlayerId>& players() const;

  // False iff a RewardSpace occurs anywhere inside.
  bool enumerable() const { return rep_->enumerable; }
  // Saturates at kInfiniteCardinality; meaningful only when enumerable().
  std::uint64_t size_hint() const { return rep_->cardinality; }

  std::string to_string() const;

  friend bool operator==(const FinSpace& a, const FinSpace& b);

 private:
  struct Rep {
    Kind kind = Kind::kUnit;
    std::size_t n = 1;
    std::vector<FinSpace> parts;
    std::vector<PlayerId> players;
    bool enumerable = true;
    std::uint64_t cardinality = 1;
  };
  explicit FinSpace(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  static FinSpace make(Rep rep);

  std::shared_ptr<const Rep> rep_;
};

std::ostream& operator<<(std::ostream& os, const FinSpace& s);

// Throws kNotEnumerable for spaces containing a RewardSpace.
std::uint64_t cardinality(const FinSpace& space);

// All elements in canonical order: lexicographic over factors with the last
// factor varying fastest; Sum lists summand 0 fully, then summand 1, etc.
// Throws kCapExceeded when cardinality exceeds cap.
std::vector<Value> enumerate(const FinSpace& space, std::uint64_t cap = kDefaultCap);

bool typecheck(const Value& value, const FinSpace& space);

// Position of value in enumerate(space), and its inverse.
std::uint64_t rank(const FinSpace& space, const Value& value);
Value unrank(const FinSpace& space, std::uint64_t position);

// Throws kTypeMismatch naming what when value does not inhabit space.
void expect_type(const Value& value, const FinSpace& space, const char* what);

}  // namespace ogk

#endif  // OGK_SPACE_H_
