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
#ifndef OGK_VALUE_H_
#define OGK_VALUE_H_

#include <compare>
#include <cstddef>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "ogk/rational.h"

namespace ogk {

using PlayerId = std::string;

// An immutable element of some FinSpace. Children are shared, so copies are
// cheap. ByPlayer and Rewards are positional: entry j belongs to the j-th
// player of the space the value inhabits.
class Value {
 public:
  enum class Kind { kPoint, kIndex, kTuple, kTagged, kByPlayer, kRewards };

  Value();  // Point

  static Value point() { return Value(); }
  static Value index(std::size_t k);
  static Value tuple(std::vector<Value> items);
  static Value tagged(std::size_t tag, Value item);
  static Value by_player(std::vector<Value> items);
  static Value rewards(std::vector<Rational> rewards);

  Kind kind() const { return rep_->kind; }
  bool is(Kind k) const { return rep_->kind == k; }

  // Accessors throw Error(kTypeMismatch) when the kind does not match.
  std::size_t as_index() const;
  std::size_t tag() const;
  const Value& item() const;
  const std::vector<Value>& items() const;  // Tuple or ByPlayer
  const Value& operator[](std::size_t i) const;
  std::size_t size() const;  // number of items or rewards
  const std::vector<Rational>& rewards() const;

  std::string to_string() const;

  friend bool operator==(const Value& a, const Value& b);
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  struct Rep {
    Kind kind = Kind::kPoint;
    std::size_t number = 0;  // index or tag
    std::vector<Value> items;
    std::vector<Rational> rewards;
  };
  explicit Value(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

  std::shared_ptr<const Rep> rep_;
};

std::ostream& operator<<(std::ostream& os, const Value& v);

// Returns v with the item at position i replaced (Tuple or ByPlayer only).
Value with_item(const Value& v, std::size_t i, Value replacement);

}  // namespace ogk

#endif  // OGK_VALUE_H_
