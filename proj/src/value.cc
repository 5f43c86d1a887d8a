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
#include "ogk/value.h"

#include <sstream>

#include "ogk/error.h"

namespace ogk {
Value::Value() {
  static const auto* const kPoint = new std::shared_ptr<const Rep>(std::make_shared<Rep>());
  rep_ = *kPoint;
}

Value Value::index(std::size_t k) {
  Rep rep;
  rep.kind = Kind::kIndex;
  rep.number = k;
  return Value(std::make_shared<const Rep>(std::move(rep)));
}

Value Value::tuple(std::vector<Value> items) {
  Rep rep;
  rep.kind = Kind::kTuple;
  rep.items = std::move(items);
  return Value(std::make_shared<const Rep>(std::move(rep)));
}

Value Value::tagged(std::size_t tag, Value item) {
  Rep rep;
  rep.kind = Kind::kTagged;
  rep.number = tag;
  rep.items.push_back(std::move(item));
  return Value(std::make_shared<const Rep>(std::move(rep)));
}

Value Value::by_player(std::vector<Value> items) {
  Rep rep;
  rep.kind = Kind::kByPlayer;
  rep.items = std::move(items);
  return Value(std::make_shared<const Rep>(std::move(rep)));
}

Value Value::rewards(std::vector<Rational> rewards) {
  Rep rep;
  rep.kind = Kind::kRewards;
  rep.rewards = std::move(rewards);
  return Value(std::make_shared<const Rep>(std::move(rep)));
}

std::size_t Value::as_index() const {
  if (!is(Kind::kIndex)) {
    throw Error(ErrorCode::kTypeMismatch, std::string("expected Index, got ") + to_string());
  }
  return rep_->number;
}

std::size_t Value::tag() const {
  if (!is(Kind::kTagged)) {
    throw Error(ErrorCode::kTypeMismatch, std::string("expected Tagged, got ") + to_string());
  }
  return rep_->number;
}

const Value& Value::item() const {
  if (!is(Kind::kTagged)) {
    throw Error(ErrorCode::kTypeMismatch, std::string("expected Tagged, got ") + to_string());
  }
  return rep_->items.front();
}

const std::vector<Value>& Value::items() const {
  if (!is(Kind::kTuple) && !is(Kind::kByPlayer)) {
    throw Error(ErrorCode::kTypeMismatch,
                std::string("expected Tuple or ByPlayer, got ") + to_string());
  }
  return rep_->items;
}

const Value& Value::operator[](std::size_t i) const {
  const auto& all = items();
  if (i >= all.size()) {
    throw Error(ErrorCode::kTypeMismatch,
                "item " + std::to_string(i) + " out of range in " + to_string());
  }
  return all[i];
}

std::size_t Value::size() const {
  if (is(Kind::kRewards)) return rep_->rewards.size();
  return items().size();
}

const std::vector<Rational>& Value::rewards() const {
  if (!is(Kind::kRewards)) {
    throw Error(ErrorCode::kTypeMismatch, std::string("expected Rewards, got ") + to_string());
  }
  return rep_->rewards;
}

std::string Value::to_string() const {
  std::ostringstream os;
  switch (kind()) {
    case Kind::kPoint:
      os << "*";
      break;
    case Kind::kIndex:
      os << rep_->number;
      break;
    case Kind::kTuple:
    case Kind::kByPlayer: {
      os << (is(Kind::kTuple) ? "<" : "{");
      for (std::size_t i = 0; i < rep_->items.size(); ++i) {
        if (i) os << ",";
        os << rep_->items[i].to_string();
      }
      os << (is(Kind::kTuple) ? ">" : "}");
      break;
    }
    case Kind::kTagged:
      os << "#" << rep_->number << ":" << rep_->items.front().to_string();
      break;
    case Kind::kRewards: {
      os << "(";
      for (std::size_t i = 0; i < rep_->rewards.size(); ++i) {
        if (i) os << ",";
        os << rep_->rewards[i];
      }
      os << ")";
      break;
    }
  }
  return os.str();
}

bool operator==(const Value& a, const Value& b) {
  if (a.rep_ == b.rep_) return true;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.rep_ == b.rep_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (auto c = a.rep_->number <=> b.rep_->number; c != 0) return c;
  const auto& ai = a.rep_->items;
  const auto& bi = b.rep_->items;
  for (std::size_t i = 0; i < ai.size() && i < bi.size(); ++i) {
    if (auto c = ai[i] <=> bi[i]; c != 0) return c;
  }
  if (auto c = ai.size() <=> bi.size(); c != 0) return c;
  const auto& ar = a.rep_->rewards;
  const auto& br = b.rep_->rewards;
  for (std::size_t i = 0; i < ar.size() && i < br.size(); ++i) {
    if (auto c = ar[i] <=> br[i]; c != 0) return c;
  }
  return ar.size() <=> br.size();
}

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.to_string(); }

Value with_item(const Value& v, std::size_t i, Value replacement) {
  std::vector<Value> items = v.items();
  if (i >= items.size()) {
    throw Error(ErrorCode::kTypeMismatch, "with_item index out of range");
  }
  items[i] = std::move(replacement);
  return v.is(Value::Kind::kTuple) ? Value::tuple(std::move(items))
                                   : Value::by_player(std::move(items));
}

}  // namespace ogk
