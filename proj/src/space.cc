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
#include "ogk/space.h"

#include <sstream>

#include "ogk/error.h"

namespace ogk {
namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) return kInfiniteCardinality;
  return out;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) return kInfiniteCardinality;
  return out;
}

// Mixed-radix enumeration shared by Product and PlayerIndexed.
void enumerate_product(const std::vector<FinSpace>& factors, std::uint64_t cap,
                       bool by_player, std::vector<Value>& out) {
  std::vector<std::vector<Value>> columns;
  columns.reserve(factors.size());
  for (const auto& f : factors) columns.push_back(enumerate(f, cap));
  for (const auto& c : columns) {
    if (c.empty()) return;
  }
  std::vector<std::size_t> digits(factors.size(), 0);
  while (true) {
    std::vector<Value> items;
    items.reserve(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) items.push_back(columns[i][digits[i]]);
    out.push_back(by_player ? Value::by_player(std::move(items)) : Value::tuple(std::move(items)));
    std::size_t pos = factors.size();
    while (pos > 0) {
      --pos;
      if (++digits[pos] < columns[pos].size()) break;
      digits[pos] = 0;
      if (pos == 0) return;
    }
    if (factors.empty()) return;
  }
}

}  // namespace

FinSpace::FinSpace() {
  static const auto* const kUnit = new std::shared_ptr<const Rep>(std::make_shared<Rep>());
  rep_ = *kUnit;
}

FinSpace FinSpace::make(Rep rep) {
  switch (rep.kind) {
    case Kind::kUnit:
      rep.cardinality = 1;
      break;
    case Kind::kRange:
      rep.cardinality = rep.n;
      break;
    case Kind::kProduct:
    case Kind::kPlayerIndexed:
      rep.cardinality = 1;
      for (const auto& p : rep.parts) {
        rep.enumerable = rep.enumerable && p.enumerable();
        rep.cardinality = saturating_mul(rep.cardinality, p.size_hint());
      }
      break;
    case Kind::kSum:
      rep.cardinality = 0;
      for (const auto& p : rep.parts) {
        rep.enumerable = rep.enumerable && p.enumerable();
        rep.cardinality = saturating_add(rep.cardinality, p.size_hint());
      }
      break;
    case Kind::kRewardSpace:
      rep.enumerable = false;
      rep.cardinality = kInfiniteCardinality;
      break;
  }
  return FinSpace(std::make_shared<const Rep>(std::move(rep)));
}

FinSpace FinSpace::range(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "Range(n) requires n >= 1");
  Rep rep;
  rep.kind = Kind::kRange;
  rep.n = n;
  return make(std::move(rep));
}

FinSpace FinSpace::product(std::vector<FinSpace> factors) {
  Rep rep;
  rep.kind = Kind::kProduct;
  rep.parts = std::move(factors);
  return make(std::move(rep));
}

FinSpace FinSpace::sum(std::vector<FinSpace> summands) {
  Rep rep;
  rep.kind = Kind::kSum;
  rep.parts = std::move(summands);
  return make(std::move(rep));
}

FinSpace FinSpace::player_indexed(std::vector<PlayerId> players,
                                  std::vector<FinSpace> components) {
  if (players.size() != components.size()) {
    throw Error(ErrorCode::kInvalidArgument, "PlayerIndexed needs one component per player");
  }
  Rep rep;
  rep.kind = Kind::kPlayerIndexed;
  rep.players = std::move(players);
  rep.parts = std::move(components);
  return make(std::move(rep));
}

FinSpace FinSpace::reward_space(std::vector<PlayerId> players) {
  Rep rep;
  rep.kind = Kind::kRewardSpace;
  rep.players = std::move(players);
  return make(std::move(rep));
}

std::size_t FinSpace::range_size() const {
  if (!is(Kind::kRange)) throw Error(ErrorCode::kTypeMismatch, "not a Range: " + to_string());
  return rep_->n;
}

const std::vector<FinSpace>& FinSpace::parts() const {
  if (!is(Kind::kProduct) && !is(Kind::kSum) && !is(Kind::kPlayerIndexed)) {
    throw Error(ErrorCode::kTypeMismatch, "space has no parts: " + to_string());
  }
  return rep_->parts;
}

const std::vector<PlayerId>& FinSpace::players() const {
  if (!is(Kind::kPlayerIndexed) && !is(Kind::kRewardSpace)) {
    throw Error(ErrorCode::kTypeMismatch, "space is not player-indexed: " + to_string());
  }
  return rep_->players;
}

std::string FinSpace::to_string() const {
  std::ostringstream os;
  auto list = [&os](const std::vector<FinSpace>& parts, const char* sep) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) os << sep;
      os << parts[i].to_string();
    }
  };
  switch (kind()) {
    case Kind::kUnit: os << "1"; break;
    case Kind::kRange: os << "[" << rep_->n << "]"; break;
    case Kind::kProduct: os << "("; list(rep_->parts, " x "); os << ")"; break;
    case Kind::kSum: os << "("; list(rep_->parts, " + "); os << ")"; break;
    case Kind::kPlayerIndexed:
      os << "{";
      for (std::size_t i = 0; i < rep_->parts.size(); ++i) {
        if (i) os << ", ";
        os << rep_->players[i] << ": " << rep_->parts[i].to_string();
      }
      os << "}";
      break;
    case Kind::kRewardSpace:
      os << "R^{";
      for (std::size_t i = 0; i < rep_->players.size(); ++i) {
        if (i) os << ",";
        os << rep_->players[i];
      }
      os << "}";
      break;
  }
  return os.str();
}

bool operator==(const FinSpace& a, const FinSpace& b) {
  if (a.rep_ == b.rep_) return true;
  return a.rep_->kind == b.rep_->kind && a.rep_->n == b.rep_->n &&
         a.rep_->players == b.rep_->players && a.rep_->parts == b.rep_->parts;
}

std::ostream& operator<<(std::ostream& os, const FinSpace& s) { return os << s.to_string(); }

std::uint64_t cardinality(const FinSpace& space) {
  if (!space.enumerable()) {
    throw Error(ErrorCode::kNotEnumerable, "space contains rewards: " + space.to_string());
  }
  return space.size_hint();
}

std::vector<Value> enumerate(const FinSpace& space, std::uint64_t cap) {
  const std::uint64_t card = cardinality(space);
  if (card > cap) {
    throw Error(ErrorCode::kCapExceeded, "cardinality " +
                                             (card == kInfiniteCardinality ? std::string("overflow")
                                                                           : std::to_string(card)) +
                                             " of " + space.to_string() + " exceeds cap " +
                                             std::to_string(cap));
  }
  std::vector<Value> out;
  out.reserve(card);
  switch (space.kind()) {
    case FinSpace::Kind::kUnit:
      out.push_back(Value::point());
      break;
    case FinSpace::Kind::kRange:
      for (std::size_t k = 0; k < space.range_size(); ++k) out.push_back(Value::index(k));
      break;
    case FinSpace::Kind::kProduct:
      enumerate_product(space.parts(), cap, false, out);
      break;
    case FinSpace::Kind::kPlayerIndexed:
      enumerate_product(space.parts(), cap, true, out);
      break;
    case FinSpace::Kind::kSum:
      for (std::size_t tag = 0; tag < space.parts().size(); ++tag) {
        for (auto& v : enumerate(space.part(tag), cap)) out.push_back(Value::tagged(tag, std::move(v)));
      }
      break;
    case FinSpace::Kind::kRewardSpace:
      break;  // unreachable: cardinality() threw
  }
  return out;
}

bool typecheck(const Value& value, const FinSpace& space) {
  switch (space.kind()) {
    case FinSpace::Kind::kUnit:
      return value.is(Value::Kind::kPoint);
    case FinSpace::Kind::kRange:
      return value.is(Value::Kind::kIndex) && value.as_index() < space.range_size();
    case FinSpace::Kind::kProduct:
    case FinSpace::Kind::kPlayerIndexed: {
      const auto kind = space.is(FinSpace::Kind::kProduct) ? Value::Kind::kTuple
                                                           : Value::Kind::kByPlayer;
      if (!value.is(kind) || value.size() != space.parts().size()) return false;
      for (std::size_t i = 0; i < space.parts().size(); ++i) {
        if (!typecheck(value[i], space.part(i))) return false;
      }
      return true;
    }
    case FinSpace::Kind::kSum:
      return value.is(Value::Kind::kTagged) && value.tag() < space.parts().size() &&
             typecheck(value.item(), space.part(value.tag()));
    case FinSpace::Kind::kRewardSpace:
      return value.is(Value::Kind::kRewards) && value.size() == space.players().size();
  }
  return false;
}

void expect_type(const Value& value, const FinSpace& space, const char* what) {
  if (!typecheck(value, space)) {
    throw Error(ErrorCode::kTypeMismatch, std::string(what) + ": value " + value.to_string() +
                                              " does not inhabit " + space.to_string());
  }
}

std::uint64_t rank(const FinSpace& space, const Value& value) {
  switch (space.kind()) {
    case FinSpace::Kind::kUnit:
      return 0;
    case FinSpace::Kind::kRange:
      return value.as_index();
    case FinSpace::Kind::kProduct:
    case FinSpace::Kind::kPlayerIndexed: {
      std::uint64_t r = 0;
      const auto& parts = space.parts();
      for (std::size_t i = 0; i < parts.size(); ++i) {
        r = r * cardinality(parts[i]) + rank(parts[i], value[i]);
      }
      return r;
    }
    case FinSpace::Kind::kSum: {
      std::uint64_t offset = 0;
      for (std::size_t t = 0; t < value.tag(); ++t) offset += cardinality(space.part(t));
      return offset + rank(space.part(value.tag()), value.item());
    }
    case FinSpace::Kind::kRewardSpace:
      break;
  }
  throw Error(ErrorCode::kNotEnumerable, "cannot rank into " + space.to_string());
}

Value unrank(const FinSpace& space, std::uint64_t position) {
  if (position >= cardinality(space)) {
    throw Error(ErrorCode::kInvalidArgument, "position out of range for " + space.to_string());
  }
  switch (space.kind()) {
    case FinSpace::Kind::kUnit:
      return Value::point();
    case FinSpace::Kind::kRange:
      return Value::index(position);
    case FinSpace::Kind::kProduct:
    case FinSpace::Kind::kPlayerIndexed: {
      const auto& parts = space.parts();
      std::vector<Value> items(parts.size());
      for (std::size_t i = parts.size(); i-- > 0;) {
        const std::uint64_t c = cardinality(parts[i]);
        items[i] = unrank(parts[i], position % c);
        position /= c;
      }
      return space.is(FinSpace::Kind::kProduct) ? Value::tuple(std::move(items))
                                                : Value::by_player(std::move(items));
    }
    case FinSpace::Kind::kSum: {
      for (std::size_t t = 0; t < space.parts().size(); ++t) {
        const std::uint64_t c = cardinality(space.part(t));
        if (position < c) return Value::tagged(t, unrank(space.part(t), position));
        position -= c;
      }
      break;
    }
    case FinSpace::Kind::kRewardSpace:
      break;
  }
  throw Error(ErrorCode::kNotEnumerable, "cannot unrank in " + space.to_string());
}

}  // namespace ogk
