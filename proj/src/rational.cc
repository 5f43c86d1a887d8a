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

#include "ogk/rational.h"

#include <cctype>
#include <numeric>

#include "ogk/error.h"

namespace ogk {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "rational multiplication overflow");
  }
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "rational addition overflow");
  }
  return out;
}

}  // namespace

Rational::Rational(std::int64_t numerator) : num_(numerator), den_(1) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  }
  if (denominator < 0) {
    numerator = checked_mul(numerator, -1);
    denominator = checked_mul(denominator, -1);
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Rational Rational::operator-() const { return Rational(checked_mul(num_, -1), den_); }

Rational& Rational::operator+=(const Rational& other) {
  const std::int64_t g = std::gcd(den_, other.den_);
  const std::int64_t lhs = checked_mul(num_, other.den_ / g);
  const std::int64_t rhs = checked_mul(other.num_, den_ / g);
  *this = Rational(checked_add(lhs, rhs), checked_mul(den_ / g, other.den_));
  return *this;
}

Rational& Rational::operator-=(const Rational& other) { return *this += -other; }

Rational& Rational::operator*=(const Rational& other) {
  const std::int64_t g1 = std::gcd(num_, other.den_);
  const std::int64_t g2 = std::gcd(other.num_, den_);
  const std::int64_t n = checked_mul(num_ / (g1 ? g1 : 1), other.num_ / (g2 ? g2 : 1));
  const std::int64_t d = checked_mul(den_ / (g2 ? g2 : 1), other.den_ / (g1 ? g1 : 1));
  *this = Rational(n, d);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  auto read_digits = [&text](std::int64_t& out, int& count) -> bool {
    out = 0;
    count = 0;
    while (!text.empty() && std::isdigit(static_cast<unsigned char>(text.front()))) {
      if (__builtin_mul_overflow(out, 10, &out) ||
          __builtin_add_overflow(out, text.front() - '0', &out)) {
        return false;
      }
      text.remove_prefix(1);
      ++count;
    }
    return count > 0;
  };
  std::int64_t whole;
  int whole_digits;
  if (!read_digits(whole, whole_digits)) return std::nullopt;
  Rational result(whole);
  if (!text.empty()) {
    const char sep = text.front();
    text.remove_prefix(1);
    std::int64_t tail;
    int tail_digits;
    if (!read_digits(tail, tail_digits) || !text.empty()) return std::nullopt;
    try {
      if (sep == '/') {
        if (tail == 0) return std::nullopt;
        result = Rational(whole, tail);
      } else if (sep == '.') {
        std::int64_t scale = 1;
        for (int i = 0; i < tail_digits; ++i) scale = checked_mul(scale, 10);
        result = Rational(checked_add(checked_mul(whole, scale), tail), scale);
      } else {
        return std::nullopt;
      }
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  return negative ? -result : result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kNotEnumerable: return "NotEnumerable";
    case ErrorCode::kTypeMismatch: return "TypeMismatch";
    case ErrorCode::kNotComparable: return "NotComparable";
    case ErrorCode::kEmptySpace: return "EmptySpace";
    case ErrorCode::kRewardSpaceMismatch: return "RewardSpaceMismatch";
    case ErrorCode::kUnknownPlayer: return "UnknownPlayer";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kOverflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace ogk
