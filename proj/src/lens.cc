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
#include "ogk/lens.h"

#include "ogk/error.h"

namespace ogk {
namespace {

void expect_same(const FinSpace& a, const FinSpace& b, const char* what) {
  if (!(a == b)) {
    throw Error(ErrorCode::kTypeMismatch,
                std::string(what) + ": " + a.to_string() + " vs " + b.to_string());
  }
}

}  // namespace

Lens::Lens(FinSpace x, FinSpace s, FinSpace y, FinSpace r, GetFn get, PutFn put)
    : impl_(std::make_shared<const Impl>(
          Impl{std::move(x), std::move(s), std::move(y), std::move(r), std::move(get), std::move(put)})) {}

Lens lens_identity(const FinSpace& x, const FinSpace& s) {
  return Lens(
      x, s, x, s, [](const Value& v) { return v; },
      [](const Value&, const Value& r) { return r; });
}

Lens lens_adapter(FinSpace x, FinSpace s, FinSpace y, FinSpace r,
                  std::function<Value(const Value&)> forward,
                  std::function<Value(const Value&)> backward) {
  return Lens(std::move(x), std::move(s), std::move(y), std::move(r), std::move(forward),
              [backward = std::move(backward)](const Value&, const Value& r) { return backward(r); });
}

Lens lens_compose(const Lens& first, const Lens& second) {
  expect_same(first.y(), second.x(), "lens_compose forward boundary");
  expect_same(first.r(), second.s(), "lens_compose backward boundary");
  return Lens(
      first.x(), first.s(), second.y(), second.r(),
      [first, second](const Value& x) { return second.get(first.get(x)); },
      [first, second](const Value& x, const Value& t) {
        return first.put(x, second.put(first.get(x), t));
      });
}

Lens lens_tensor(const Lens& a, const Lens& b) {
  return Lens(
      FinSpace::product({a.x(), b.x()}), FinSpace::product({a.s(), b.s()}),
      FinSpace::product({a.y(), b.y()}), FinSpace::product({a.r(), b.r()}),
      [a, b](const Value& x) { return Value::tuple({a.get(x[0]), b.get(x[1])}); },
      [a, b](const Value& x, const Value& r) {
        return Value::tuple({a.put(x[0], r[0]), b.put(x[1], r[1])});
      });
}

Lens lens_associator(const FinSpace& a, const FinSpace& b, const FinSpace& c,
                     const FinSpace& qa, const FinSpace& qb, const FinSpace& qc) {
  return lens_adapter(
      FinSpace::product({a, FinSpace::product({b, c})}),
      FinSpace::product({qa, FinSpace::product({qb, qc})}),
      FinSpace::product({FinSpace::product({a, b}), c}),
      FinSpace::product({FinSpace::product({qa, qb}), qc}),
      [](const Value& v) { return Value::tuple({Value::tuple({v[0], v[1][0]}), v[1][1]}); },
      [](const Value& v) { return Value::tuple({v[0][0], Value::tuple({v[0][1], v[1]})}); });
}

std::vector<Rational> default_reward_probes() { return {Rational(-1), Rational(0), Rational(1), Rational(2)}; }

std::vector<Value> probe_values(const FinSpace& space, const std::vector<Rational>& probes,
                                std::uint64_t cap) {
  if (space.enumerable()) return enumerate(space, cap);
  std::vector<Value> out;
  switch (space.kind()) {
    case FinSpace::Kind::kRewardSpace: {
      const std::size_t n = space.players().size();
      std::vector<std::size_t> digits(n, 0);
      while (true) {
        std::vector<Rational> entries;
        for (std::size_t d : digits) entries.push_back(probes.at(d));
        out.push_back(Value::rewards(std::move(entries)));
        if (out.size() > cap) throw Error(ErrorCode::kCapExceeded, "probe set too large");
        std::size_t pos = n;
        while (pos > 0 && ++digits[pos - 1] == probes.size()) digits[--pos] = 0;
        if (pos == 0) break;
      }
      break;
    }
    case FinSpace::Kind::kSum:
      for (std::size_t t = 0; t < space.parts().size(); ++t) {
        for (auto& v : probe_values(space.part(t), probes, cap)) out.push_back(Value::tagged(t, v));
      }
      break;
    case FinSpace::Kind::kProduct:
    case FinSpace::Kind::kPlayerIndexed: {
      std::vector<Value> partial{Value::tuple({})};
      for (const auto& part : space.parts()) {
        const auto column = probe_values(part, probes, cap);
        std::vector<Value> next;
        for (const auto& prefix : partial) {
          for (const auto& v : column) {
            auto items = prefix.items();
            items.push_back(v);
            next.push_back(Value::tuple(std::move(items)));
            if (next.size() > cap) throw Error(ErrorCode::kCapExceeded, "probe set too large");
          }
        }
        partial = std::move(next);
      }
      for (const auto& v : partial) {
        out.push_back(space.is(FinSpace::Kind::kProduct) ? v : Value::by_player(v.items()));
      }
      break;
    }
    default:
      break;
  }
  return out;
}

bool lens_equal(const Lens& a, const Lens& b, const std::vector<Rational>& probes,
                std::uint64_t cap) {
  if (!(a.x() == b.x() && a.s() == b.s() && a.y() == b.y() && a.r() == b.r())) {
    throw Error(ErrorCode::kNotComparable, "lens boundaries differ");
  }
  const auto xs = enumerate(a.x(), cap);
  const auto rs = probe_values(a.r(), probes, cap);
  for (const auto& x : xs) {
    if (!(a.get(x) == b.get(x))) return false;
    for (const auto& r : rs) {
      if (!(a.put(x, r) == b.put(x, r))) return false;
    }
  }
  return true;
}

ParamLens::ParamLens(FinSpace p, FinSpace q, Lens underlying)
    : p_(std::move(p)), q_(std::move(q)), underlying_(std::move(underlying)) {
  const auto& src = underlying_.x();
  const auto& bwd = underlying_.s();
  if (!src.is(FinSpace::Kind::kProduct) || src.parts().size() != 2 || !(src.part(0) == p_) ||
      !bwd.is(FinSpace::Kind::kProduct) || bwd.parts().size() != 2 || !(bwd.part(0) == q_)) {
    throw Error(ErrorCode::kTypeMismatch, "parametrised lens source must be (P x X, Q x S)");
  }
  x_ = src.part(1);
  s_ = bwd.part(1);
}

ParamLens ParamLens::from_lens(const Lens& lens) {
  const Lens drop = lens_adapter(
      FinSpace::product({FinSpace::unit(), lens.x()}), FinSpace::product({FinSpace::unit(), lens.s()}),
      lens.x(), lens.s(), [](const Value& v) { return v[1]; },
      [](const Value& s) { return Value::tuple({Value::point(), s}); });
  return ParamLens(FinSpace::unit(), FinSpace::unit(), lens_compose(drop, lens));
}

ParamLens plens_compose(const ParamLens& k, const ParamLens& l) {
  expect_same(k.y(), l.x(), "plens_compose forward boundary");
  expect_same(k.r(), l.s(), "plens_compose backward boundary");
  const FinSpace p = FinSpace::product({k.p(), l.p()});
  const FinSpace q = FinSpace::product({k.q(), l.q()});
  // ((p, p'), x) -> (p', (p, x)) and back on the coplay side.
  const Lens shuffle = lens_adapter(
      FinSpace::product({p, k.x()}), FinSpace::product({q, k.s()}),
      FinSpace::product({l.p(), k.underlying().x()}), FinSpace::product({l.q(), k.underlying().s()}),
      [](const Value& v) { return Value::tuple({v[0][1], Value::tuple({v[0][0], v[1]})}); },
      [](const Value& v) { return Value::tuple({Value::tuple({v[1][0], v[0]}), v[1][1]}); });
  const Lens stage = lens_tensor(lens_identity(l.p(), l.q()), k.underlying());
  return ParamLens(p, q, lens_compose(lens_compose(shuffle, stage), l.underlying()));
}

ParamLens reparametrise(const Lens& w, const ParamLens& l) {
  expect_same(w.y(), l.p(), "reparametrise strategy boundary");
  expect_same(w.r(), l.q(), "reparametrise reward boundary");
  return ParamLens(w.x(), w.s(),
                   lens_compose(lens_tensor(w, lens_identity(l.x(), l.s())), l.underlying()));
}

ParamLens plens_tensor(const ParamLens& a, const ParamLens& b) {
  const FinSpace p = FinSpace::product({a.p(), b.p()});
  const FinSpace q = FinSpace::product({a.q(), b.q()});
  const Lens shuffle = lens_adapter(
      FinSpace::product({p, FinSpace::product({a.x(), b.x()})}),
      FinSpace::product({q, FinSpace::product({a.s(), b.s()})}),
      FinSpace::product({a.underlying().x(), b.underlying().x()}),
      FinSpace::product({a.underlying().s(), b.underlying().s()}),
      [](const Value& v) {
        return Value::tuple({Value::tuple({v[0][0], v[1][0]}), Value::tuple({v[0][1], v[1][1]})});
      },
      [](const Value& v) {
        return Value::tuple({Value::tuple({v[0][0], v[1][0]}), Value::tuple({v[0][1], v[1][1]})});
      });
  return ParamLens(p, q, lens_compose(shuffle, lens_tensor(a.underlying(), b.underlying())));
}

bool plens_equal(const ParamLens& a, const ParamLens& b, const std::vector<Rational>& probes,
                 std::uint64_t cap) {
  if (!(a.p() == b.p() && a.q() == b.q())) {
    throw Error(ErrorCode::kNotComparable, "parameter spaces differ");
  }
  return lens_equal(a.underlying(), b.underlying(), probes, cap);
}

}  // namespace ogk
