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
#ifndef OGK_LENS_H_
#define OGK_LENS_H_

#include <functional>
#include <memory>
#include <vector>

#include "ogk/rational.h"
#include "ogk/space.h"
#include "ogk/value.h"

namespace ogk {

// A lens from (X, S) to (Y, R): get : X -> Y, put : X x R -> S.
// The maps are stored as executable closures; nothing is tabulated.
class Lens {
 public:
  using GetFn = std::function<Value(const Value&)>;
  using PutFn = std::function<Value(const Value&, const Value&)>;

  Lens(FinSpace x, FinSpace s, FinSpace y, FinSpace r, GetFn get, PutFn put);

  const FinSpace& x() const { return impl_->x; }
  const FinSpace& s() const { return impl_->s; }
  const FinSpace& y() const { return impl_->y; }
  const FinSpace& r() const { return impl_->r; }

  Value get(const Value& x) const { return impl_->get(x); }
  Value put(const Value& x, const Value& r) const { return impl_->put(x, r); }

 private:
  struct Impl {
    FinSpace x, s, y, r;
    GetFn get;
    PutFn put;
  };
  std::shared_ptr<const Impl> impl_;
};

Lens lens_identity(const FinSpace& x, const FinSpace& s);

// A lens whose put ignores the forward state: put(x, r) = backward(r).
Lens lens_adapter(FinSpace x, FinSpace s, FinSpace y, FinSpace r,
                  std::function<Value(const Value&)> forward,
                  std::function<Value(const Value&)> backward);

// Diagrammatic order: first, then second. Throws kTypeMismatch when
// first's target differs from second's source.
Lens lens_compose(const Lens& first, const Lens& second);

// Componentwise lens on (X x X', S x S') -> (Y x Y', R x R').
Lens lens_tensor(const Lens& a, const Lens& b);

// ((A x B) x C) <- (A x (B x C)) on both the forward and backward pairs.
Lens lens_associator(const FinSpace& a, const FinSpace& b, const FinSpace& c,
                     const FinSpace& qa, const FinSpace& qb, const FinSpace& qc);

// Finite sample of a possibly non-enumerable space: RewardSpace positions
// range over probe^players, everything else is enumerated canonically.
std::vector<Value> probe_values(const FinSpace& space, const std::vector<Rational>& probes,
                                std::uint64_t cap = kDefaultCap);

std::vector<Rational> default_reward_probes();

// Extensional equality: get on every x, put on every (x, probe r). Sound for
// tests only, since reward positions are sampled. Throws kNotComparable when
// boundaries differ.
bool lens_equal(const Lens& a, const Lens& b,
                const std::vector<Rational>& probes = default_reward_probes(),
                std::uint64_t cap = kDefaultCap);

// A lens from (P x X, Q x S) to (Y, R) with the parameter pair recorded.
class ParamLens {
 public:
  // underlying must run from (Product[p, x], Product[q, s]).
  ParamLens(FinSpace p, FinSpace q, Lens underlying);

  // Trivially parametrised: params (Unit, Unit).
  static ParamLens from_lens(const Lens& lens);

  const FinSpace& p() const { return p_; }
  const FinSpace& q() const { return q_; }
  const FinSpace& x() const { return x_; }
  const FinSpace& s() const { return s_; }
  const FinSpace& y() const { return underlying_.y(); }
  const FinSpace& r() const { return underlying_.r(); }
  const Lens& underlying() const { return underlying_; }

  Value get(const Value& param, const Value& x) const {
    return underlying_.get(Value::tuple({param, x}));
  }
  // Returns Tuple<q, s>.
  Value put(const Value& param, const Value& x, const Value& r) const {
    return underlying_.put(Value::tuple({param, x}), r);
  }

 private:
  FinSpace p_, q_, x_, s_;
  Lens underlying_;
};

// K ; L with params (P x P', Q x Q'); the input ((p, p'), x) is reassociated
// to (p', (p, x)) before (id ⊗ K) ; L.
ParamLens plens_compose(const ParamLens& k, const ParamLens& l);

// (w ⊗ id_(X,S)) ; L, with params w's source.
ParamLens reparametrise(const Lens& w, const ParamLens& l);

// Parallel composition with params grouped first: ((p, p'), (x, x')).
ParamLens plens_tensor(const ParamLens& a, const ParamLens& b);

bool plens_equal(const ParamLens& a, const ParamLens& b,
                 const std::vector<Rational>& probes = default_reward_probes(),
                 std::uint64_t cap = kDefaultCap);

}  // namespace ogk

#endif  // OGK_LENS_H_
