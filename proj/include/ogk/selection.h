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
#ifndef OGK_SELECTION_H_
#define OGK_SELECTION_H_

#include <functional>
#include <memory>
#include <vector>

#include "ogk/lens.h"
#include "ogk/rational.h"
#include "ogk/space.h"
#include "ogk/value.h"

namespace ogk {

// A valuation k : Omega -> CoOmega of the options of a selection function.
class Costate {
 public:
  using Fn = std::function<Value(const Value&)>;

  Costate(FinSpace domain, FinSpace codomain, Fn fn);

  // A lens to (Unit, Unit) read as the map x -> put(x, *).
  static Costate from_lens(const Lens& lens);

  const FinSpace& domain() const { return domain_; }
  const FinSpace& codomain() const { return codomain_; }
  Value operator()(const Value& option) const { return (*fn_)(option); }

  // Same map, backed by a table over enumerate(domain).
  Costate tabulated(std::uint64_t cap = kDefaultCap) const;

 private:
  FinSpace domain_, codomain_;
  std::shared_ptr<const Fn> fn_;
};

// l ; k, i.e. x -> put_l(x, k(get_l(x))).
Costate precompose(const Lens& l, const Costate& k);

// Multivalued selection function over (Omega, CoOmega).
class SelectionFn {
 public:
  enum class Form { kArgmax, kNashProduct, kPushforward, kExtensional };
  using Extract = std::function<Rational(const Value&)>;
  using Enumerator = std::function<std::vector<Value>(const Costate&)>;

  Form form() const { return impl_->form; }
  const FinSpace& omega() const { return impl_->omega; }
  const FinSpace& coomega() const { return impl_->coomega; }

  // Form-specific data.
  const Extract& extract() const { return impl_->extract; }
  const std::vector<SelectionFn>& parts() const { return impl_->parts; }
  const Lens& lens() const { return *impl_->lens; }
  const Enumerator& enumerator() const { return impl_->enumerator; }

 private:
  struct Impl {
    Form form;
    FinSpace omega, coomega;
    Extract extract;
    std::vector<SelectionFn> parts;
    std::shared_ptr<const Lens> lens;
    Enumerator enumerator;
  };
  explicit SelectionFn(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  friend SelectionFn argmax(FinSpace, FinSpace, Extract);
  friend SelectionFn pushforward(const Lens&, const SelectionFn&);
  friend SelectionFn nash_product(std::vector<PlayerId>, std::vector<SelectionFn>);
  friend SelectionFn extensional(FinSpace, FinSpace, Enumerator);

  std::shared_ptr<const Impl> impl_;
};

// All options whose extracted valuation is maximal; ties are all kept.
SelectionFn argmax(FinSpace options, FinSpace rewards, SelectionFn::Extract extract);

// argmax where the valuation is the single entry of a one-player RewardSpace.
SelectionFn argmax(FinSpace options, FinSpace rewards);

// Selects get_l(x) for x in eps(l ; k).
SelectionFn pushforward(const Lens& l, const SelectionFn& eps);

// Per-player unilateral-deviation product over PlayerIndexed spaces.
SelectionFn nash_product(std::vector<PlayerId> players, std::vector<SelectionFn> parts);

SelectionFn extensional(FinSpace omega, FinSpace coomega, SelectionFn::Enumerator enumerator);

// Selected options in canonical enumeration order.
std::vector<Value> select(const SelectionFn& eps, const Costate& k, std::uint64_t cap = kDefaultCap);

bool member(const SelectionFn& eps, const Costate& k, const Value& candidate,
            std::uint64_t cap = kDefaultCap);

}  // namespace ogk

#endif  // OGK_SELECTION_H_
