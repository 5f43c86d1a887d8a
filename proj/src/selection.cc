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
#include "ogk/selection.h"

#include <algorithm>
#include <map>

#include "ogk/error.h"

namespace ogk {
namespace {

void expect_domain(const SelectionFn& eps, const Costate& k) {
  if (!(eps.omega() == k.domain()) || !(eps.coomega() == k.codomain())) {
    throw Error(ErrorCode::kTypeMismatch, "costate " + k.domain().to_string() + " -> " +
                                              k.codomain().to_string() +
                                              " does not fit selection over " +
                                              eps.omega().to_string() + ", " +
                                              eps.coomega().to_string());
  }
}

// Valuation of a player's options with the rest of the profile held fixed.
Costate deviation_costate(const SelectionFn& part, const Costate& k, const Value& profile,
                          std::size_t player) {
  return Costate(part.omega(), part.coomega(), [k, profile, player](const Value& option) {
    return k(with_item(profile, player, option))[player];
  });
}

std::vector<Value> canonical(const FinSpace& space, std::vector<Value> values) {
  std::vector<std::pair<std::uint64_t, Value>> keyed;
  keyed.reserve(values.size());
  for (auto& v : values) keyed.emplace_back(rank(space, v), std::move(v));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Value> out;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i > 0 && keyed[i].first == keyed[i - 1].first) continue;
    out.push_back(std::move(keyed[i].second));
  }
  return out;
}

std::vector<Value> select_argmax(const SelectionFn& eps, const Costate& k, std::uint64_t cap) {
  const auto options = enumerate(eps.omega(), cap);
  if (options.empty()) throw Error(ErrorCode::kEmptySpace, "argmax over an empty space");
  std::vector<Rational> scores;
  scores.reserve(options.size());
  for (const auto& x : options) scores.push_back(eps.extract()(k(x)));
  const Rational best = *std::max_element(scores.begin(), scores.end());
  std::vector<Value> out;
  for (std::size_t i = 0; i < options.size(); ++i) {
    if (scores[i] == best) out.push_back(options[i]);
  }
  return out;
}

}  // namespace

Costate::Costate(FinSpace domain, FinSpace codomain, Fn fn)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      fn_(std::make_shared<const Fn>(std::move(fn))) {}

Costate Costate::from_lens(const Lens& lens) {
  if (!lens.y().is(FinSpace::Kind::kUnit) || !lens.r().is(FinSpace::Kind::kUnit)) {
    throw Error(ErrorCode::kTypeMismatch, "a costate is a lens into (Unit, Unit)");
  }
  return Costate(lens.x(), lens.s(),
                 [lens](const Value& x) { return lens.put(x, Value::point()); });
}

Costate Costate::tabulated(std::uint64_t cap) const {
  auto table = std::make_shared<std::vector<Value>>();
  for (const auto& option : enumerate(domain_, cap)) table->push_back((*fn_)(option));
  return Costate(domain_, codomain_, [table, domain = domain_](const Value& option) {
    return (*table)[rank(domain, option)];
  });
}

Costate precompose(const Lens& l, const Costate& k) {
  if (!(l.y() == k.domain()) || !(l.r() == k.codomain())) {
    throw Error(ErrorCode::kTypeMismatch, "precompose: lens target does not match costate");
  }
  return Costate(l.x(), l.s(), [l, k](const Value& x) { return l.put(x, k(l.get(x))); });
}

SelectionFn argmax(FinSpace options, FinSpace rewards, SelectionFn::Extract extract) {
  if (options.enumerable() && cardinality(options) == 0) {
    throw Error(ErrorCode::kEmptySpace, "argmax over an empty space");
  }
  return SelectionFn(std::make_shared<const SelectionFn::Impl>(SelectionFn::Impl{
      SelectionFn::Form::kArgmax, std::move(options), std::move(rewards), std::move(extract), {},
      nullptr, nullptr}));
}

SelectionFn argmax(FinSpace options, FinSpace rewards) {
  if (!rewards.is(FinSpace::Kind::kRewardSpace) || rewards.players().size() != 1) {
    throw Error(ErrorCode::kTypeMismatch,
                "scalar argmax needs a one-player reward space, got " + rewards.to_string());
  }
  return argmax(std::move(options), std::move(rewards),
                [](const Value& r) { return r.rewards().front(); });
}

SelectionFn pushforward(const Lens& l, const SelectionFn& eps) {
  if (!(l.x() == eps.omega()) || !(l.s() == eps.coomega())) {
    throw Error(ErrorCode::kTypeMismatch, "pushforward: lens source does not match selection");
  }
  return SelectionFn(std::make_shared<const SelectionFn::Impl>(
      SelectionFn::Impl{SelectionFn::Form::kPushforward, l.y(), l.r(), nullptr, {eps},
                        std::make_shared<const Lens>(l), nullptr}));
}

SelectionFn nash_product(std::vector<PlayerId> players, std::vector<SelectionFn> parts) {
  if (players.size() != parts.size()) {
    throw Error(ErrorCode::kTypeMismatch, "nash_product needs one selection per player");
  }
  std::vector<FinSpace> omegas, coomegas;
  for (const auto& part : parts) {
    omegas.push_back(part.omega());
    coomegas.push_back(part.coomega());
  }
  return SelectionFn(std::make_shared<const SelectionFn::Impl>(SelectionFn::Impl{
      SelectionFn::Form::kNashProduct, FinSpace::player_indexed(players, std::move(omegas)),
      FinSpace::player_indexed(players, std::move(coomegas)), nullptr, std::move(parts), nullptr,
      nullptr}));
}

SelectionFn extensional(FinSpace omega, FinSpace coomega, SelectionFn::Enumerator enumerator) {
  return SelectionFn(std::make_shared<const SelectionFn::Impl>(
      SelectionFn::Impl{SelectionFn::Form::kExtensional, std::move(omega), std::move(coomega),
                        nullptr, {}, nullptr, std::move(enumerator)}));
}

std::vector<Value> select(const SelectionFn& eps, const Costate& k, std::uint64_t cap) {
  expect_domain(eps, k);
  switch (eps.form()) {
    case SelectionFn::Form::kArgmax:
      return select_argmax(eps, k, cap);
    case SelectionFn::Form::kNashProduct: {
      const Costate table = k.tabulated(cap);
      // Argmax parts share one best-response value per fixed choice of the
      // other players; other parts go through member.
      const std::size_t n = eps.parts().size();
      std::vector<std::vector<Value>> options(n);
      std::vector<std::map<Value, Rational>> best(n);
      for (std::size_t p = 0; p < n; ++p) {
        if (eps.parts()[p].form() == SelectionFn::Form::kArgmax) {
          options[p] = enumerate(eps.parts()[p].omega(), cap);
        }
      }
      std::vector<Value> out;
      for (const auto& profile : enumerate(eps.omega(), cap)) {
        bool selected = true;
        for (std::size_t p = 0; p < n && selected; ++p) {
          const SelectionFn& part = eps.parts()[p];
          if (part.form() != SelectionFn::Form::kArgmax) {
            selected = member(part, deviation_costate(part, table, profile, p), profile[p], cap);
            continue;
          }
          const Rational mine = part.extract()(table(profile)[p]);
          const auto [it, fresh] = best[p].try_emplace(with_item(profile, p, Value::point()), mine);
          if (fresh) {
            for (const auto& x : options[p]) {
              it->second = std::max(it->second, part.extract()(table(with_item(profile, p, x))[p]));
            }
          }
          selected = !(it->second > mine);
        }
        if (selected) out.push_back(profile);
      }
      return out;
    }
    case SelectionFn::Form::kPushforward: {
      const SelectionFn& inner = eps.parts().front();
      std::vector<Value> images;
      for (const auto& x : select(inner, precompose(eps.lens(), k), cap)) {
        images.push_back(eps.lens().get(x));
      }
      return canonical(eps.omega(), std::move(images));
    }
    case SelectionFn::Form::kExtensional: {
      auto chosen = eps.enumerator()(k);
      for (const auto& v : chosen) expect_type(v, eps.omega(), "extensional selection");
      return canonical(eps.omega(), std::move(chosen));
    }
  }
  return {};
}

bool member(const SelectionFn& eps, const Costate& k, const Value& candidate, std::uint64_t cap) {
  expect_domain(eps, k);
  expect_type(candidate, eps.omega(), "member candidate");
  switch (eps.form()) {
    case SelectionFn::Form::kArgmax: {
      const Rational mine = eps.extract()(k(candidate));
      for (const auto& x : enumerate(eps.omega(), cap)) {
        if (eps.extract()(k(x)) > mine) return false;
      }
      return true;
    }
    case SelectionFn::Form::kNashProduct: {
      for (std::size_t p = 0; p < eps.parts().size(); ++p) {
        const SelectionFn& part = eps.parts()[p];
        if (!member(part, deviation_costate(part, k, candidate, p), candidate[p], cap)) {
          return false;
        }
      }
      return true;
    }
    case SelectionFn::Form::kPushforward: {
      const SelectionFn& inner = eps.parts().front();
      for (const auto& x : select(inner, precompose(eps.lens(), k), cap)) {
        if (eps.lens().get(x) == candidate) return true;
      }
      return false;
    }
    case SelectionFn::Form::kExtensional: {
      const auto chosen = eps.enumerator()(k);
      return std::find(chosen.begin(), chosen.end(), candidate) != chosen.end();
    }
  }
  return false;
}

}  // namespace ogk
