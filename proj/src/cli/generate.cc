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
#include "ogk/cli/generate.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ogk::cli {

namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::string random_ident(Rng& rng) {
  static constexpr std::string_view kFirst = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_";
  static constexpr std::string_view kRest = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-";
  std::string s(1, kFirst[uniform(rng, 0, kFirst.size() - 1)]);
  const std::size_t extra = uniform(rng, 0, 6);
  for (std::size_t i = 0; i < extra; ++i) s += kRest[uniform(rng, 0, kRest.size() - 1)];
  return s;
}

std::vector<std::string> distinct_idents(Rng& rng, std::size_t n) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  while (out.size() < n) {
    std::string s = random_ident(rng);
    if (seen.insert(s).second) out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::string> move_labels(Rng& rng, std::size_t arity, bool exotic) {
  if (exotic) return distinct_idents(rng, arity);
  switch (arity) {
    case 1: return {"C"};
    case 2: return {"L", "R"};
    case 3: return {"L", "M", "R"};
    default: break;
  }
  std::vector<std::string> out;
  for (std::size_t k = 0; k < arity; ++k) out.push_back("m" + std::to_string(k));
  return out;
}

Rational random_reward(Rng& rng, const GenOptions& o) {
  const auto whole = std::uniform_int_distribution<std::int64_t>(o.min_reward, o.max_reward)(rng);
  if (o.exotic_tokens && coin(rng, 0.3)) {
    return Rational(whole * 7 + static_cast<std::int64_t>(uniform(rng, 0, 6)),
                    static_cast<std::int64_t>(uniform(rng, 2, 10)));
  }
  return Rational(whole);
}

std::vector<std::string> player_names(Rng& rng, std::size_t n, bool exotic) {
  if (exotic) return distinct_idents(rng, n);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("p" + std::to_string(i + 1));
  return out;
}

struct Skeleton {
  bool leaf = true;
  std::size_t owner = 0;
  std::size_t arity = 0;
  std::size_t group = 0;
  std::vector<Rational> rewards;
  std::vector<Skeleton> kids;
};

Skeleton grow(Rng& rng, const GenOptions& o, std::size_t players, std::size_t depth) {
  Skeleton s;
  const bool stop = depth >= o.max_depth || (depth == 0 ? coin(rng, 0.03) : coin(rng, 0.35));
  if (stop) {
    for (std::size_t p = 0; p < players; ++p) s.rewards.push_back(random_reward(rng, o));
    return s;
  }
  s.leaf = false;
  s.owner = uniform(rng, 0, players - 1);
  // Arity 1 is legal but dull; keep it rare.
  s.arity = o.max_arity <= 1 ? 1 : (coin(rng, 0.1) ? 1 : uniform(rng, 2, o.max_arity));
  for (std::size_t m = 0; m < s.arity; ++m) s.kids.push_back(grow(rng, o, players, depth + 1));
  return s;
}

void collect(Skeleton& s, std::vector<Skeleton*>& out) {
  if (s.leaf) return;
  out.push_back(&s);
  for (auto& k : s.kids) collect(k, out);
}

}  // namespace

gamefile::GameDoc random_extensive_doc(std::mt19937_64& rng, const GenOptions& o) {
  while (true) {
    const std::size_t n = uniform(rng, 1, std::max<std::size_t>(1, o.max_players));
    Skeleton root = grow(rng, o, n, 0);
    std::vector<Skeleton*> nodes;
    collect(root, nodes);

    // Partition nodes into groups; only same owner and arity may share.
    struct Group {
      std::size_t owner, arity;
      std::vector<Skeleton*> members;
    };
    std::vector<Group> groups;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> by_key;
    for (Skeleton* s : nodes) {
      auto& candidates = by_key[{s->owner, s->arity}];
      if (o.merge_infosets && !candidates.empty() && coin(rng, 0.5)) {
        s->group = candidates[uniform(rng, 0, candidates.size() - 1)];
        groups[s->group].members.push_back(s);
      } else {
        s->group = groups.size();
        candidates.push_back(groups.size());
        groups.push_back({s->owner, s->arity, {s}});
      }
    }
    std::uint64_t profiles = 1;
    bool too_big = false;
    for (const auto& g : groups) {
      profiles *= g.arity;
      if (profiles > o.max_profiles) too_big = true;
    }
    if (too_big) continue;

    gamefile::ExtensiveDoc doc;
    doc.players = player_names(rng, n, o.exotic_tokens);
    // Shared groups (and the odd singleton) are declared; the rest are inline.
    std::vector<bool> declared(groups.size());
    for (std::size_t i = 0; i < groups.size(); ++i) {
      declared[i] = groups[i].members.size() > 1 || (o.merge_infosets && coin(rng, 0.2));
    }
    std::vector<std::string> names(groups.size());
    std::set<std::string> used_names;
    auto fresh_name = [&](std::size_t k) {
      std::string s;
      do {
        s = o.exotic_tokens ? random_ident(rng) : "h" + std::to_string(k);
        ++k;
      } while (!used_names.insert(s).second);
      return s;
    };
    std::vector<std::vector<std::string>> labels(groups.size());
    for (std::size_t i = 0; i < groups.size(); ++i) labels[i] = move_labels(rng, groups[i].arity, o.exotic_tokens);
    std::size_t counter = 0;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (!declared[i]) continue;
      names[i] = fresh_name(counter++);
      doc.infosets.push_back({names[i], doc.players[groups[i].owner], labels[i], false, {}});
    }
    if (o.allow_unused && coin(rng, 0.2)) {
      const std::size_t arity = uniform(rng, 1, std::max<std::size_t>(1, o.max_arity));
      doc.infosets.push_back({fresh_name(counter++), doc.players[uniform(rng, 0, n - 1)],
                              move_labels(rng, arity, o.exotic_tokens), false, {}});
    }
    // Inline sets are numbered by their position, in depth-first order.
    for (Skeleton* s : nodes) {
      const std::size_t i = s->group;
      if (declared[i]) continue;
      names[i] = "@" + std::to_string(doc.infosets.size());
      doc.infosets.push_back({names[i], doc.players[groups[i].owner], labels[i], true, {}});
    }
    auto build = [&](auto&& self, const Skeleton& s) -> gamefile::TreeDoc {
      gamefile::TreeDoc t;
      t.leaf = s.leaf;
      if (s.leaf) {
        t.rewards = s.rewards;
        return t;
      }
      t.infoset = names[s.group];
      for (const auto& k : s.kids) t.children.push_back(self(self, k));
      return t;
    };
    doc.root = build(build, root);
    return gamefile::GameDoc{std::move(doc)};
  }
}

gamefile::GameDoc random_normal_form_doc(std::mt19937_64& rng, const GenOptions& o) {
  gamefile::NormalFormDoc doc;
  const std::size_t n = uniform(rng, 1, std::max<std::size_t>(1, o.max_players));
  doc.players = player_names(rng, n, o.exotic_tokens);
  std::vector<std::vector<std::string>> labels;
  for (std::size_t p = 0; p < n; ++p) {
    labels.push_back(move_labels(rng, uniform(rng, 1, std::max<std::size_t>(1, o.max_arity)), o.exotic_tokens));
    doc.actions.push_back({doc.players[p], labels.back(), {}});
  }
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    gamefile::PayoffRow row;
    for (std::size_t p = 0; p < n; ++p) {
      row.profile.push_back(labels[p][digits[p]]);
      row.payoffs.push_back(random_reward(rng, o));
    }
    doc.payoffs.push_back(std::move(row));
    std::size_t k = n;
    bool done = true;
    while (k > 0) {
      --k;
      if (++digits[k] < labels[k].size()) {
        done = false;
        break;
      }
      digits[k] = 0;
    }
    if (done) break;
  }
  std::shuffle(doc.payoffs.begin(), doc.payoffs.end(), rng);
  return gamefile::GameDoc{std::move(doc)};
}

}  // namespace ogk::cli
