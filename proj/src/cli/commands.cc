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
#include "ogk/cli/commands.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "ogk/arena.h"
#include "ogk/cli/generate.h"
#include "ogk/error.h"
#include "ogk/translate.h"

namespace ogk::cli {

using Json = nlohmann::ordered_json;

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kCompositional: return "compositional";
    case Method::kOracle: return "oracle";
    case Method::kBoth: return "both";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view s) {
  if (s == "compositional") return Method::kCompositional;
  if (s == "oracle") return Method::kOracle;
  if (s == "both") return Method::kBoth;
  return std::nullopt;
}

std::string_view profile_error_name(ProfileError::Kind k) {
  switch (k) {
    case ProfileError::Kind::kSyntax: return "ProfileSyntax";
    case ProfileError::Kind::kUnknownPlayer: return "UnknownPlayer";
    case ProfileError::Kind::kUnknownLabel: return "UnknownLabel";
    case ProfileError::Kind::kIncompleteProfile: return "IncompleteProfile";
  }
  return "?";
}

// --- loading --------------------------------------------------------------

LoadedGame load_game_text(std::string_view text) {
  LoadedGame g;
  g.doc = gamefile::parse(text);
  g.warnings = gamefile::validate(g.doc);
  if (g.doc.is_extensive()) {
    gamefile::LabeledGame lg = gamefile::to_game(g.doc.extensive());
    g.players = lg.game.players;
    g.slots.resize(g.players.size());
    g.slot_names.resize(g.players.size());
    for (std::size_t i : infosets_in_tree(lg.game)) {
      const InfoSet& s = lg.game.infosets[i];
      g.slots[s.owner].push_back(lg.move_labels[i]);
      g.slot_names[s.owner].push_back(s.name);
    }
    g.perfect_information = is_perfect_information(lg.game);
    g.extensive.emplace(std::move(lg.game));
  } else {
    gamefile::LabeledNormalForm ln = gamefile::to_game(g.doc.normal_form());
    g.players = ln.game.players;
    for (auto& labels : ln.action_labels) {
      g.slots.push_back({labels});
      g.slot_names.push_back({"action"});
    }
    g.normal.emplace(std::move(ln.game));
  }
  return g;
}

LoadedGame load_game_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_game_text(buf.str());
}

// --- profile conversions --------------------------------------------------

namespace {

void pet_moves(const PETree& t, std::size_t player, const Value& v, std::vector<std::size_t>& out) {
  if (t.is_leaf()) return;
  if (t.player() == player) out.push_back(v[0].as_index());
  for (std::size_t m = 0; m < t.arity(); ++m) pet_moves(t.child(m), player, v[1][m], out);
}

MoveProfile from_pet_value(const PerfectGame& pet, const Value& by_player) {
  MoveProfile out(pet.players.size());
  for (std::size_t p = 0; p < pet.players.size(); ++p) pet_moves(pet.tree, p, by_player[p], out[p]);
  return out;
}

// Player-indexed IET profiles and normal-form profiles share this shape
// after wrapping normal-form actions in singleton lists.
MoveProfile from_iet_value(const Value& by_player) {
  MoveProfile out;
  for (const Value& s : by_player.items()) {
    std::vector<std::size_t> moves;
    for (const Value& m : s.items()) moves.push_back(m.as_index());
    out.push_back(std::move(moves));
  }
  return out;
}

MoveProfile from_normal_value(const Value& by_player) {
  MoveProfile out;
  for (const Value& a : by_player.items()) out.push_back({a.as_index()});
  return out;
}

Value iet_value(const MoveProfile& profile) {
  std::vector<Value> players;
  for (const auto& moves : profile) {
    std::vector<Value> items;
    for (std::size_t m : moves) items.push_back(Value::index(m));
    players.push_back(Value::tuple(std::move(items)));
  }
  return Value::by_player(std::move(players));
}

Value normal_value(const MoveProfile& profile) {
  std::vector<Value> items;
  for (const auto& moves : profile) items.push_back(Value::index(moves.at(0)));
  return Value::by_player(std::move(items));
}

std::vector<MoveProfile> canonical(std::vector<MoveProfile> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t k = s.find(sep, start);
    out.push_back(trim(s.substr(start, k == std::string_view::npos ? std::string_view::npos : k - start)));
    if (k == std::string_view::npos) break;
    start = k + 1;
  }
  return out;
}

std::vector<std::string> labels_of(const LoadedGame& g, std::size_t p, const std::vector<std::size_t>& moves) {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < moves.size(); ++j) out.push_back(g.slots[p][j].at(moves[j]));
  return out;
}

}  // namespace

std::vector<MoveProfile> solve_compositional(const LoadedGame& g, std::uint64_t cap) {
  std::vector<MoveProfile> out;
  if (g.normal) {
    for (const Value& v : equilibria(normal_form_to_game(*g.normal), normal_form_context(*g.normal), cap)) {
      out.push_back(from_normal_value(v));
    }
  } else if (g.perfect_information) {
    const PerfectGame pet = iet_to_pet(*g.extensive);
    for (const Value& v : equilibria(pet_to_game(pet), payoff_context(pet), cap)) {
      out.push_back(from_pet_value(pet, v));
    }
  } else {
    const PerfectGame pet = iet_to_pet(*g.extensive);
    for (const Value& v : equilibria(iet_to_game(*g.extensive), payoff_context(pet), cap)) {
      out.push_back(from_iet_value(v));
    }
  }
  return canonical(std::move(out));
}

std::vector<MoveProfile> solve_oracle(const LoadedGame& g, std::uint64_t cap) {
  std::vector<MoveProfile> out;
  if (g.normal) {
    for (const Value& v : nash_oracle_normal_form(*g.normal, cap)) out.push_back(from_normal_value(v));
  } else if (g.perfect_information) {
    const PerfectGame pet = iet_to_pet(*g.extensive);
    for (const Value& v : nash_oracle_pet(pet, cap)) out.push_back(from_pet_value(pet, v));
  } else {
    for (const Value& v : nash_oracle_iet(*g.extensive, cap)) out.push_back(from_iet_value(v));
  }
  return canonical(std::move(out));
}

std::vector<Rational> payoff_of(const LoadedGame& g, const MoveProfile& profile) {
  if (g.normal) return g.normal->utility(normal_value(profile));
  const ImperfectGame& game = *g.extensive;
  const Value flat = iet_profile_from_players(game, iet_value(profile));
  return payoff_iet(game, play_iet(game, flat));
}

std::vector<std::string> path_of(const LoadedGame& g, const MoveProfile& profile) {
  std::vector<std::string> out;
  if (g.normal) {
    for (std::size_t p = 0; p < profile.size(); ++p) out.push_back(g.slots[p][0].at(profile[p].at(0)));
    return out;
  }
  const ImperfectGame& game = *g.extensive;
  // Slot of each occurring information set within its owner's strategy.
  std::vector<std::size_t> slot(game.infosets.size(), 0);
  std::vector<std::size_t> next(game.players.size(), 0);
  for (std::size_t i : infosets_in_tree(game)) slot[i] = next[game.infosets[i].owner]++;
  const IETree* t = &game.tree;
  while (!t->is_leaf()) {
    const std::size_t i = t->infoset();
    const std::size_t p = game.infosets[i].owner;
    const std::size_t m = profile.at(p).at(slot[i]);
    out.push_back(g.slots[p][slot[i]].at(m));
    t = &t->child(m);
  }
  return out;
}

std::string format_profile(const LoadedGame& g, const MoveProfile& profile) {
  std::vector<std::string> parts;
  for (std::size_t p = 0; p < g.players.size(); ++p) {
    parts.push_back(g.players[p] + "=" + join(labels_of(g, p, profile[p]), ","));
  }
  return join(parts, ";");
}

MoveProfile parse_profile(const LoadedGame& g, std::string_view text) {
  using Kind = ProfileError::Kind;
  MoveProfile out(g.players.size());
  std::vector<bool> seen(g.players.size(), false);
  for (const std::string& part : split(text, ';')) {
    if (part.empty()) continue;
    const std::size_t eq = part.find('=');
    if (eq == std::string::npos) {
      throw ProfileError(Kind::kSyntax, "expected player=move[,move...] but got '" + part + "'");
    }
    const std::string player = trim(std::string_view(part).substr(0, eq));
    const auto it = std::find(g.players.begin(), g.players.end(), player);
    if (it == g.players.end()) throw ProfileError(Kind::kUnknownPlayer, "unknown player '" + player + "'");
    const auto p = static_cast<std::size_t>(it - g.players.begin());
    if (seen[p]) throw ProfileError(Kind::kSyntax, "player '" + player + "' given twice");
    seen[p] = true;
    std::vector<std::string> labels;
    const std::string rest = trim(std::string_view(part).substr(eq + 1));
    if (!rest.empty()) labels = split(rest, ',');
    if (labels.size() != g.slots[p].size()) {
      throw ProfileError(Kind::kIncompleteProfile,
                         "player '" + player + "' has " + std::to_string(g.slots[p].size()) +
                             " decision(s) but " + std::to_string(labels.size()) + " move(s) were given");
    }
    for (std::size_t j = 0; j < labels.size(); ++j) {
      const auto& options = g.slots[p][j];
      const auto k = std::find(options.begin(), options.end(), labels[j]);
      if (k == options.end()) {
        throw ProfileError(Kind::kUnknownLabel, "unknown label '" + labels[j] + "' for " + player +
                                                    " at decision " + std::to_string(j + 1) +
                                                    " (expected one of " + join(options, ", ") + ")");
      }
      out[p].push_back(static_cast<std::size_t>(k - options.begin()));
    }
  }
  for (std::size_t p = 0; p < g.players.size(); ++p) {
    if (!seen[p] && !g.slots[p].empty()) {
      throw ProfileError(Kind::kIncompleteProfile, "no moves given for player '" + g.players[p] + "'");
    }
  }
  return out;
}

// --- counts ---------------------------------------------------------------

std::uint64_t profile_count(const LoadedGame& g) {
  if (g.normal) return cardinality(g.normal->action_profiles());
  if (g.perfect_information) return cardinality(profiles_pet(iet_to_pet(*g.extensive)));
  return cardinality(profiles_iet(*g.extensive));
}

std::optional<std::uint64_t> path_count(const LoadedGame& g) {
  if (g.normal) return std::nullopt;
  return cardinality(paths_iet(*g.extensive));
}

std::vector<std::uint64_t> strategy_counts(const LoadedGame& g) {
  std::vector<std::uint64_t> out;
  for (std::size_t p = 0; p < g.players.size(); ++p) {
    if (g.normal) {
      out.push_back(cardinality(g.normal->action_space(p)));
    } else if (g.perfect_information) {
      out.push_back(cardinality(strategies_pet(iet_to_pet(*g.extensive), p)));
    } else {
      out.push_back(cardinality(strategies_iet(*g.extensive, p)));
    }
  }
  return out;
}

// --- reports --------------------------------------------------------------

SolveReport make_report(const LoadedGame& g, Method method, const std::vector<MoveProfile>& profiles,
                        double elapsed_ms) {
  SolveReport r;
  r.method = method;
  r.players = g.players;
  for (const auto& prof : profiles) r.equilibria.push_back({prof, payoff_of(g, prof)});
  r.counts.profiles = profile_count(g);
  r.counts.paths = path_count(g);
  r.counts.elapsed_ms = elapsed_ms;
  return r;
}

namespace {

std::string payoff_tuple(const std::vector<Rational>& rs) {
  std::vector<std::string> parts;
  for (const auto& r : rs) parts.push_back(r.to_string());
  return "(" + join(parts, ",") + ")";
}

Json profile_json(const LoadedGame& g, const MoveProfile& prof) {
  Json j = Json::object();
  for (std::size_t p = 0; p < g.players.size(); ++p) j[g.players[p]] = labels_of(g, p, prof[p]);
  return j;
}

Json equilibrium_json(const LoadedGame& g, const Equilibrium& e) {
  Json payoff = Json::object();
  for (std::size_t p = 0; p < g.players.size(); ++p) payoff[g.players[p]] = e.payoff[p].to_string();
  return Json{{"profile", profile_json(g, e.profile)}, {"payoff", payoff}};
}

Json counts_json(const SolveReport& r) {
  Json c = Json::object();
  c["profiles"] = r.counts.profiles;
  c["paths"] = r.counts.paths ? Json(*r.counts.paths) : Json(nullptr);
  c["equilibria"] = r.equilibria.size();
  c["elapsed_ms"] = r.counts.elapsed_ms;
  return c;
}

}  // namespace

std::string render_text(const LoadedGame& g, const SolveReport& r) {
  std::ostringstream out;
  out << "method: " << method_name(r.method) << "\n";
  out << "players: " << join(r.players, " ") << "\n";
  out << "equilibria: " << r.equilibria.size() << "\n";
  for (const auto& e : r.equilibria) {
    out << "  " << format_profile(g, e.profile) << "  payoff " << payoff_tuple(e.payoff) << "\n";
  }
  out << "profiles: " << r.counts.profiles << "\n";
  if (r.counts.paths) out << "paths: " << *r.counts.paths << "\n";
  out << "elapsed_ms: " << r.counts.elapsed_ms << "\n";
  return out.str();
}

std::string render_json(const LoadedGame& g, const SolveReport& r) {
  Json j = Json::object();
  j["method"] = method_name(r.method);
  j["players"] = r.players;
  j["equilibria"] = Json::array();
  for (const auto& e : r.equilibria) j["equilibria"].push_back(equilibrium_json(g, e));
  j["counts"] = counts_json(r);
  return j.dump(2) + "\n";
}

// --- commands -------------------------------------------------------------

std::uint64_t effective_cap(const Options& opts) {
  if (opts.cap) return *opts.cap;
  if (const char* env = std::getenv("OGK_CAP"); env && *env) {
    const std::string_view s(env);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v == 0) {
      throw std::invalid_argument("OGK_CAP must be a positive integer, got '" + std::string(s) + "'");
    }
    return v;
  }
  return kDefaultCap;
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Loads the file and runs body; maps failures onto exit codes.
template <typename Body>
int guarded(const std::string& path, const Options& opts, std::ostream& err, Body body) {
  try {
    const std::uint64_t cap = effective_cap(opts);
    const LoadedGame g = load_game_file(path);
    for (const auto& w : g.warnings) err << path << ":" << w.to_string() << "\n";
    return body(g, cap);
  } catch (const gamefile::ParseFailure& e) {
    for (const auto& d : e.diagnostics()) err << path << ":" << d.to_string() << "\n";
    return kExitInput;
  } catch (const ProfileError& e) {
    err << "error [" << profile_error_name(e.kind()) << "] " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kCapExceeded || e.code() == ErrorCode::kNotEnumerable) {
      err << "error: enumeration cap exceeded: " << e.what() << "\n";
      return kExitCapExceeded;
    }
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace

int cmd_solve(const std::string& path, const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(path, opts, err, [&](const LoadedGame& g, std::uint64_t cap) {
    const Method method = opts.method.value_or(Method::kCompositional);
    std::vector<Method> runs;
    if (method == Method::kBoth) {
      runs = {Method::kCompositional, Method::kOracle};
    } else {
      runs = {method};
    }
    std::vector<SolveReport> reports;
    for (Method m : runs) {
      const auto t0 = Clock::now();
      auto profiles = m == Method::kOracle ? solve_oracle(g, cap) : solve_compositional(g, cap);
      reports.push_back(make_report(g, m, profiles, since(t0)));
    }
    if (opts.output == OutputFormat::kJson) {
      if (reports.size() == 1) {
        out << render_json(g, reports[0]);
      } else {
        Json all = Json::array();
        for (const auto& r : reports) all.push_back(Json::parse(render_json(g, r)));
        out << all.dump(2) << "\n";
      }
    } else {
      for (std::size_t i = 0; i < reports.size(); ++i) out << (i ? "\n" : "") << render_text(g, reports[i]);
    }
    return kExitOk;
  });
}

int cmd_check(const std::string& path, const Options& opts, std::ostream& out, std::ostream& err,
              const Solver& compositional, const Solver& oracle) {
  if (opts.method && *opts.method != Method::kBoth) {
    err << "error: check compares both methods; --method must be 'both'\n";
    return kExitInput;
  }
  return guarded(path, opts, err, [&](const LoadedGame& g, std::uint64_t cap) {
    const auto t0 = Clock::now();
    const auto a = canonical(compositional(g, cap));
    const auto b = canonical(oracle(g, cap));
    const double ms = since(t0);
    std::vector<MoveProfile> only_a, only_b, both;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    const bool match = only_a.empty() && only_b.empty();
    SolveReport r = make_report(g, Method::kBoth, both, ms);
    if (opts.output == OutputFormat::kJson) {
      Json j = Json::parse(render_json(g, r));
      j["match"] = match;
      auto listing = [&](const std::vector<MoveProfile>& v) {
        Json arr = Json::array();
        for (const auto& p : v) arr.push_back(profile_json(g, p));
        return arr;
      };
      j["only_compositional"] = listing(only_a);
      j["only_oracle"] = listing(only_b);
      out << j.dump(2) << "\n";
    } else {
      out << "compositional: " << a.size() << " equilibria\n";
      out << "oracle: " << b.size() << " equilibria\n";
      for (const auto& p : only_a) out << "- only compositional: " << format_profile(g, p) << "\n";
      for (const auto& p : only_b) out << "+ only oracle: " << format_profile(g, p) << "\n";
      out << (match ? "result: match" : "result: MISMATCH") << "\n";
    }
    if (!match) err << path << ": equilibrium sets differ\n";
    return match ? kExitOk : kExitMismatch;
  });
}

int cmd_info(const std::string& path, const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(path, opts, err, [&](const LoadedGame& g, std::uint64_t) {
    const auto strategies = strategy_counts(g);
    const auto profiles = profile_count(g);
    const auto paths = path_count(g);
    const std::string kind = g.normal ? "normal-form"
                             : g.perfect_information ? "extensive (perfect information)"
                                                     : "extensive (imperfect information)";
    if (opts.output == OutputFormat::kJson) {
      Json j = Json::object();
      j["kind"] = kind;
      j["players"] = g.players;
      Json s = Json::object();
      for (std::size_t p = 0; p < g.players.size(); ++p) s[g.players[p]] = strategies[p];
      j["strategies"] = s;
      j["profiles"] = profiles;
      j["paths"] = paths ? Json(*paths) : Json(nullptr);
      Json sets = Json::array();
      if (g.extensive) {
        const auto used = infosets_in_tree(*g.extensive);
        const auto& doc = g.doc.extensive();
        for (std::size_t i = 0; i < g.extensive->infosets.size(); ++i) {
          const InfoSet& is = g.extensive->infosets[i];
          sets.push_back(Json{{"name", is.name},
                              {"owner", g.players[is.owner]},
                              {"moves", doc.infosets[i].moves},
                              {"used", std::find(used.begin(), used.end(), i) != used.end()}});
        }
      } else {
        for (std::size_t p = 0; p < g.players.size(); ++p) {
          sets.push_back(Json{{"name", "action"}, {"owner", g.players[p]}, {"moves", g.slots[p][0]}, {"used", true}});
        }
      }
      j["infosets"] = sets;
      out << j.dump(2) << "\n";
    } else {
      out << "kind: " << kind << "\n";
      out << "players: " << join(g.players, " ") << "\n";
      out << "strategies:";
      for (std::size_t p = 0; p < g.players.size(); ++p) out << " " << g.players[p] << "=" << strategies[p];
      out << "\nprofiles: " << profiles << "\n";
      if (paths) out << "paths: " << *paths << "\n";
      if (g.extensive) {
        const auto& doc = g.doc.extensive();
        out << "infosets:\n";
        for (std::size_t i = 0; i < g.extensive->infosets.size(); ++i) {
          const InfoSet& is = g.extensive->infosets[i];
          out << "  " << is.name << " owner=" << g.players[is.owner]
              << " moves=" << join(doc.infosets[i].moves, ",") << "\n";
        }
      } else {
        out << "actions:\n";
        for (std::size_t p = 0; p < g.players.size(); ++p) {
          out << "  " << g.players[p] << " " << join(g.slots[p][0], ",") << "\n";
        }
      }
    }
    return kExitOk;
  });
}

int cmd_play(const std::string& path, const std::string& profile, const Options& opts,
             std::ostream& out, std::ostream& err) {
  return guarded(path, opts, err, [&](const LoadedGame& g, std::uint64_t) {
    const MoveProfile prof = parse_profile(g, profile);
    const auto moves = path_of(g, prof);
    const auto payoff = payoff_of(g, prof);
    if (opts.output == OutputFormat::kJson) {
      Json p = Json::object();
      for (std::size_t i = 0; i < g.players.size(); ++i) p[g.players[i]] = payoff[i].to_string();
      out << Json{{"profile", profile_json(g, prof)}, {"path", moves}, {"payoff", p}}.dump(2) << "\n";
    } else {
      out << "path: " << join(moves, ",") << "\n";
      out << "payoff: " << payoff_tuple(payoff) << "\n";
    }
    return kExitOk;
  });
}

int cmd_gen(const std::string& kind, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  std::mt19937_64 rng(seed);
  GenOptions opts;
  if (kind == "perfect") {
    out << gamefile::print(random_extensive_doc(rng, opts));
  } else if (kind == "imperfect") {
    opts.merge_infosets = true;
    out << gamefile::print(random_extensive_doc(rng, opts));
  } else if (kind == "normal") {
    out << gamefile::print(random_normal_form_doc(rng, opts));
  } else {
    err << "error: unknown kind '" << kind << "' (expected perfect, imperfect or normal)\n";
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace ogk::cli
