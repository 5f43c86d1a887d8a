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
#ifndef OGK_CLI_COMMANDS_H_
#define OGK_CLI_COMMANDS_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ogk/exform.h"
#include "ogk/gamefile.h"
#include "ogk/rational.h"

namespace ogk::cli {

enum class Method { kCompositional, kOracle, kBoth };
enum class OutputFormat { kText, kJson };

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,        // unreadable file, parse/validation failure, bad arguments or labels
  kExitCapExceeded = 2,
  kExitMismatch = 3,
};

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view s);

// A game file after parsing, with the move labels needed for reporting.
struct LoadedGame {
  gamefile::GameDoc doc;
  std::vector<std::string> players;
  std::optional<ImperfectGame> extensive;
  bool perfect_information = false;
  std::optional<NormalFormGame> normal;
  // slots[p][j]: labels of player p's j-th decision. Extensive games order a
  // player's decisions by first depth-first occurrence of the information set.
  std::vector<std::vector<std::vector<std::string>>> slots;
  std::vector<std::vector<std::string>> slot_names;
  std::vector<gamefile::Diagnostic> warnings;
};

LoadedGame load_game_text(std::string_view text);  // throws gamefile::ParseFailure
LoadedGame load_game_file(const std::string& path);  // also throws std::runtime_error on I/O

// Per player, one move index per decision slot.
using MoveProfile = std::vector<std::vector<std::size_t>>;

using Solver = std::function<std::vector<MoveProfile>(const LoadedGame&, std::uint64_t cap)>;

// Sorted, duplicate-free.
std::vector<MoveProfile> solve_compositional(const LoadedGame& g, std::uint64_t cap);
std::vector<MoveProfile> solve_oracle(const LoadedGame& g, std::uint64_t cap);

std::vector<Rational> payoff_of(const LoadedGame& g, const MoveProfile& profile);
std::vector<std::string> path_of(const LoadedGame& g, const MoveProfile& profile);

// "p1=L;p2=L,R" style: every player once, labels in slot order.
std::string format_profile(const LoadedGame& g, const MoveProfile& profile);

class ProfileError : public std::runtime_error {
 public:
  enum class Kind { kSyntax, kUnknownPlayer, kUnknownLabel, kIncompleteProfile };
  ProfileError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};
std::string_view profile_error_name(ProfileError::Kind k);

MoveProfile parse_profile(const LoadedGame& g, std::string_view text);

struct Equilibrium {
  MoveProfile profile;
  std::vector<Rational> payoff;
};

struct Counts {
  std::uint64_t profiles = 0;
  std::optional<std::uint64_t> paths;  // none for normal-form games
  double elapsed_ms = 0;
};

struct SolveReport {
  Method method = Method::kCompositional;
  std::vector<std::string> players;
  std::vector<Equilibrium> equilibria;
  Counts counts;
};

SolveReport make_report(const LoadedGame& g, Method method, const std::vector<MoveProfile>& profiles,
                        double elapsed_ms);
std::string render_text(const LoadedGame& g, const SolveReport& r);
std::string render_json(const LoadedGame& g, const SolveReport& r);

std::uint64_t profile_count(const LoadedGame& g);
std::optional<std::uint64_t> path_count(const LoadedGame& g);
std::vector<std::uint64_t> strategy_counts(const LoadedGame& g);

struct Options {
  std::optional<Method> method;  // command default when unset
  OutputFormat output = OutputFormat::kText;
  std::optional<std::uint64_t> cap;
};

// --cap, else OGK_CAP, else the library default. Throws std::invalid_argument
// on a malformed OGK_CAP.
std::uint64_t effective_cap(const Options& opts);

int cmd_solve(const std::string& path, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_check(const std::string& path, const Options& opts, std::ostream& out, std::ostream& err,
              const Solver& compositional = solve_compositional,
              const Solver& oracle = solve_oracle);
int cmd_info(const std::string& path, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_play(const std::string& path, const std::string& profile, const Options& opts,
             std::ostream& out, std::ostream& err);
// kind: "perfect", "imperfect" or "normal".
int cmd_gen(const std::string& kind, std::uint64_t seed, std::ostream& out, std::ostream& err);

}  // namespace ogk::cli

#endif  // OGK_CLI_COMMANDS_H_
