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
// ogk: solve, check and inspect game files.
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ogk/cli/commands.h"

int main(int argc, char** argv) {
  using namespace ogk::cli;
  CLI::App app{"Equilibria of extensive-form and normal-form games, computed compositionally and by brute force"};
  app.require_subcommand(1);

  std::string file;
  std::string method_flag;
  std::string output_flag = "text";
  std::optional<std::uint64_t> cap;
  std::string profile;
  std::string gen_kind = "perfect";
  std::uint64_t seed = 0;


  auto common = [&](CLI::App* sub, bool with_method) {
    sub->add_option("file", file, "game file")->required();
    if (with_method) {
      sub->add_option("--method", method_flag, "compositional, oracle or both")
          ->check(CLI::IsMember({"compositional", "oracle", "both"}));
    }
    sub->add_option("--output", output_flag, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--cap", cap, "enumeration cap (overrides OGK_CAP)")->check(CLI::PositiveNumber);
  };

  CLI::App* solve = app.add_subcommand("solve", "list equilibria (default method: compositional)");
  common(solve, true);
  CLI::App* check = app.add_subcommand("check", "compare both methods; exit 3 on mismatch");
  common(check, true);
  CLI::App* info = app.add_subcommand("info", "players, strategy counts and information sets");
  common(info, false);
  CLI::App* play = app.add_subcommand("play", "follow a profile such as \"p1=R,R;p2=L\"");
  common(play, false);
  play->add_option("profile", profile, "player=move[,move...];...")->required();
  CLI::App* gen = app.add_subcommand("gen", "emit a random valid game file");
  gen->group("");
  gen->add_option("--kind", gen_kind, "perfect, imperfect or normal");
  gen->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  Options opts;
  if (!method_flag.empty()) opts.method = parse_method(method_flag);
  opts.output = output_flag == "json" ? OutputFormat::kJson : OutputFormat::kText;
  opts.cap = cap;

  if (*solve) return cmd_solve(file, opts, std::cout, std::cerr);
  if (*check) return cmd_check(file, opts, std::cout, std::cerr);
  if (*info) return cmd_info(file, opts, std::cout, std::cerr);
  if (*play) return cmd_play(file, profile, opts, std::cout, std::cerr);
  if (*gen) return cmd_gen(gen_kind, seed, std::cout, std::cerr);
  return kExitInput;
}
