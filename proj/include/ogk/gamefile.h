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
#ifndef OGK_GAMEFILE_H_
#define OGK_GAMEFILE_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ogk/exform.h"
#include "ogk/rational.h"

// Textual game documents: parenthesized s-expressions describing either an
// extensive-form tree (with optional information sets) or a normal-form
// payoff table.
//
//   (game (players p1 p2)
//     (infosets (h :owner p2 :moves (L R)))
//     (node :owner p1 :moves (L R)
//       (node :infoset h (leaf 1 4) (leaf 0 0))
//       (node :infoset h (leaf 5 2) (leaf 0 2))))
//
//   (normal-form (players a b)
//     (actions (a C D) (b C D))
//     (payoffs ((C C) -1 -1) ((C D) -3 0) ((D C) 0 -3) ((D D) -2 -2)))
//
// ";" starts a line comment. A tree may optionally be wrapped in (tree ...).
namespace ogk::gamefile {

struct Span {
  std::size_t offset = 0;
  std::size_t length = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

enum class Stage { kLex, kParse, kValidation };
enum class Severity { kError, kWarning };

enum class DiagnosticCode {
  kUnexpectedCharacter,
  kBadNumber,
  kUnbalanced,
  kUnexpectedToken,
  kMissingElement,
  kDuplicatePlayer,
  kDuplicateInfoset,
  kDuplicateMove,
  kUnknownPlayer,
  kUnknownInfoset,
  kUnknownAction,
  kArityMismatch,
  kRewardCount,
  kMissingActions,
  kDuplicateActions,
  kMissingPayoff,
  kDuplicatePayoff,
  kUnusedInfoset,
  kIdlePlayer,
};

std::string_view diagnostic_code_name(DiagnosticCode code);

struct Diagnostic {
  Stage stage = Stage::kValidation;
  Severity severity = Severity::kError;
  DiagnosticCode code = DiagnosticCode::kUnexpectedToken;
  Span span;
  std::string message;

  // "line:col: validation error [Code] message"
  std::string to_string() const;
};

// Information set declaration. Nodes written with ":owner" get an inline
// singleton set named "@<index>".
struct InfosetDecl {
  std::string name;
  std::string owner;
  std::vector<std::string> moves;
  bool inline_node = false;
  Span span;
};

struct TreeDoc {
  bool leaf = true;
  std::vector<Rational> rewards;  // leaf
  std::string infoset;            // node
  std::vector<TreeDoc> children;  // node
  Span span;
};

struct ExtensiveDoc {
  std::vector<std::string> players;
  std::vector<Span> player_spans;
  std::vector<InfosetDecl> infosets;  // declared first, then inline in depth-first order
  TreeDoc root;
  Span span;
};

struct ActionDecl {
  std::string player;
  std::vector<std::string> labels;
  Span span;
};

struct PayoffRow {
  std::vector<std::string> profile;
  std::vector<Rational> payoffs;
  Span span;
};

struct NormalFormDoc {
  std::vector<std::string> players;
  std::vector<Span> player_spans;
  std::vector<ActionDecl> actions;
  std::vector<PayoffRow> payoffs;
  Span span;
};

struct GameDoc {
  std::variant<ExtensiveDoc, NormalFormDoc> body;

  bool is_extensive() const { return std::holds_alternative<ExtensiveDoc>(body); }
  const ExtensiveDoc& extensive() const { return std::get<ExtensiveDoc>(body); }
  const NormalFormDoc& normal_form() const { return std::get<NormalFormDoc>(body); }
};

// Structural equality; spans are ignored.
bool operator==(const TreeDoc& a, const TreeDoc& b);
bool operator==(const InfosetDecl& a, const InfosetDecl& b);
bool operator==(const ActionDecl& a, const ActionDecl& b);
bool operator==(const PayoffRow& a, const PayoffRow& b);
bool operator==(const ExtensiveDoc& a, const ExtensiveDoc& b);
bool operator==(const NormalFormDoc& a, const NormalFormDoc& b);
bool operator==(const GameDoc& a, const GameDoc& b);

// Thrown by parse; carries every error found (the first one is the cause).
class ParseFailure : public std::runtime_error {
 public:
  explicit ParseFailure(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

// Parses and validates. Warnings are not fatal; call validate() to see them.
GameDoc parse(std::string_view text);

// Canonical text; parse(print(d)) == d for every valid d.
std::string print(const GameDoc& doc);

// Empty iff fully well-formed. Errors and warnings, in document order.
std::vector<Diagnostic> validate(const GameDoc& doc);

bool has_errors(const std::vector<Diagnostic>& diagnostics);

// A validated extensive document as a game, with move labels per information
// set (indexed like the game's information set table).
struct LabeledGame {
  ImperfectGame game;
  std::vector<std::vector<std::string>> move_labels;
};
LabeledGame to_game(const ExtensiveDoc& doc);

struct LabeledNormalForm {
  NormalFormGame game;
  std::vector<std::vector<std::string>> action_labels;
};
LabeledNormalForm to_game(const NormalFormDoc& doc);

}  // namespace ogk::gamefile

#endif  // OGK_GAMEFILE_H_
