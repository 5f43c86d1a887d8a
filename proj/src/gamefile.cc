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
#include "ogk/gamefile.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "ogk/error.h"

namespace ogk::gamefile {

std::string_view diagnostic_code_name(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::kUnexpectedCharacter: return "UnexpectedCharacter";
    case DiagnosticCode::kBadNumber: return "BadNumber";
    case DiagnosticCode::kUnbalanced: return "Unbalanced";
    case DiagnosticCode::kUnexpectedToken: return "UnexpectedToken";
    case DiagnosticCode::kMissingElement: return "MissingElement";
    case DiagnosticCode::kDuplicatePlayer: return "DuplicatePlayer";
    case DiagnosticCode::kDuplicateInfoset: return "DuplicateInfoset";
    case DiagnosticCode::kDuplicateMove: return "DuplicateMove";
    case DiagnosticCode::kUnknownPlayer: return "UnknownPlayer";
    case DiagnosticCode::kUnknownInfoset: return "UnknownInfoset";
    case DiagnosticCode::kUnknownAction: return "UnknownAction";
    case DiagnosticCode::kArityMismatch: return "ArityMismatch";
    case DiagnosticCode::kRewardCount: return "RewardCount";
    case DiagnosticCode::kMissingActions: return "MissingActions";
    case DiagnosticCode::kDuplicateActions: return "DuplicateActions";
    case DiagnosticCode::kMissingPayoff: return "MissingPayoff";
    case DiagnosticCode::kDuplicatePayoff: return "DuplicatePayoff";
    case DiagnosticCode::kUnusedInfoset: return "UnusedInfoset";
    case DiagnosticCode::kIdlePlayer: return "IdlePlayer";
  }
  return "Unknown";
}

std::string Diagnostic::to_string() const {
  std::ostringstream out;
  out << span.line << ":" << span.column << ": ";
  if (severity == Severity::kWarning) {
    out << "warning";
  } else {
    switch (stage) {
      case Stage::kLex: out << "lex error"; break;
      case Stage::kParse: out << "parse error"; break;
      case Stage::kValidation: out << "validation error"; break;
    }
  }
  out << " [" << diagnostic_code_name(code) << "] " << message;
  return out.str();
}

ParseFailure::ParseFailure(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(diagnostics.empty() ? "parse failure" : diagnostics.front().to_string()),
      diagnostics_(std::move(diagnostics)) {}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::kError; });
}

// --- equality -------------------------------------------------------------

bool operator==(const TreeDoc& a, const TreeDoc& b) {
  return a.leaf == b.leaf && a.rewards == b.rewards && a.infoset == b.infoset &&
         a.children == b.children;
}
bool operator==(const InfosetDecl& a, const InfosetDecl& b) {
  return a.name == b.name && a.owner == b.owner && a.moves == b.moves &&
         a.inline_node == b.inline_node;
}
bool operator==(const ActionDecl& a, const ActionDecl& b) {
  return a.player == b.player && a.labels == b.labels;
}
bool operator==(const PayoffRow& a, const PayoffRow& b) {
  return a.profile == b.profile && a.payoffs == b.payoffs;
}
bool operator==(const ExtensiveDoc& a, const ExtensiveDoc& b) {
  return a.players == b.players && a.infosets == b.infosets && a.root == b.root;
}
bool operator==(const NormalFormDoc& a, const NormalFormDoc& b) {
  return a.players == b.players && a.actions == b.actions && a.payoffs == b.payoffs;
}
bool operator==(const GameDoc& a, const GameDoc& b) { return a.body == b.body; }

namespace {

// --- lexer ----------------------------------------------------------------

enum class TokKind { kOpen, kClose, kIdent, kKeyword, kNumber };

struct Token {
  TokKind kind;
  std::string text;
  Span span;
};

struct Abort {
  Diagnostic diagnostic;
};

[[noreturn]] void fail(Stage stage, DiagnosticCode code, Span span, std::string message) {
  throw Abort{Diagnostic{stage, Severity::kError, code, span, std::move(message)}};
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == ';') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Span span{i, 1, line, col};
    if (c == '(' || c == ')') {
      out.push_back({c == '(' ? TokKind::kOpen : TokKind::kClose, std::string(1, c), span});
      advance(1);
      continue;
    }
    std::size_t j = i;
    TokKind kind;
    if (c == ':') {
      ++j;
      if (j >= text.size() || !ident_start(text[j])) {
        fail(Stage::kLex, DiagnosticCode::kUnexpectedCharacter, span, "expected keyword after ':'");
      }
      while (j < text.size() && ident_char(text[j])) ++j;
      kind = TokKind::kKeyword;
    } else if (ident_start(c)) {
      while (j < text.size() && ident_char(text[j])) ++j;
      kind = TokKind::kIdent;
    } else if (digit(c) || c == '-') {
      // Grab the whole atom, then check it against the number syntax.
      while (j < text.size() && (ident_char(text[j]) || text[j] == '/' || text[j] == '.')) ++j;
      kind = TokKind::kNumber;
      span.length = j - i;
      const std::string_view atom = text.substr(i, j - i);
      if (!Rational::parse(atom)) {
        fail(Stage::kLex, DiagnosticCode::kBadNumber, span,
             "malformed number '" + std::string(atom) + "'");
      }
    } else {
      std::string shown = std::isprint(static_cast<unsigned char>(c))
                              ? std::string(1, c)
                              : "\\x" + std::to_string(static_cast<unsigned char>(c));
      fail(Stage::kLex, DiagnosticCode::kUnexpectedCharacter, span,
           "unexpected character '" + shown + "'");
    }
    span.length = j - i;
    out.push_back({kind, std::string(text.substr(i, j - i)), span});
    advance(j - i);
  }
  return out;
}

// --- s-expressions --------------------------------------------------------

struct SExpr {
  bool list = false;
  Token atom{TokKind::kIdent, "", {}};
  std::vector<SExpr> items;
  Span span;

  bool is_atom(TokKind k) const { return !list && atom.kind == k; }
  bool is_ident(std::string_view s) const { return is_atom(TokKind::kIdent) && atom.text == s; }
  bool is_keyword(std::string_view s) const { return is_atom(TokKind::kKeyword) && atom.text == s; }
  bool headed(std::string_view s) const { return list && !items.empty() && items[0].is_ident(s); }
};

Span join(const Span& a, const Span& b) {
  Span s = a;
  s.length = b.offset + b.length - a.offset;
  return s;
}

SExpr read_document(const std::vector<Token>& toks, std::size_t text_size) {
  std::vector<SExpr> stack;
  std::vector<SExpr> top;
  for (const Token& t : toks) {
    if (t.kind == TokKind::kOpen) {
      SExpr e;
      e.list = true;
      e.span = t.span;
      stack.push_back(std::move(e));
    } else if (t.kind == TokKind::kClose) {
      if (stack.empty()) fail(Stage::kParse, DiagnosticCode::kUnbalanced, t.span, "unmatched ')'");
      SExpr done = std::move(stack.back());
      stack.pop_back();
      done.span = join(done.span, t.span);
      (stack.empty() ? top : stack.back().items).push_back(std::move(done));
    } else {
      SExpr e;
      e.atom = t;
      e.span = t.span;
      (stack.empty() ? top : stack.back().items).push_back(std::move(e));
    }
  }
  if (!stack.empty()) {
    fail(Stage::kParse, DiagnosticCode::kUnbalanced, stack.back().span, "unclosed '('");
  }
  if (top.empty()) {
    fail(Stage::kParse, DiagnosticCode::kMissingElement, Span{0, 0, 1, 1}, "empty document");
  }
  if (top.size() > 1) {
    fail(Stage::kParse, DiagnosticCode::kUnexpectedToken, top[1].span,
         "unexpected content after the document");
  }
  (void)text_size;
  return std::move(top.front());
}

// --- interpretation -------------------------------------------------------

const char* describe(const SExpr& e) {
  if (e.list) return "list";
  switch (e.atom.kind) {
    case TokKind::kIdent: return "identifier";
    case TokKind::kKeyword: return "keyword";
    case TokKind::kNumber: return "number";
    default: return "token";
  }
}

[[noreturn]] void unexpected(const SExpr& e, const std::string& wanted) {
  std::string got = e.list ? std::string("list") : describe(e) + std::string(" '") + e.atom.text + "'";
  fail(Stage::kParse, DiagnosticCode::kUnexpectedToken, e.span, "expected " + wanted + ", found " + got);
}

const SExpr& need(const SExpr& list, std::size_t k, const std::string& wanted) {
  if (k >= list.items.size()) {
    fail(Stage::kParse, DiagnosticCode::kMissingElement, list.span, "missing " + wanted);
  }
  return list.items[k];
}

std::string ident(const SExpr& e, const std::string& wanted) {
  if (!e.is_atom(TokKind::kIdent)) unexpected(e, wanted);
  return e.atom.text;
}

Rational number(const SExpr& e) {
  if (!e.is_atom(TokKind::kNumber)) unexpected(e, "number");
  return *Rational::parse(e.atom.text);
}

// "(head IDENT+)" with head already checked; returns identifiers and spans.
void ident_list(const SExpr& list, std::size_t from, const std::string& wanted,
                std::vector<std::string>& names, std::vector<Span>* spans) {
  if (list.items.size() <= from) {
    fail(Stage::kParse, DiagnosticCode::kMissingElement, list.span, "expected at least one " + wanted);
  }
  for (std::size_t k = from; k < list.items.size(); ++k) {
    names.push_back(ident(list.items[k], wanted));
    if (spans) spans->push_back(list.items[k].span);
  }
}

std::vector<std::string> move_list(const SExpr& e) {
  if (!e.list) unexpected(e, "move list");
  std::vector<std::string> moves;
  ident_list(e, 0, "move label", moves, nullptr);
  return moves;
}

void parse_players(const SExpr& e, std::vector<std::string>& players, std::vector<Span>& spans) {
  if (!e.headed("players")) unexpected(e, "(players ...)");
  ident_list(e, 1, "player", players, &spans);
}

struct ExtParser {
  ExtensiveDoc doc;

  void infoset(const SExpr& e) {
    if (!e.list) unexpected(e, "infoset declaration");
    InfosetDecl d;
    d.name = ident(need(e, 0, "infoset name"), "infoset name");
    if (!need(e, 1, ":owner").is_keyword(":owner")) unexpected(e.items[1], ":owner");
    d.owner = ident(need(e, 2, "owner"), "owner");
    if (!need(e, 3, ":moves").is_keyword(":moves")) unexpected(e.items[3], ":moves");
    d.moves = move_list(need(e, 4, "move list"));
    if (e.items.size() > 5) unexpected(e.items[5], "')'");
    d.span = e.span;
    doc.infosets.push_back(std::move(d));
  }

  TreeDoc tree(const SExpr& e) {
    if (e.headed("tree")) {
      if (e.items.size() != 2) {
        if (e.items.size() < 2) fail(Stage::kParse, DiagnosticCode::kMissingElement, e.span, "missing tree");
        unexpected(e.items[2], "')'");
      }
      return tree(e.items[1]);
    }
    TreeDoc t;
    t.span = e.span;
    if (e.headed("leaf")) {
      if (e.items.size() < 2) {
        fail(Stage::kParse, DiagnosticCode::kMissingElement, e.span, "leaf needs at least one reward");
      }
      for (std::size_t k = 1; k < e.items.size(); ++k) t.rewards.push_back(number(e.items[k]));
      return t;
    }
    if (!e.headed("node")) unexpected(e, "(leaf ...) or (node ...)");
    t.leaf = false;
    const SExpr& how = need(e, 1, ":owner or :infoset");
    std::size_t first_child;
    if (how.is_keyword(":owner")) {
      InfosetDecl d;
      d.owner = ident(need(e, 2, "owner"), "owner");
      if (!need(e, 3, ":moves").is_keyword(":moves")) unexpected(e.items[3], ":moves");
      d.moves = move_list(need(e, 4, "move list"));
      d.inline_node = true;
      d.name = "@" + std::to_string(doc.infosets.size());
      d.span = e.span;
      t.infoset = d.name;
      doc.infosets.push_back(std::move(d));
      first_child = 5;
    } else if (how.is_keyword(":infoset")) {
      t.infoset = ident(need(e, 2, "infoset name"), "infoset name");
      first_child = 3;
    } else {
      unexpected(how, ":owner or :infoset");
    }
    if (e.items.size() <= first_child) {
      fail(Stage::kParse, DiagnosticCode::kMissingElement, e.span, "node needs at least one child");
    }
    for (std::size_t k = first_child; k < e.items.size(); ++k) t.children.push_back(tree(e.items[k]));
    return t;
  }

  void document(const SExpr& e) {
    doc.span = e.span;
    parse_players(need(e, 1, "(players ...)"), doc.players, doc.player_spans);
    std::size_t k = 2;
    if (k < e.items.size() && e.items[k].headed("infosets")) {
      for (std::size_t j = 1; j < e.items[k].items.size(); ++j) infoset(e.items[k].items[j]);
      ++k;
    }
    doc.root = tree(need(e, k, "tree"));
    if (e.items.size() > k + 1) unexpected(e.items[k + 1], "')'");
  }
};

NormalFormDoc parse_normal_form(const SExpr& e) {
  NormalFormDoc doc;
  doc.span = e.span;
  parse_players(need(e, 1, "(players ...)"), doc.players, doc.player_spans);
  const SExpr& actions = need(e, 2, "(actions ...)");
  if (!actions.headed("actions")) unexpected(actions, "(actions ...)");
  if (actions.items.size() < 2) {
    fail(Stage::kParse, DiagnosticCode::kMissingElement, actions.span, "expected an action declaration");
  }
  for (std::size_t k = 1; k < actions.items.size(); ++k) {
    const SExpr& a = actions.items[k];
    if (!a.list) unexpected(a, "action declaration");
    ActionDecl d;
    d.player = ident(need(a, 0, "player"), "player");
    ident_list(a, 1, "action label", d.labels, nullptr);
    d.span = a.span;
    doc.actions.push_back(std::move(d));
  }
  const SExpr& payoffs = need(e, 3, "(payoffs ...)");
  if (!payoffs.headed("payoffs")) unexpected(payoffs, "(payoffs ...)");
  if (payoffs.items.size() < 2) {
    fail(Stage::kParse, DiagnosticCode::kMissingElement, payoffs.span, "expected a payoff row");
  }
  for (std::size_t k = 1; k < payoffs.items.size(); ++k) {
    const SExpr& r = payoffs.items[k];
    if (!r.list) unexpected(r, "payoff row");
    PayoffRow row;
    const SExpr& prof = need(r, 0, "action profile");
    if (!prof.list) unexpected(prof, "action profile");
    ident_list(prof, 0, "action label", row.profile, nullptr);
    if (r.items.size() < 2) fail(Stage::kParse, DiagnosticCode::kMissingElement, r.span, "missing payoffs");
    for (std::size_t j = 1; j < r.items.size(); ++j) row.payoffs.push_back(number(r.items[j]));
    row.span = r.span;
    doc.payoffs.push_back(std::move(row));
  }
  if (e.items.size() > 4) unexpected(e.items[4], "')'");
  return doc;
}

// --- validation -----------------------------------------------------------

struct Collector {
  std::vector<Diagnostic> out;
  void error(DiagnosticCode code, const Span& span, std::string message) {
    out.push_back({Stage::kValidation, Severity::kError, code, span, std::move(message)});
  }
  void warning(DiagnosticCode code, const Span& span, std::string message) {
    out.push_back({Stage::kValidation, Severity::kWarning, code, span, std::move(message)});
  }
};

void check_players(const std::vector<std::string>& players, const std::vector<Span>& spans,
                   Collector& c) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < players.size(); ++i) {
    if (!seen.insert(players[i]).second) {
      c.error(DiagnosticCode::kDuplicatePlayer, i < spans.size() ? spans[i] : Span{},
              "player '" + players[i] + "' declared twice");
    }
  }
}

void check_labels(const std::vector<std::string>& labels, const Span& span, const std::string& what,
                  Collector& c) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      c.error(DiagnosticCode::kDuplicateMove, span, "label '" + l + "' repeated in " + what);
    }
  }
}

std::string infoset_label(const InfosetDecl& d) {
  return d.inline_node ? "node owned by '" + d.owner + "'" : "infoset '" + d.name + "'";
}

void validate_extensive(const ExtensiveDoc& doc, Collector& c) {
  check_players(doc.players, doc.player_spans, c);
  const std::set<std::string> players(doc.players.begin(), doc.players.end());
  std::map<std::string, const InfosetDecl*> by_name;
  for (const auto& d : doc.infosets) {
    if (!by_name.emplace(d.name, &d).second) {
      c.error(DiagnosticCode::kDuplicateInfoset, d.span, "infoset '" + d.name + "' declared twice");
    }
    if (!players.count(d.owner)) {
      c.error(DiagnosticCode::kUnknownPlayer, d.span,
              "owner '" + d.owner + "' of " + infoset_label(d) + " is not a declared player");
    }
    check_labels(d.moves, d.span, infoset_label(d), c);
  }
  std::set<std::string> used;
  auto walk = [&](auto&& self, const TreeDoc& t) -> void {
    if (t.leaf) {
      if (t.rewards.size() != doc.players.size()) {
        c.error(DiagnosticCode::kRewardCount, t.span,
                "reward vector length " + std::to_string(t.rewards.size()) + " does not match " +
                    std::to_string(doc.players.size()) + " player(s)");
      }
      return;
    }
    used.insert(t.infoset);
    auto it = by_name.find(t.infoset);
    if (it == by_name.end()) {
      c.error(DiagnosticCode::kUnknownInfoset, t.span, "unknown infoset '" + t.infoset + "'");
    } else if (it->second->moves.size() != t.children.size()) {
      c.error(DiagnosticCode::kArityMismatch, t.span,
              infoset_label(*it->second) + " declares " + std::to_string(it->second->moves.size()) +
                  " move(s) but the node has " + std::to_string(t.children.size()) + " children");
    }
    for (const auto& ch : t.children) self(self, ch);
  };
  walk(walk, doc.root);
  std::set<std::string> active;
  for (const auto& d : doc.infosets) {
    if (!used.count(d.name)) {
      c.warning(DiagnosticCode::kUnusedInfoset, d.span, "infoset '" + d.name + "' is never used");
    } else {
      active.insert(d.owner);
    }
  }
  for (std::size_t i = 0; i < doc.players.size(); ++i) {
    if (!active.count(doc.players[i])) {
      c.warning(DiagnosticCode::kIdlePlayer, i < doc.player_spans.size() ? doc.player_spans[i] : Span{},
                "player '" + doc.players[i] + "' never moves");
    }
  }
}

void validate_normal_form(const NormalFormDoc& doc, Collector& c) {
  check_players(doc.players, doc.player_spans, c);
  std::map<std::string, const ActionDecl*> decl;
  for (const auto& a : doc.actions) {
    if (std::find(doc.players.begin(), doc.players.end(), a.player) == doc.players.end()) {
      c.error(DiagnosticCode::kUnknownPlayer, a.span, "actions for undeclared player '" + a.player + "'");
      continue;
    }
    if (!decl.emplace(a.player, &a).second) {
      c.error(DiagnosticCode::kDuplicateActions, a.span, "actions for '" + a.player + "' declared twice");
    }
    check_labels(a.labels, a.span, "actions of '" + a.player + "'", c);
  }
  bool complete = true;
  for (std::size_t i = 0; i < doc.players.size(); ++i) {
    if (!decl.count(doc.players[i])) {
      complete = false;
      c.error(DiagnosticCode::kMissingActions, i < doc.player_spans.size() ? doc.player_spans[i] : Span{},
              "no actions declared for '" + doc.players[i] + "'");
    }
  }
  std::set<std::vector<std::string>> rows;
  for (const auto& r : doc.payoffs) {
    bool ok = true;
    if (r.profile.size() != doc.players.size()) {
      ok = false;
      c.error(DiagnosticCode::kArityMismatch, r.span,
              "profile names " + std::to_string(r.profile.size()) + " action(s) for " +
                  std::to_string(doc.players.size()) + " player(s)");
    } else {
      for (std::size_t i = 0; i < r.profile.size(); ++i) {
        auto it = decl.find(doc.players[i]);
        if (it == decl.end()) {
          ok = false;
          continue;
        }
        const auto& labels = it->second->labels;
        if (std::find(labels.begin(), labels.end(), r.profile[i]) == labels.end()) {
          ok = false;
          c.error(DiagnosticCode::kUnknownAction, r.span,
                  "'" + r.profile[i] + "' is not an action of '" + doc.players[i] + "'");
        }
      }
    }
    if (r.payoffs.size() != doc.players.size()) {
      c.error(DiagnosticCode::kRewardCount, r.span,
              "reward vector length " + std::to_string(r.payoffs.size()) + " does not match " +
                  std::to_string(doc.players.size()) + " player(s)");
    }
    if (ok && !rows.insert(r.profile).second) {
      c.error(DiagnosticCode::kDuplicatePayoff, r.span, "payoff row repeated");
    }
  }
  if (!complete) return;
  // Find the first missing profile in lexicographic order; at most |rows|+1 steps.
  std::vector<std::size_t> digits(doc.players.size(), 0);
  while (true) {
    std::vector<std::string> prof;
    for (std::size_t i = 0; i < digits.size(); ++i) prof.push_back(decl[doc.players[i]]->labels[digits[i]]);
    if (!rows.count(prof)) {
      std::string shown;
      for (const auto& s : prof) shown += (shown.empty() ? "" : " ") + s;
      c.error(DiagnosticCode::kMissingPayoff, doc.span, "no payoff row for profile (" + shown + ")");
      return;
    }
    std::size_t k = digits.size();
    while (k > 0) {
      --k;
      if (++digits[k] < decl[doc.players[k]]->labels.size()) break;
      digits[k] = 0;
      if (k == 0) return;
    }
    if (digits.empty()) return;
  }
}

// --- printing -------------------------------------------------------------

void print_rewards(std::ostream& out, const std::vector<Rational>& rs) {
  for (const auto& r : rs) out << " " << r.to_string();
}

void print_moves(std::ostream& out, const std::vector<std::string>& moves) {
  out << "(";
  for (std::size_t k = 0; k < moves.size(); ++k) out << (k ? " " : "") << moves[k];
  out << ")";
}

void print_tree(std::ostream& out, const ExtensiveDoc& doc, const TreeDoc& t, int depth) {
  out << std::string(2 * depth, ' ');
  if (t.leaf) {
    out << "(leaf";
    print_rewards(out, t.rewards);
    out << ")";
    return;
  }
  const InfosetDecl* decl = nullptr;
  for (const auto& d : doc.infosets) {
    if (d.name == t.infoset) decl = &d;
  }
  if (decl && decl->inline_node) {
    out << "(node :owner " << decl->owner << " :moves ";
    print_moves(out, decl->moves);
  } else {
    out << "(node :infoset " << t.infoset;
  }
  for (const auto& ch : t.children) {
    out << "\n";
    print_tree(out, doc, ch, depth + 1);
  }
  out << ")";
}

void print_players(std::ostream& out, const std::vector<std::string>& players) {
  out << "  (players";
  for (const auto& p : players) out << " " << p;
  out << ")";
}

}  // namespace

std::vector<Diagnostic> validate(const GameDoc& doc) {
  Collector c;
  if (doc.is_extensive()) {
    validate_extensive(doc.extensive(), c);
  } else {
    validate_normal_form(doc.normal_form(), c);
  }
  std::stable_sort(c.out.begin(), c.out.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return a.span.offset < b.span.offset;
  });
  return c.out;
}

GameDoc parse(std::string_view text) {
  GameDoc doc;
  try {
    const SExpr e = read_document(lex(text), text.size());
    if (e.headed("game")) {
      ExtParser p;
      p.document(e);
      doc.body = std::move(p.doc);
    } else if (e.headed("normal-form")) {
      doc.body = parse_normal_form(e);
    } else {
      unexpected(e.list && !e.items.empty() ? e.items[0] : e, "(game ...) or (normal-form ...)");
    }
  } catch (const Abort& a) {
    throw ParseFailure({a.diagnostic});
  }
  std::vector<Diagnostic> diags = validate(doc);
  if (has_errors(diags)) {
    diags.erase(std::remove_if(diags.begin(), diags.end(),
                               [](const Diagnostic& d) { return d.severity != Severity::kError; }),
                diags.end());
    throw ParseFailure(std::move(diags));
  }
  return doc;
}

std::string print(const GameDoc& doc) {
  std::ostringstream out;
  if (doc.is_extensive()) {
    const ExtensiveDoc& d = doc.extensive();
    out << "(game\n";
    print_players(out, d.players);
    bool any_declared = false;
    for (const auto& s : d.infosets) any_declared = any_declared || !s.inline_node;
    if (any_declared) {
      out << "\n  (infosets";
      for (const auto& s : d.infosets) {
        if (s.inline_node) continue;
        out << "\n    (" << s.name << " :owner " << s.owner << " :moves ";
        print_moves(out, s.moves);
        out << ")";
      }
      out << ")";
    }
    out << "\n";
    print_tree(out, d, d.root, 1);
    out << ")\n";
  } else {
    const NormalFormDoc& d = doc.normal_form();
    out << "(normal-form\n";
    print_players(out, d.players);
    out << "\n  (actions";
    for (const auto& a : d.actions) {
      out << "\n    (" << a.player;
      for (const auto& l : a.labels) out << " " << l;
      out << ")";
    }
    out << ")\n  (payoffs";
    for (const auto& r : d.payoffs) {
      out << "\n    (";
      print_moves(out, r.profile);
      print_rewards(out, r.payoffs);
      out << ")";
    }
    out << "))\n";
  }
  return out.str();
}

LabeledGame to_game(const ExtensiveDoc& doc) {
  GameDoc wrapped{doc};
  if (has_errors(validate(wrapped))) {
    throw Error(ErrorCode::kInvalidArgument, "document does not validate");
  }
  InfoSetTable table;
  std::vector<std::vector<std::string>> labels;
  std::map<std::string, std::size_t> index;
  for (const auto& d : doc.infosets) {
    const auto owner = static_cast<std::size_t>(
        std::find(doc.players.begin(), doc.players.end(), d.owner) - doc.players.begin());
    index[d.name] = table.size();
    table.push_back(InfoSet{d.name, owner, d.moves.size()});
    labels.push_back(d.moves);
  }
  auto build = [&](auto&& self, const TreeDoc& t) -> IETree {
    if (t.leaf) return IETree::leaf(t.rewards);
    std::vector<IETree> kids;
    for (const auto& ch : t.children) kids.push_back(self(self, ch));
    return IETree::node(index.at(t.infoset), std::move(kids));
  };
  IETree root = build(build, doc.root);
  return LabeledGame{ImperfectGame(doc.players, std::move(table), std::move(root)), std::move(labels)};
}

LabeledNormalForm to_game(const NormalFormDoc& doc) {
  GameDoc wrapped{doc};
  if (has_errors(validate(wrapped))) {
    throw Error(ErrorCode::kInvalidArgument, "document does not validate");
  }
  const std::size_t n = doc.players.size();
  std::vector<std::vector<std::string>> labels(n);
  std::vector<std::size_t> counts(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& a : doc.actions) {
      if (a.player == doc.players[i]) labels[i] = a.labels;
    }
    counts[i] = labels[i].size();
  }
  std::size_t total = 1;
  for (auto c : counts) total *= c;
  std::vector<std::vector<Rational>> table(total);
  for (const auto& r : doc.payoffs) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto pos = static_cast<std::size_t>(
          std::find(labels[i].begin(), labels[i].end(), r.profile[i]) - labels[i].begin());
      idx = idx * counts[i] + pos;
    }
    table[idx] = r.payoffs;
  }
  return LabeledNormalForm{NormalFormGame::from_table(doc.players, counts, std::move(table)),
                           std::move(labels)};
}

}  // namespace ogk::gamefile
