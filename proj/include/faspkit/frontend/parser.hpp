// Copyright 2026 The faspkit Authors
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

#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "faspkit/core/truth_value.hpp"
#include "faspkit/error.hpp"
#include "faspkit/frontend/ast.hpp"

// Concrete syntax of .fasp files:
//
//   program  := (domain | rule)*
//   domain   := "#domain" NAME "=" "{" [NAME ("," NAME)*] "}" "."
//   rule     := [LABEL ":"] head "<-" ["[" CONST "]"] body ("," VAR "!=" VAR)* "."
//   head     := atom | CONST
//   body     := lit | CONN "(" body ("," body)* ")"
//   CONN     := "TL" | "TM"            (SL/SM are parsed, then rejected)
//   lit      := atom | CONST | "not_l" atom | "not_m" atom
//   atom     := NAME ["(" TERM ("," TERM)* ")"]
//
// Comments run from '%' to end of line. CONST is a decimal in [0,1] or "p/q".

namespace faspkit {

namespace detail {

struct Token {
  enum class Kind { Ident, Number, Punct, Arrow, NotEq, Domain, End };
  Kind kind;
  std::string text;
  SourcePos pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      SourcePos pos{line_, col_};
      if (at_end()) {
        out.push_back({Token::Kind::End, "", pos});
        return out;
      }
      char c = peek();
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string s;
        while (!at_end() && is_ident_char(peek())) s += get();
        out.push_back({Token::Kind::Ident, s, pos});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back({Token::Kind::Number, number(), pos});
      } else if (c == '<' && peek(1) == '-') {
        get();
        get();
        out.push_back({Token::Kind::Arrow, "<-", pos});
      } else if (c == '!' && peek(1) == '=') {
        get();
        get();
        out.push_back({Token::Kind::NotEq, "!=", pos});
      } else if (c == '#') {
        get();
        std::string s;
        while (!at_end() && is_ident_char(peek())) s += get();
        if (s != "domain") throw ParseError("unknown directive '#" + s + "'", pos.line, pos.column);
        out.push_back({Token::Kind::Domain, "#domain", pos});
      } else if (std::string_view("(),.:{}=[]").find(c) != std::string_view::npos) {
        out.push_back({Token::Kind::Punct, std::string(1, get()), pos});
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", pos.line, pos.column);
      }
    }
  }

 private:
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  // digits ['.' digits] ['/' digits]; a '.' not followed by a digit ends a rule.
  std::string number() {
    std::string s;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s += get();
    if (!at_end() && peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      s += get();
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s += get();
    } else if (!at_end() && peek() == '/' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      s += get();
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s += get();
    }
    return s;
  }

  void skip_space() {
    while (!at_end()) {
      char c = peek();
      if (c == '%') {
        while (!at_end() && peek() != '\n') get();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else {
        return;
      }
    }
  }

  bool at_end() const { return i_ >= src_.size(); }
  char peek(std::size_t k = 0) const { return i_ + k < src_.size() ? src_[i_ + k] : '\0'; }
  char get() {
    char c = src_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  std::string_view src_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  SchematicProgram program() {
    SchematicProgram prog;
    while (cur().kind != Token::Kind::End) {
      if (cur().kind == Token::Kind::Domain) {
        prog.domains.push_back(domain());
      } else {
        prog.rules.push_back(rule());
      }
    }
    return prog;
  }

 private:
  DomainDecl domain() {
    next();  // #domain
    DomainDecl d;
    d.name = expect_ident("domain name");
    expect_punct("=");
    expect_punct("{");
    if (!is_punct("}")) {
      d.constants.push_back(expect_ident("object constant"));
      while (is_punct(",")) {
        next();
        d.constants.push_back(expect_ident("object constant"));
      }
    }
    expect_punct("}");
    expect_punct(".");
    return d;
  }

  SchematicRule rule() {
    SchematicRule r;
    r.pos = cur().pos;
    if (cur().kind == Token::Kind::Ident && peek_is_punct(1, ":")) {
      r.label = next().text;
      next();
    }
    if (cur().kind == Token::Kind::Number) {
      r.head = constant(next());
    } else {
      r.head = atom();
    }
    if (cur().kind != Token::Kind::Arrow) fail("expected '<-'");
    next();
    if (is_punct("[")) {
      next();
      if (cur().kind != Token::Kind::Number) fail("expected a weight");
      const Token& w = next();
      r.weight = fraction(w);
      expect_punct("]");
    }
    if (is_punct(".")) fail("empty rule body");
    r.body = body();
    while (is_punct(",")) {
      next();
      Guard g;
      g.lhs = expect_ident("guard variable");
      if (cur().kind != Token::Kind::NotEq) fail("expected '!='");
      next();
      g.rhs = expect_ident("guard variable");
      r.guards.push_back(std::move(g));
    }
    expect_punct(".");
    return r;
  }

  BodyExpr body() {
    SourcePos pos = cur().pos;
    if (cur().kind == Token::Kind::Number) {
      auto e = BodyExpr::make_constant(constant(next()));
      e.pos = pos;
      return e;
    }
    if (cur().kind != Token::Kind::Ident) fail("expected a body expression");
    const std::string& name = cur().text;
    if (name == "not_l" || name == "not_m" || name == "not_p") {
      NegatorKind n = negator_from_name(next().text);
      if (cur().kind != Token::Kind::Ident) fail("negation applies to atoms only");
      auto e = BodyExpr::make_negated(n, atom());
      e.pos = pos;
      return e;
    }
    if (is_connective(name) && peek_is_punct(1, "(")) {
      std::string op = next().text;
      next();  // (
      std::vector<BodyExpr> children;
      if (is_punct(")")) fail("connective needs at least one argument");
      children.push_back(body());
      while (is_punct(",")) {
        next();
        children.push_back(body());
      }
      expect_punct(")");
      auto e = BodyExpr::make_node(connective(op, pos), std::move(children));
      e.pos = pos;
      return e;
    }
    auto e = BodyExpr::make_atom(atom());
    e.pos = pos;
    return e;
  }

  SchematicAtom atom() {
    SchematicAtom a;
    a.predicate = expect_ident("atom");
    if (is_connective(a.predicate) || a.predicate.starts_with("not_")) {
      fail("'" + a.predicate + "' is reserved");
    }
    // Uppercase predicates (ATMNear) are fine; only arguments can be variables.
    if (is_punct("(")) {
      next();
      a.args.push_back(term());
      while (is_punct(",")) {
        next();
        a.args.push_back(term());
      }
      expect_punct(")");
    }
    return a;
  }

  std::string term() {
    if (cur().kind == Token::Kind::Ident || cur().kind == Token::Kind::Number) return next().text;
    fail("expected a term");
  }

  static bool is_connective(std::string_view s) {
    return s == "TL" || s == "TM" || s == "TP" || s == "SL" || s == "SM" || s == "SP";
  }

  Connective connective(std::string_view s, SourcePos pos) {
    if (s == "TL") return Connective::TL;
    if (s == "TM") return Connective::TM;
    if (s == "SL") return Connective::SL;
    if (s == "SM") return Connective::SM;
    (void)pos;
    throw FragmentError(diag::kProductUnsupported);
  }

  TruthValue constant(const Token& t) {
    try {
      auto v = TruthValue::parse(t.text);
      if (!v) throw ParseError("malformed constant '" + t.text + "'", t.pos.line, t.pos.column);
      return *v;
    } catch (const UsageError&) {
      throw ParseError("constant " + t.text + " is outside [0,1]", t.pos.line, t.pos.column);
    }
  }

  Fraction fraction(const Token& t) {
    auto slash = t.text.find('/');
    if (slash != std::string::npos) {
      return Fraction(std::stoll(t.text.substr(0, slash)), std::stoll(t.text.substr(slash + 1)));
    }
    auto dot = t.text.find('.');
    if (dot == std::string::npos) return Fraction(std::stoll(t.text));
    std::string digits = t.text.substr(0, dot) + t.text.substr(dot + 1);
    std::int64_t scale = 1;
    for (std::size_t i = dot + 1; i < t.text.size(); ++i) scale *= 10;
    return Fraction(std::stoll(digits), scale);
  }

  const Token& cur() const { return toks_[i_]; }
  const Token& next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }
  bool is_punct(std::string_view p) const {
    return cur().kind == Token::Kind::Punct && cur().text == p;
  }
  bool peek_is_punct(std::size_t k, std::string_view p) const {
    if (i_ + k >= toks_.size()) return false;
    const auto& t = toks_[i_ + k];
    return t.kind == Token::Kind::Punct && t.text == p;
  }
  void expect_punct(std::string_view p) {
    if (!is_punct(p)) fail("expected '" + std::string(p) + "'");
    next();
  }
  std::string expect_ident(std::string_view what) {
    if (cur().kind != Token::Kind::Ident) fail("expected " + std::string(what));
    return next().text;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    std::string found = cur().kind == Token::Kind::End ? "end of input" : "'" + cur().text + "'";
    throw ParseError(msg + ", found " + found, cur().pos.line, cur().pos.column);
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace detail

/// Parses .fasp source text into a schematic (possibly non-ground) program.
/// Throws ParseError on syntax errors and FragmentError on product logic.
inline SchematicProgram parse(std::string_view text) {
  return detail::Parser(detail::Lexer(text).run()).program();
}

}  // namespace faspkit
