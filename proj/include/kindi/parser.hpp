// Copyright 2026 The Kindi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KINDI_PARSER_HPP_
#define KINDI_PARSER_HPP_

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "kindi/ast.hpp"
#include "kindi/error.hpp"
#include "kindi/lexer.hpp"

namespace kindi {

// Declared (name, width) pairs of the target module; used to validate
// standalone assertions before they reach elaboration.
using SymbolTable = std::map<std::string, int>;

namespace detail {

// Recursive-descent parser over the token stream. No error recovery: the
// first mismatch throws ParseError.
class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& prev() const { return toks_[pos_ - 1]; }

  bool at(TokenKind k) const { return peek().is(k); }
  bool at(TokenKind k, std::string_view t) const { return peek().is(k, t); }

  bool accept(TokenKind k, std::string_view t) {
    if (at(k, t)) {
      ++pos_;
      return true;
    }
    return false;
  }

  const Token& expect(TokenKind k, std::string_view t) {
    if (!at(k, t)) fail(std::string("'") + std::string(t) + "'");
    return toks_[pos_++];
  }

  const Token& expect_ident() {
    if (!at(TokenKind::Ident)) fail("identifier");
    return toks_[pos_++];
  }

  const Token& expect_number() {
    if (!at(TokenKind::Number)) fail("number");
    return toks_[pos_++];
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::Eof
                            ? "end of input"
                            : "'" + t.text + "'";
    throw ParseError(t.line, t.col, expected, found);
  }

  // expr := ternary over the usual precedence ladder:
  //   ?:  |  ^  &  == !=  < <= > >=  + -  unary  primary
  ExprAstRef parse_expr() {
    ExprAstRef cond = parse_or();
    if (!accept(TokenKind::Operator, "?")) return cond;
    ExprAstRef then_e = parse_expr();
    expect(TokenKind::Operator, ":");
    ExprAstRef else_e = parse_expr();
    auto e = std::make_shared<ExprAst>();
    e->kind = ExprAstKind::Ternary;
    e->line = cond->line;
    e->col = cond->col;
    e->args = {std::move(cond), std::move(then_e), std::move(else_e)};
    return e;
  }

  std::vector<SeqStmtRef> parse_stmt_list_or_single() {
    if (accept(TokenKind::Keyword, "begin")) {
      std::vector<SeqStmtRef> stmts;
      while (!accept(TokenKind::Keyword, "end")) stmts.push_back(parse_stmt());
      return stmts;
    }
    return {parse_stmt()};
  }

  SeqStmtRef parse_stmt() {
    auto s = std::make_shared<SeqStmt>();
    s->line = peek().line;
    s->col = peek().col;
    if (accept(TokenKind::Keyword, "if")) {
      s->kind = StmtKind::If;
      expect(TokenKind::Punct, "(");
      s->cond = parse_expr();
      expect(TokenKind::Punct, ")");
      s->then_stmts = parse_stmt_list_or_single();
      if (accept(TokenKind::Keyword, "else"))
        s->else_stmts = parse_stmt_list_or_single();
      return s;
    }
    s->kind = StmtKind::NbAssign;
    s->lhs = expect_ident().text;
    expect(TokenKind::Operator, "<=");
    s->rhs = parse_expr();
    expect(TokenKind::Punct, ";");
    return s;
  }

 private:
  ExprAstRef binary(std::string op, ExprAstRef a, ExprAstRef b) {
    auto e = std::make_shared<ExprAst>();
    e->kind = ExprAstKind::Binary;
    e->line = a->line;
    e->col = a->col;
    e->op = std::move(op);
    e->args = {std::move(a), std::move(b)};
    return e;
  }

  ExprAstRef parse_or() {
    ExprAstRef a = parse_xor();
    while (at(TokenKind::Operator, "|")) {
      ++pos_;
      a = binary("|", std::move(a), parse_xor());
    }
    return a;
  }

  ExprAstRef parse_xor() {
    ExprAstRef a = parse_and();
    while (at(TokenKind::Operator, "^")) {
      ++pos_;
      a = binary("^", std::move(a), parse_and());
    }
    return a;
  }

  ExprAstRef parse_and() {
    ExprAstRef a = parse_equality();
    while (at(TokenKind::Operator, "&")) {
      ++pos_;
      a = binary("&", std::move(a), parse_equality());
    }
    return a;
  }

  ExprAstRef parse_equality() {
    ExprAstRef a = parse_relational();
    while (at(TokenKind::Operator, "==") || at(TokenKind::Operator, "!=")) {
      std::string op = peek().text;
      ++pos_;
      a = binary(op, std::move(a), parse_relational());
    }
    return a;
  }

  ExprAstRef parse_relational() {
    ExprAstRef a = parse_addsub();
    while (at(TokenKind::Operator, "<") || at(TokenKind::Operator, "<=") ||
           at(TokenKind::Operator, ">") || at(TokenKind::Operator, ">=")) {
      std::string op = peek().text;
      ++pos_;
      a = binary(op, std::move(a), parse_addsub());
    }
    return a;
  }

  ExprAstRef parse_addsub() {
    ExprAstRef a = parse_unary();
    while (at(TokenKind::Operator, "+") || at(TokenKind::Operator, "-")) {
      std::string op = peek().text;
      ++pos_;
      a = binary(op, std::move(a), parse_unary());
    }
    return a;
  }

  ExprAstRef parse_unary() {
    static const char* unary_ops[] = {"~", "!", "-", "&", "|", "^"};
    for (const char* op : unary_ops) {
      if (at(TokenKind::Operator, op)) {
        const Token& t = peek();
        ++pos_;
        auto e = std::make_shared<ExprAst>();
        e->kind = ExprAstKind::Unary;
        e->line = t.line;
        e->col = t.col;
        e->op = op;
        e->args = {parse_unary()};
        return e;
      }
    }
    return parse_primary();
  }

  ExprAstRef parse_primary() {
    const Token& t = peek();
    auto e = std::make_shared<ExprAst>();
    e->line = t.line;
    e->col = t.col;
    if (at(TokenKind::Number)) {
      ++pos_;
      e->kind = ExprAstKind::Num;
      e->value = t.value;
      e->num_width = t.width;
      return e;
    }
    if (at(TokenKind::Ident)) {
      ++pos_;
      if (accept(TokenKind::Operator, "[")) {
        int hi = static_cast<int>(expect_number().value);
        int lo = hi;
        bool single = true;
        if (accept(TokenKind::Operator, ":")) {
          lo = static_cast<int>(expect_number().value);
          single = false;
        }
        expect(TokenKind::Operator, "]");
        e->kind = ExprAstKind::Slice;
        e->name = t.text;
        e->hi = hi;
        e->lo = lo;
        e->single_bit = single;
        return e;
      }
      e->kind = ExprAstKind::Ref;
      e->name = t.text;
      return e;
    }
    if (accept(TokenKind::Punct, "(")) {
      ExprAstRef inner = parse_expr();
      expect(TokenKind::Punct, ")");
      return inner;
    }
    if (accept(TokenKind::Operator, "{")) {
      e->kind = ExprAstKind::Concat;
      e->args.push_back(parse_expr());
      while (accept(TokenKind::Punct, ",")) e->args.push_back(parse_expr());
      expect(TokenKind::Operator, "}");
      return e;
    }
    fail("expression");
  }

  const std::vector<Token>& toks_;
  size_t pos_ = 0;
};

inline int parse_range(Parser& p) {
  // `[msb:0]`; only zero-based ranges are accepted.
  const Token& open = p.peek();
  p.expect(TokenKind::Operator, "[");
  int msb = static_cast<int>(p.expect_number().value);
  p.expect(TokenKind::Operator, ":");
  int lsb = static_cast<int>(p.expect_number().value);
  p.expect(TokenKind::Operator, "]");
  if (lsb != 0 || msb < 0 || msb > 63)
    throw ParseError(open.line, open.col, "range of the form [msb:0], msb < 64",
                     "[" + std::to_string(msb) + ":" + std::to_string(lsb) + "]");
  return msb + 1;
}

inline AssertionAst parse_assertion_stmt(Parser& p, const std::string& name) {
  AssertionAst a;
  a.line = p.peek().line;
  a.col = p.peek().col;
  a.name = name;
  if (p.at(TokenKind::Ident)) {
    // Optional `label:` prefix.
    a.name = p.expect_ident().text;
    p.expect(TokenKind::Operator, ":");
  }
  if (p.accept(TokenKind::Keyword, "assume"))
    a.is_assume = true;
  else
    p.expect(TokenKind::Keyword, "assert");
  p.expect(TokenKind::Keyword, "property");
  p.expect(TokenKind::Punct, "(");
  if (p.accept(TokenKind::Punct, "@")) {
    p.expect(TokenKind::Punct, "(");
    p.expect(TokenKind::Keyword, "posedge");
    a.clock = p.expect_ident().text;
    p.expect(TokenKind::Punct, ")");
  }
  a.body = p.parse_expr();
  p.expect(TokenKind::Punct, ")");
  p.expect(TokenKind::Punct, ";");
  return a;
}

inline void check_symbols(const ExprAstRef& e, const SymbolTable& symbols) {
  if (e->kind == ExprAstKind::Ref || e->kind == ExprAstKind::Slice) {
    if (!symbols.count(e->name))
      throw UnknownSymbolError(e->line, e->col, e->name);
  }
  for (const auto& a : e->args) check_symbols(a, symbols);
}

}  // namespace detail

inline ModuleAst parse_module(const std::vector<Token>& tokens) {
  detail::Parser p(tokens);
  ModuleAst m;
  p.expect(TokenKind::Keyword, "module");
  m.name = p.expect_ident().text;
  p.expect(TokenKind::Punct, "(");
  if (!p.at(TokenKind::Punct, ")")) {
    do {
      PortAst port;
      port.line = p.peek().line;
      port.col = p.peek().col;
      if (p.accept(TokenKind::Keyword, "input"))
        port.is_input = true;
      else if (p.accept(TokenKind::Keyword, "output"))
        port.is_input = false;
      else
        p.fail("'input' or 'output'");
      // Tolerate an optional net-type keyword, `input wire clk` style.
      if (!p.accept(TokenKind::Keyword, "wire"))
        p.accept(TokenKind::Keyword, "logic");
      if (p.at(TokenKind::Operator, "[")) port.width = detail::parse_range(p);
      port.name = p.expect_ident().text;
      m.ports.push_back(std::move(port));
    } while (p.accept(TokenKind::Punct, ","));
  }
  p.expect(TokenKind::Punct, ")");
  p.expect(TokenKind::Punct, ";");

  int anon = 0;
  while (!p.accept(TokenKind::Keyword, "endmodule")) {
    if (p.at(TokenKind::Keyword, "reg") || p.at(TokenKind::Keyword, "logic") ||
        p.at(TokenKind::Keyword, "wire")) {
      DeclAst d;
      d.line = p.peek().line;
      d.col = p.peek().col;
      d.kind = p.at(TokenKind::Keyword, "wire") ? DeclKind::Wire : DeclKind::Reg;
      ++p;
      if (p.at(TokenKind::Operator, "[")) d.width = detail::parse_range(p);
      d.name = p.expect_ident().text;
      if (p.accept(TokenKind::Operator, "=")) {
        const Token& n = p.expect_number();
        if (n.width && n.width != d.width)
          throw ParseError(n.line, n.col,
                           "initializer width matching the declaration",
                           n.text);
        d.init = n.value;
      }
      p.expect(TokenKind::Punct, ";");
      m.decls.push_back(std::move(d));
      continue;
    }
    if (p.at(TokenKind::Keyword, "assign")) {
      AssignAst a;
      a.line = p.peek().line;
      a.col = p.peek().col;
      ++p;
      a.lhs = p.expect_ident().text;
      p.expect(TokenKind::Operator, "=");
      a.rhs = p.parse_expr();
      p.expect(TokenKind::Punct, ";");
      m.assigns.push_back(std::move(a));
      continue;
    }
    if (p.at(TokenKind::Keyword, "always_ff")) {
      SeqBlockAst b;
      b.line = p.peek().line;
      b.col = p.peek().col;
      ++p;
      p.expect(TokenKind::Punct, "@");
      p.expect(TokenKind::Punct, "(");
      p.expect(TokenKind::Keyword, "posedge");
      b.clock = p.expect_ident().text;
      p.expect(TokenKind::Punct, ")");
      b.stmts = p.parse_stmt_list_or_single();
      m.seq_blocks.push_back(std::move(b));
      continue;
    }
    if (p.at(TokenKind::Keyword, "assert") || p.at(TokenKind::Keyword, "assume") ||
        p.at(TokenKind::Ident)) {
      m.assertions.push_back(detail::parse_assertion_stmt(
          p, m.name + "_a" + std::to_string(anon++)));
      continue;
    }
    p.fail("declaration, assign, always_ff, assertion, or 'endmodule'");
  }
  return m;
}

// Parses one standalone assertion: either the full
// `assert property (@(posedge clk) E);` statement or a bare expression `E`.
// Every referenced identifier must appear in `symbols`.
inline AssertionAst parse_assertion(const std::string& source,
                                    const SymbolTable& symbols,
                                    const std::string& default_name = "a0") {
  std::vector<Token> toks = tokenize(source);
  detail::Parser p(toks);
  AssertionAst a;
  bool stmt_form = p.at(TokenKind::Keyword, "assert") ||
                   p.at(TokenKind::Keyword, "assume");
  if (!stmt_form && p.at(TokenKind::Ident)) {
    // `label: assert ...` — look ahead one token for the colon.
    stmt_form = toks.size() > 1 && toks[1].is(TokenKind::Operator, ":");
  }
  if (stmt_form) {
    a = detail::parse_assertion_stmt(p, default_name);
  } else {
    a.name = default_name;
    a.line = p.peek().line;
    a.col = p.peek().col;
    a.body = p.parse_expr();
  }
  if (!p.at(TokenKind::Eof)) p.fail("end of input");
  detail::check_symbols(a.body, symbols);
  return a;
}

// Parses an `.sva` file: a sequence of assertion statements (or one bare
// expression). Unlabeled assertions are named `<prefix>0`, `<prefix>1`, ...
inline std::vector<AssertionAst> parse_assertion_file(
    const std::string& source, const SymbolTable& symbols,
    const std::string& prefix = "a") {
  std::vector<Token> toks = tokenize(source);
  detail::Parser p(toks);
  std::vector<AssertionAst> out;
  if (p.at(TokenKind::Eof)) return out;
  bool stmt_form = p.at(TokenKind::Keyword, "assert") ||
                   p.at(TokenKind::Keyword, "assume") ||
                   (p.at(TokenKind::Ident) && toks.size() > 1 &&
                    toks[1].is(TokenKind::Operator, ":"));
  if (!stmt_form) {
    AssertionAst a;
    a.name = prefix + "0";
    a.line = p.peek().line;
    a.col = p.peek().col;
    a.body = p.parse_expr();
    if (!p.at(TokenKind::Eof)) p.fail("end of input");
    detail::check_symbols(a.body, symbols);
    out.push_back(std::move(a));
    return out;
  }
  int idx = 0;
  while (!p.at(TokenKind::Eof)) {
    AssertionAst a =
        detail::parse_assertion_stmt(p, prefix + std::to_string(idx++));
    detail::check_symbols(a.body, symbols);
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace kindi

#endif  // KINDI_PARSER_HPP_
