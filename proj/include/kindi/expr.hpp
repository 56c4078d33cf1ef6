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

#ifndef KINDI_EXPR_HPP_
#define KINDI_EXPR_HPP_

#include <cassert>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace kindi {

// Index into TransitionSystem::vars.
using VarId = int;

// Word-level bit-vector expressions. All arithmetic is unsigned modular;
// comparisons produce width-1 values. Widths are fixed at construction and
// limited to 64 bits.
enum class ExprKind {
  Const,
  Var,
  Slice,
  Concat,
  Not,     // bitwise complement
  Neg,     // two's complement negation
  RedAnd,
  RedOr,
  RedXor,
  Add,
  Sub,
  And,
  Or,
  Xor,
  Eq,
  Ne,
  Ult,
  Ule,
  Ugt,
  Uge,
  Ite,
};

struct Expr;
using ExprRef = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind;
  int width;                  // result width, 1..64
  uint64_t value = 0;         // Const payload
  VarId var = -1;             // Var payload
  int hi = 0, lo = 0;         // Slice payload
  std::vector<ExprRef> args;  // children (operands / concat parts)
};

inline uint64_t mask_width(int width) {
  return width >= 64 ? ~0ull : ((1ull << width) - 1);
}

inline bool is_comparison(ExprKind k) {
  switch (k) {
    case ExprKind::Eq:
    case ExprKind::Ne:
    case ExprKind::Ult:
    case ExprKind::Ule:
    case ExprKind::Ugt:
    case ExprKind::Uge:
      return true;
    default:
      return false;
  }
}

namespace exprs {

inline ExprRef constant(uint64_t value, int width) {
  assert(width >= 1 && width <= 64);
  assert((value & ~mask_width(width)) == 0 && "constant exceeds width");
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Const;
  e->width = width;
  e->value = value & mask_width(width);
  return e;
}

inline ExprRef var(VarId id, int width) {
  assert(width >= 1 && width <= 64);
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Var;
  e->width = width;
  e->var = id;
  return e;
}

inline ExprRef slice(ExprRef a, int hi, int lo) {
  assert(0 <= lo && lo <= hi && hi < a->width);
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Slice;
  e->width = hi - lo + 1;
  e->hi = hi;
  e->lo = lo;
  e->args = {std::move(a)};
  return e;
}

// parts[0] is the most significant chunk, matching {a, b} concatenation.
inline ExprRef concat(std::vector<ExprRef> parts) {
  assert(!parts.empty());
  if (parts.size() == 1) return parts[0];
  int width = 0;
  for (const auto& p : parts) width += p->width;
  assert(width <= 64);
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Concat;
  e->width = width;
  e->args = std::move(parts);
  return e;
}

inline ExprRef unop(ExprKind k, ExprRef a) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->width = (k == ExprKind::Not || k == ExprKind::Neg) ? a->width : 1;
  e->args = {std::move(a)};
  return e;
}

inline ExprRef binop(ExprKind k, ExprRef a, ExprRef b) {
  assert(a->width == b->width && "binop operands must have equal width");
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->width = is_comparison(k) ? 1 : a->width;
  e->args = {std::move(a), std::move(b)};
  return e;
}

inline ExprRef ite(ExprRef cond, ExprRef then_e, ExprRef else_e) {
  assert(cond->width == 1);
  assert(then_e->width == else_e->width);
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Ite;
  e->width = then_e->width;
  e->args = {std::move(cond), std::move(then_e), std::move(else_e)};
  return e;
}

inline ExprRef bnot(ExprRef a) { return unop(ExprKind::Not, std::move(a)); }
inline ExprRef neg(ExprRef a) { return unop(ExprKind::Neg, std::move(a)); }
inline ExprRef red_and(ExprRef a) { return unop(ExprKind::RedAnd, std::move(a)); }
inline ExprRef red_or(ExprRef a) { return unop(ExprKind::RedOr, std::move(a)); }
inline ExprRef red_xor(ExprRef a) { return unop(ExprKind::RedXor, std::move(a)); }

inline ExprRef add(ExprRef a, ExprRef b) { return binop(ExprKind::Add, std::move(a), std::move(b)); }
inline ExprRef sub(ExprRef a, ExprRef b) { return binop(ExprKind::Sub, std::move(a), std::move(b)); }
inline ExprRef band(ExprRef a, ExprRef b) { return binop(ExprKind::And, std::move(a), std::move(b)); }
inline ExprRef bor(ExprRef a, ExprRef b) { return binop(ExprKind::Or, std::move(a), std::move(b)); }
inline ExprRef bxor(ExprRef a, ExprRef b) { return binop(ExprKind::Xor, std::move(a), std::move(b)); }
inline ExprRef eq(ExprRef a, ExprRef b) { return binop(ExprKind::Eq, std::move(a), std::move(b)); }
inline ExprRef ne(ExprRef a, ExprRef b) { return binop(ExprKind::Ne, std::move(a), std::move(b)); }
inline ExprRef ult(ExprRef a, ExprRef b) { return binop(ExprKind::Ult, std::move(a), std::move(b)); }
inline ExprRef ule(ExprRef a, ExprRef b) { return binop(ExprKind::Ule, std::move(a), std::move(b)); }
inline ExprRef ugt(ExprRef a, ExprRef b) { return binop(ExprKind::Ugt, std::move(a), std::move(b)); }
inline ExprRef uge(ExprRef a, ExprRef b) { return binop(ExprKind::Uge, std::move(a), std::move(b)); }

// Widen to `width` by prepending zero bits. Identity when already wide enough.
inline ExprRef zext(ExprRef a, int width) {
  assert(width >= a->width);
  if (width == a->width) return a;
  return concat({constant(0, width - a->width), std::move(a)});
}

}  // namespace exprs

inline bool expr_equal(const ExprRef& a, const ExprRef& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind || a->width != b->width) return false;
  switch (a->kind) {
    case ExprKind::Const:
      return a->value == b->value;
    case ExprKind::Var:
      return a->var == b->var;
    case ExprKind::Slice:
      if (a->hi != b->hi || a->lo != b->lo) return false;
      break;
    default:
      break;
  }
  if (a->args.size() != b->args.size()) return false;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!expr_equal(a->args[i], b->args[i])) return false;
  return true;
}

inline size_t expr_hash(const ExprRef& e) {
  size_t h = std::hash<int>()(static_cast<int>(e->kind)) * 31 + e->width;
  auto mix = [&h](size_t v) { h = h * 1000003u + v; };
  switch (e->kind) {
    case ExprKind::Const:
      mix(std::hash<uint64_t>()(e->value));
      break;
    case ExprKind::Var:
      mix(std::hash<int>()(e->var));
      break;
    case ExprKind::Slice:
      mix(static_cast<size_t>(e->hi) * 65 + static_cast<size_t>(e->lo));
      break;
    default:
      break;
  }
  for (const auto& a : e->args) mix(expr_hash(a));
  return h;
}

inline void collect_vars(const ExprRef& e, std::set<VarId>& out) {
  if (e->kind == ExprKind::Var) out.insert(e->var);
  for (const auto& a : e->args) collect_vars(a, out);
}

inline int expr_size(const ExprRef& e) {
  int n = 1;
  for (const auto& a : e->args) n += expr_size(a);
  return n;
}

// S-expression form used by the `dump` command and golden tests.
inline std::string to_sexpr(const ExprRef& e,
                            const std::function<std::string(VarId)>& var_name) {
  std::ostringstream os;
  // Slice prints its operand first so `(slice x 31 31)` reads naturally.
  std::function<void(const ExprRef&)> rec = [&](const ExprRef& ex) {
    switch (ex->kind) {
      case ExprKind::Const:
        os << ex->value;
        return;
      case ExprKind::Var:
        os << var_name(ex->var);
        return;
      case ExprKind::Slice:
        os << "(slice ";
        rec(ex->args[0]);
        os << ' ' << ex->hi << ' ' << ex->lo << ')';
        return;
      default:
        break;
    }
    static const char* names[] = {"const",  "var",    "slice", "concat", "not",
                                  "neg",    "redand", "redor", "redxor", "add",
                                  "sub",    "and",    "or",    "xor",    "eq",
                                  "ne",     "ult",    "ule",   "ugt",    "uge",
                                  "ite"};
    os << '(' << names[static_cast<int>(ex->kind)];
    for (const auto& a : ex->args) {
      os << ' ';
      rec(a);
    }
    os << ')';
  };
  rec(e);
  return os.str();
}

// Infix rendering in the assertion-subset syntax. Output re-parses through
// the assertion parser, so it is usable as lemma source text.
inline std::string to_infix(const ExprRef& e,
                            const std::function<std::string(VarId)>& var_name) {
  std::ostringstream os;
  std::function<void(const ExprRef&, bool)> rec = [&](const ExprRef& ex,
                                                      bool parens) {
    auto bin = [&](const char* op) {
      if (parens) os << '(';
      rec(ex->args[0], true);
      os << ' ' << op << ' ';
      rec(ex->args[1], true);
      if (parens) os << ')';
    };
    switch (ex->kind) {
      case ExprKind::Const:
        os << ex->width << "'d" << ex->value;
        return;
      case ExprKind::Var:
        os << var_name(ex->var);
        return;
      case ExprKind::Slice: {
        rec(ex->args[0], true);
        if (ex->hi == ex->lo)
          os << '[' << ex->lo << ']';
        else
          os << '[' << ex->hi << ':' << ex->lo << ']';
        return;
      }
      case ExprKind::Concat: {
        os << '{';
        for (size_t i = 0; i < ex->args.size(); ++i) {
          if (i) os << ", ";
          rec(ex->args[i], false);
        }
        os << '}';
        return;
      }
      case ExprKind::Not:
        os << '~';
        rec(ex->args[0], true);
        return;
      case ExprKind::Neg:
        os << '-';
        rec(ex->args[0], true);
        return;
      case ExprKind::RedAnd:
        os << '&';
        rec(ex->args[0], true);
        return;
      case ExprKind::RedOr:
        os << '|';
        rec(ex->args[0], true);
        return;
      case ExprKind::RedXor:
        os << '^';
        rec(ex->args[0], true);
        return;
      case ExprKind::Add:
        bin("+");
        return;
      case ExprKind::Sub:
        bin("-");
        return;
      case ExprKind::And:
        bin("&");
        return;
      case ExprKind::Or:
        bin("|");
        return;
      case ExprKind::Xor:
        bin("^");
        return;
      case ExprKind::Eq:
        bin("==");
        return;
      case ExprKind::Ne:
        bin("!=");
        return;
      case ExprKind::Ult:
        bin("<");
        return;
      case ExprKind::Ule:
        bin("<=");
        return;
      case ExprKind::Ugt:
        bin(">");
        return;
      case ExprKind::Uge:
        bin(">=");
        return;
      case ExprKind::Ite:
        if (parens) os << '(';
        rec(ex->args[0], true);
        os << " ? ";
        rec(ex->args[1], true);
        os << " : ";
        rec(ex->args[2], true);
        if (parens) os << ')';
        return;
    }
  };
  rec(e, false);
  return os.str();
}

}  // namespace kindi

#endif  // KINDI_EXPR_HPP_
