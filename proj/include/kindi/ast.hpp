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

#ifndef KINDI_AST_HPP_
#define KINDI_AST_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace kindi {

// Expression AST as written in the source. Widths of unsized literals are
// resolved later, during elaboration.
struct ExprAst;
using ExprAstRef = std::shared_ptr<const ExprAst>;

enum class ExprAstKind { Num, Ref, Slice, Concat, Unary, Binary, Ternary };

struct ExprAst {
  ExprAstKind kind;
  int line = 0, col = 0;
  uint64_t value = 0;            // Num
  std::optional<int> num_width;  // Num: width prefix if present
  std::string name;              // Ref / Slice base identifier
  int hi = 0, lo = 0;            // Slice ([i] has hi == lo)
  bool single_bit = false;       // Slice was written as [i]
  std::string op;                // Unary / Binary operator text
  std::vector<ExprAstRef> args;
};

enum class StmtKind { NbAssign, If };

struct SeqStmt;
using SeqStmtRef = std::shared_ptr<const SeqStmt>;

struct SeqStmt {
  StmtKind kind;
  int line = 0, col = 0;
  // NbAssign
  std::string lhs;
  ExprAstRef rhs;
  // If
  ExprAstRef cond;
  std::vector<SeqStmtRef> then_stmts;
  std::vector<SeqStmtRef> else_stmts;
};

struct PortAst {
  bool is_input = true;
  std::string name;
  int width = 1;
  int line = 0, col = 0;
};

enum class DeclKind { Reg, Wire };

struct DeclAst {
  DeclKind kind = DeclKind::Reg;
  std::string name;
  int width = 1;
  std::optional<uint64_t> init;  // `reg [W-1:0] x = K;`
  int line = 0, col = 0;
};

struct AssignAst {
  std::string lhs;
  ExprAstRef rhs;
  int line = 0, col = 0;
};

struct SeqBlockAst {
  std::string clock;  // identifier in @(posedge <clock>)
  std::vector<SeqStmtRef> stmts;
  int line = 0, col = 0;
};

struct AssertionAst {
  std::string name;
  bool is_assume = false;
  std::optional<std::string> clock;  // absent for the bare-expression form
  ExprAstRef body;
  int line = 0, col = 0;
};

struct ModuleAst {
  std::string name;
  std::vector<PortAst> ports;
  std::vector<DeclAst> decls;
  std::vector<AssignAst> assigns;
  std::vector<SeqBlockAst> seq_blocks;
  std::vector<AssertionAst> assertions;
};

// ---- structural equality (positions ignored) --------------------------------

inline bool ast_equal(const ExprAstRef& a, const ExprAstRef& b) {
  if (!a || !b) return a == b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ExprAstKind::Num:
      if (a->value != b->value || a->num_width != b->num_width) return false;
      break;
    case ExprAstKind::Ref:
      if (a->name != b->name) return false;
      break;
    case ExprAstKind::Slice:
      if (a->name != b->name || a->hi != b->hi || a->lo != b->lo ||
          a->single_bit != b->single_bit)
        return false;
      break;
    case ExprAstKind::Unary:
    case ExprAstKind::Binary:
      if (a->op != b->op) return false;
      break;
    default:
      break;
  }
  if (a->args.size() != b->args.size()) return false;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!ast_equal(a->args[i], b->args[i])) return false;
  return true;
}

inline bool ast_equal(const SeqStmtRef& a, const SeqStmtRef& b) {
  if (a->kind != b->kind) return false;
  if (a->kind == StmtKind::NbAssign)
    return a->lhs == b->lhs && ast_equal(a->rhs, b->rhs);
  if (!ast_equal(a->cond, b->cond)) return false;
  auto eq_list = [](const std::vector<SeqStmtRef>& x,
                    const std::vector<SeqStmtRef>& y) {
    if (x.size() != y.size()) return false;
    for (size_t i = 0; i < x.size(); ++i)
      if (!ast_equal(x[i], y[i])) return false;
    return true;
  };
  return eq_list(a->then_stmts, b->then_stmts) &&
         eq_list(a->else_stmts, b->else_stmts);
}

inline bool ast_equal(const AssertionAst& a, const AssertionAst& b) {
  return a.name == b.name && a.is_assume == b.is_assume && a.clock == b.clock &&
         ast_equal(a.body, b.body);
}

inline bool ast_equal(const ModuleAst& a, const ModuleAst& b) {
  if (a.name != b.name || a.ports.size() != b.ports.size() ||
      a.decls.size() != b.decls.size() || a.assigns.size() != b.assigns.size() ||
      a.seq_blocks.size() != b.seq_blocks.size() ||
      a.assertions.size() != b.assertions.size())
    return false;
  for (size_t i = 0; i < a.ports.size(); ++i) {
    const auto &p = a.ports[i], &q = b.ports[i];
    if (p.is_input != q.is_input || p.name != q.name || p.width != q.width)
      return false;
  }
  for (size_t i = 0; i < a.decls.size(); ++i) {
    const auto &p = a.decls[i], &q = b.decls[i];
    if (p.kind != q.kind || p.name != q.name || p.width != q.width ||
        p.init != q.init)
      return false;
  }
  for (size_t i = 0; i < a.assigns.size(); ++i) {
    if (a.assigns[i].lhs != b.assigns[i].lhs ||
        !ast_equal(a.assigns[i].rhs, b.assigns[i].rhs))
      return false;
  }
  for (size_t i = 0; i < a.seq_blocks.size(); ++i) {
    const auto &p = a.seq_blocks[i], &q = b.seq_blocks[i];
    if (p.clock != q.clock || p.stmts.size() != q.stmts.size()) return false;
    for (size_t j = 0; j < p.stmts.size(); ++j)
      if (!ast_equal(p.stmts[j], q.stmts[j])) return false;
  }
  for (size_t i = 0; i < a.assertions.size(); ++i)
    if (!ast_equal(a.assertions[i], b.assertions[i])) return false;
  return true;
}

// ---- pretty printer ----------------------------------------------------------
// Emits source that re-parses to a structurally identical AST.

inline void print_expr(const ExprAstRef& e, std::ostream& os) {
  switch (e->kind) {
    case ExprAstKind::Num:
      if (e->num_width)
        os << *e->num_width << "'d" << e->value;
      else
        os << e->value;
      return;
    case ExprAstKind::Ref:
      os << e->name;
      return;
    case ExprAstKind::Slice:
      os << e->name << '[' << e->hi;
      if (!e->single_bit) os << ':' << e->lo;
      os << ']';
      return;
    case ExprAstKind::Concat:
      os << '{';
      for (size_t i = 0; i < e->args.size(); ++i) {
        if (i) os << ", ";
        print_expr(e->args[i], os);
      }
      os << '}';
      return;
    case ExprAstKind::Unary:
      os << e->op << '(';
      print_expr(e->args[0], os);
      os << ')';
      return;
    case ExprAstKind::Binary:
      os << '(';
      print_expr(e->args[0], os);
      os << ' ' << e->op << ' ';
      print_expr(e->args[1], os);
      os << ')';
      return;
    case ExprAstKind::Ternary:
      os << '(';
      print_expr(e->args[0], os);
      os << " ? ";
      print_expr(e->args[1], os);
      os << " : ";
      print_expr(e->args[2], os);
      os << ')';
      return;
  }
}

inline std::string print_expr(const ExprAstRef& e) {
  std::ostringstream os;
  print_expr(e, os);
  return os.str();
}

inline void print_stmt(const SeqStmtRef& s, std::ostream& os, int indent) {
  std::string pad(static_cast<size_t>(indent), ' ');
  if (s->kind == StmtKind::NbAssign) {
    os << pad << s->lhs << " <= ";
    print_expr(s->rhs, os);
    os << ";\n";
    return;
  }
  os << pad << "if (";
  print_expr(s->cond, os);
  os << ") begin\n";
  for (const auto& t : s->then_stmts) print_stmt(t, os, indent + 2);
  os << pad << "end";
  if (!s->else_stmts.empty()) {
    os << " else begin\n";
    for (const auto& t : s->else_stmts) print_stmt(t, os, indent + 2);
    os << pad << "end";
  }
  os << "\n";
}

inline void print_assertion(const AssertionAst& a, std::ostream& os) {
  os << a.name << ": " << (a.is_assume ? "assume" : "assert") << " property (";
  if (a.clock) os << "@(posedge " << *a.clock << ") ";
  print_expr(a.body, os);
  os << ");\n";
}

inline std::string print_module(const ModuleAst& m) {
  std::ostringstream os;
  os << "module " << m.name << "(";
  for (size_t i = 0; i < m.ports.size(); ++i) {
    const auto& p = m.ports[i];
    if (i) os << ", ";
    os << (p.is_input ? "input" : "output");
    if (p.width > 1) os << " [" << (p.width - 1) << ":0]";
    os << ' ' << p.name;
  }
  os << ");\n";
  for (const auto& d : m.decls) {
    os << "  " << (d.kind == DeclKind::Reg ? "reg" : "wire");
    if (d.width > 1) os << " [" << (d.width - 1) << ":0]";
    os << ' ' << d.name;
    if (d.init) os << " = " << d.width << "'d" << *d.init;
    os << ";\n";
  }
  for (const auto& a : m.assigns) {
    os << "  assign " << a.lhs << " = ";
    print_expr(a.rhs, os);
    os << ";\n";
  }
  for (const auto& b : m.seq_blocks) {
    os << "  always_ff @(posedge " << b.clock << ") begin\n";
    for (const auto& s : b.stmts) print_stmt(s, os, 4);
    os << "  end\n";
  }
  for (const auto& a : m.assertions) {
    os << "  ";
    print_assertion(a, os);
  }
  os << "endmodule\n";
  return os.str();
}

}  // namespace kindi

#endif  // KINDI_AST_HPP_
