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

#ifndef KINDI_TSYS_HPP_
#define KINDI_TSYS_HPP_

#include <cassert>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kindi/expr.hpp"

namespace kindi {

struct VarInfo {
  std::string name;
  int width = 1;
  bool is_input = false;
};

struct StateVar {
  VarId id = -1;
  std::optional<uint64_t> init;  // nullopt = nondeterministic initial value
  ExprRef next;                  // references state and input vars only
};

struct Property {
  std::string name;
  ExprRef expr;  // width 1
};

// Word-level synchronous design after elaboration. Immutable once built;
// safe to share across threads.
struct TransitionSystem {
  std::string name;
  std::vector<VarInfo> vars;      // indexed by VarId
  std::vector<VarId> inputs;      // subset of vars with is_input
  std::vector<StateVar> states;   // subset of vars without is_input
  std::vector<ExprRef> assumptions;  // width 1, hold at every cycle
  std::vector<Property> properties;  // width 1

  const VarInfo& var(VarId id) const { return vars.at(static_cast<size_t>(id)); }

  std::string var_name(VarId id) const { return var(id).name; }

  int var_width(VarId id) const { return var(id).width; }

  std::optional<VarId> find_var(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i].name == name) return static_cast<VarId>(i);
    return std::nullopt;
  }

  int total_state_bits() const {
    int n = 0;
    for (const auto& s : states) n += var_width(s.id);
    return n;
  }

  int total_input_bits() const {
    int n = 0;
    for (VarId id : inputs) n += var_width(id);
    return n;
  }
};

// One time step's valuation. Values are stored per VarId; `defined` tracks
// which variables carry a value (step() leaves next-cycle inputs fresh).
struct Frame {
  std::vector<uint64_t> values;
  std::vector<uint8_t> defined;

  Frame() = default;
  explicit Frame(size_t nvars) : values(nvars, 0), defined(nvars, 0) {}

  bool has(VarId id) const {
    return static_cast<size_t>(id) < defined.size() && defined[static_cast<size_t>(id)];
  }
  uint64_t get(VarId id) const {
    assert(has(id));
    return values[static_cast<size_t>(id)];
  }
  void set(VarId id, uint64_t v) {
    values.at(static_cast<size_t>(id)) = v;
    defined.at(static_cast<size_t>(id)) = 1;
  }
};

// Stable debug dump, one line per variable plus assumption/property lines.
// State lines follow the documented form:
//   state <name>[W] init=<K|nondet> next=<s-expression>
inline std::string dump(const TransitionSystem& ts) {
  std::ostringstream os;
  auto name_of = [&ts](VarId id) { return ts.var_name(id); };
  for (VarId id : ts.inputs)
    os << "input " << ts.var_name(id) << '[' << ts.var_width(id) << "]\n";
  for (const auto& s : ts.states) {
    os << "state " << ts.var_name(s.id) << '[' << ts.var_width(s.id)
       << "] init=";
    if (s.init)
      os << *s.init;
    else
      os << "nondet";
    os << " next=" << to_sexpr(s.next, name_of) << '\n';
  }
  for (const auto& a : ts.assumptions)
    os << "assume " << to_sexpr(a, name_of) << '\n';
  for (const auto& p : ts.properties)
    os << "prop " << p.name << ' ' << to_sexpr(p.expr, name_of) << '\n';
  return os.str();
}

}  // namespace kindi

#endif  // KINDI_TSYS_HPP_
