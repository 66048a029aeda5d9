// Copyright 2026 The gkernel Authors
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

#ifndef GK_DEFS_HPP
#define GK_DEFS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gk/formula.hpp"
#include "gk/term.hpp"

namespace gk {

enum class Flavor { Plain, Inductive, CoInductive };

// One pattern clause: forall xs, (nabla zs, p head_args) := body.
// head_args and body are nominal-free; body's free variables are within
// xs; zs occur in head_args only; p occurs in body as a constant.
struct Clause {
  std::vector<std::pair<std::string, Type>> xs;
  std::vector<std::pair<std::string, Type>> zs;
  std::vector<Term> head_args;
  Term body;
};

struct Definition {
  std::string pred;
  Type ty;
  Flavor flavor = Flavor::Plain;
  std::vector<Clause> clauses;
  int level = 0;
  bool recursive = false;

  // Pattern-free single-clause form: lam ys. disjunction of clauses. When
  // the definition is already a single clause over distinct variable
  // patterns with no nabla prefix, this is just lam xs. body.
  Term translated;
  // The tupling constant used by the translation (null term when the
  // simplification above applied).
  Term head_const;

  // Head term lam zs. p' head_args used by the clause-based rules, with
  // p' the tupling constant (or p itself when none is needed).
  Term clause_head(int i) const;
};

class DefTable {
 public:
  bool defined(const std::string& p) const { return map_.count(p) > 0; }
  const Definition& get(const std::string& p) const;
  int level(const std::string& p) const;

  // Validates and stratifies the definition, then adds it. Defining a
  // predicate that an earlier definition already referenced would close a
  // mutual recursion, which is rejected.
  void add(Definition def);

 private:
  std::map<std::string, Definition> map_;
  // Undefined predicate constants referenced by earlier bodies.
  std::map<std::string, std::string> pending_;  // pred -> referencing def
};

// Instantiate the translated form at the given arguments.
Term unfold_translated(const Definition& def, const std::vector<Term>& args);

// Translated body with the predicate constant replaced by S, then applied
// to args; used by the (co)induction rules.
Term unfold_with(const Definition& def, const Term& s,
                 const std::vector<Term>& args);

}  // namespace gk

#endif  // GK_DEFS_HPP
