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

#ifndef GK_FORMULA_HPP
#define GK_FORMULA_HPP

#include <functional>
#include <string>
#include <vector>

#include "gk/term.hpp"

namespace gk {

// Formulas are terms of type prop built from reserved logical constants.
// Quantifiers take an abstraction; the nominal abstraction constant is
// typed per operand types, its degree recoverable from them.

Term f_top();
Term f_bot();
Term f_and(Term a, Term b);
Term f_or(Term a, Term b);
Term f_imp(Term a, Term b);
// body has bound(0) for the quantified variable.
Term f_all(const std::string& hint, const Type& ty, Term body);
Term f_ex(const std::string& hint, const Type& ty, Term body);
Term f_nabla(const std::string& hint, const Type& ty, Term body);
// Quantifier applied to an existing abstraction.
Term f_quant(const std::string& q, Term abs);
Term f_nabs(Term s, Term t);
Term f_eq(Term s, Term t);  // degree-0 nominal abstraction

bool is_logical_const(const std::string& name);

enum class FKind { Top, Bot, And, Or, Imp, All, Ex, Nabla, Nabs, Atom };

struct FView {
  FKind kind;
  Term a, b;               // binary connectives; Nabs: a |> b
  Type qty;                // quantifier variable type
  Term abs;                // quantifier body abstraction (lam)
  int degree = 0;          // Nabs
  Term pred;               // Atom: head constant or variable
  std::vector<Term> args;  // Atom arguments
};

// Classify a normalized prop term.
FView classify(const Term& f);

// The stratification level of a formula; pred_lvl gives the level of
// defined predicate constants (0 for anything else).
int lvl(const Term& f, const std::function<int(const std::string&)>& pred_lvl);

// Checks: type prop, no prop in quantifier variable types, degrees valid.
void check_formula(const Term& f);

}  // namespace gk

#endif  // GK_FORMULA_HPP
