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

#ifndef GK_TERM_HPP
#define GK_TERM_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gk/type.hpp"

namespace gk {

// A nominal constant. There are infinitely many per type, indexed from 0.
struct Nominal {
  Type ty;
  int index = 0;

  bool operator==(const Nominal& o) const { return index == o.index && ty == o.ty; }
  bool operator!=(const Nominal& o) const { return !(*this == o); }
  bool operator<(const Nominal& o) const {
    if (index != o.index) return index < o.index;
    return ty < o.ty;
  }
  std::string str() const { return "n" + std::to_string(index); }
};

enum class TermKind { kVar, kConst, kNominal, kBound, kLam, kApp };

// Simply typed lambda terms with de Bruijn indices for bound variables.
// Eigenvariables (kVar) and constants carry their type; the binder name on
// kLam is a printing hint only and is ignored by equality.
class Term {
 public:
  Term() = default;

  static Term var(std::string name, Type ty);
  static Term cnst(std::string name, Type ty);
  static Term nominal(Nominal n);
  static Term nominal(Type ty, int index) { return nominal(Nominal{std::move(ty), index}); }
  static Term bound(int index);
  static Term lam(std::string hint, Type binder_ty, Term body);
  static Term app(Term fun, Term arg);
  static Term apps(Term fun, const std::vector<Term>& args);

  bool is_null() const { return node_ == nullptr; }
  TermKind kind() const;

  const std::string& name() const;   // kVar, kConst
  const Type& leaf_type() const;     // kVar, kConst, kNominal
  const Nominal& nominal_of() const; // kNominal
  int index() const;                 // kBound
  const std::string& hint() const;   // kLam
  const Type& binder_type() const;   // kLam
  Term body() const;                 // kLam
  Term fun() const;                  // kApp
  Term arg() const;                  // kApp

  // Spine view: head applied to arguments, outermost lambda-free.
  Term head() const;
  std::vector<Term> spine_args() const;

  // Structural equality; alpha-equivalence by de Bruijn representation.
  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// -- Typing --------------------------------------------------------------

// Full typecheck; env gives the types of enclosing binders, innermost last.
Type type_of(const Term& t, std::vector<Type> env = {});

// -- Normalization -------------------------------------------------------

// Shift free de Bruijn indices >= cutoff by d.
Term shift(const Term& t, int d, int cutoff = 0);

// Capture-correct instantiation of the outer binder of a lambda body.
Term open_body(const Term& body, const Term& arg);

// Beta-normal form (normal order; terminates on well-typed terms).
Term beta_normal(const Term& t);

// Beta-normal eta-long canonical form. All comparisons in the kernel are
// between terms in this form.
Term normalize(const Term& t);

// -- Free structure ------------------------------------------------------

std::set<Nominal> support(const Term& t);
std::map<std::string, Type> free_vars(const Term& t);
bool has_free_var(const Term& t, const std::string& name);
bool contains_const(const Term& t, const std::string& name);

// Replace every occurrence of constant `name` by `repl` (no binders in
// repl are captured; repl must be closed w.r.t. bound variables).
Term replace_const(const Term& t, const std::string& name, const Term& repl);

// Abstract the given leaves (vars or nominals) in order; result is
// lam(leaf1, ... lam(leafn, t')) with leaves replaced by bound indices.
Term abstract_leaves(const Term& t, const std::vector<Term>& leaves,
                     const std::vector<std::string>& hints = {});

// If t is an atom or an eta-expansion of one (lam xs. h xs with h not
// using the binders), return h shifted to the outer scope. Bound atoms are
// returned with their index relative to the original scope of t.
std::optional<Term> strip_eta_atom(const Term& t);

// Lowest-index nominal of type ty not present in avoid.
Nominal fresh_nominal(const Type& ty, const std::set<Nominal>& avoid);

// Fresh eigenvariable name based on stem, avoiding the given set.
std::string fresh_name(const std::string& stem, const std::set<std::string>& avoid);

}  // namespace gk

#endif  // GK_TERM_HPP
