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

#ifndef GK_SUBST_HPP
#define GK_SUBST_HPP

#include <map>
#include <set>
#include <string>

#include "gk/perm.hpp"
#include "gk/term.hpp"

namespace gk {

// A simultaneous substitution of terms for eigenvariables. Identity
// bindings are dropped on insertion so maps are canonical.
class Subst {
 public:
  Subst() = default;

  void bind(const std::string& name, Term t);
  bool binds(const std::string& name) const { return map_.count(name) > 0; }
  const Term& get(const std::string& name) const { return map_.at(name); }
  const std::map<std::string, Term>& mapping() const { return map_; }
  bool empty() const { return map_.empty(); }

  std::set<std::string> domain() const;
  // Union of the supports of all range terms.
  std::set<Nominal> range_support() const;
  // Free eigenvariables occurring in range terms.
  std::map<std::string, Type> range_vars() const;

 private:
  std::map<std::string, Term> map_;
};

// Ordinary capture-avoiding application t[theta]; result normalized.
Term ordinary_apply(const Subst& theta, const Term& t);

// Nominal-capture-avoiding application: first rename the nominals of t
// that clash with supp(theta) via a permutation, then apply ordinarily.
Term nca_apply(const Subst& theta, const Term& t);

// Apply a permutation to a substitution's range.
Subst perm_subst(const Perm& p, const Subst& theta);

// Nominal-capture-avoiding composition theta . rho: freshen theta's range
// nominals away from supp(rho), then compose ordinarily. Applying the
// result equals applying theta (nca) then rho (nca) on nominal-clean data.
Subst nca_compose(const Subst& theta, const Subst& rho);

// Restriction of theta to the variables in sigma (theta "raised" to a
// signature): variables of sigma missing from theta map to themselves,
// which the canonical map drops, so this is a plain domain restriction.
Subst restrict_to(const Subst& theta, const std::set<std::string>& sigma);

// The generality preorder on substitutions relative to signature sigma:
// rho <= theta iff some sigma' makes rho's action on sigma equal (up to
// permutation of nominals) to theta's action followed by sigma', with the
// usual freshness side condition on the composition. sigma maps each
// signature variable to its type. Throws NonPatternError when the
// underlying matching problem leaves the decidable fragment.
bool less_general(const Subst& rho, const Subst& theta,
                  const std::map<std::string, Type>& sigma);

}  // namespace gk

#endif  // GK_SUBST_HPP
