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

#ifndef GK_PERM_HPP
#define GK_PERM_HPP

#include <map>
#include <optional>

#include "gk/term.hpp"

namespace gk {

// A type-preserving permutation of nominal constants with finite domain;
// nominals outside the stored map are fixed.
class Perm {
 public:
  Perm() = default;

  // Extend with n1 <-> unchanged mapping n1 -> n2. Returns false if this
  // would break injectivity or type preservation.
  bool extend(const Nominal& n1, const Nominal& n2);

  // Swap two nominals of the same type (always a valid extension pattern).
  void swap(const Nominal& n1, const Nominal& n2);

  Nominal apply(const Nominal& n) const;
  Perm inverse() const;

  bool is_identity() const;
  const std::map<Nominal, Nominal>& mapping() const { return fwd_; }

 private:
  std::map<Nominal, Nominal> fwd_;
  std::map<Nominal, Nominal> bwd_;
};

// Apply a permutation to every nominal in a term.
Term apply_perm(const Perm& p, const Term& t);

// If t and u are equal up to a permutation of nominals, return a witness
// permutation p with apply_perm(p, t) == u. Terms must be normalized.
std::optional<Perm> perm_equiv(const Term& t, const Term& u);

}  // namespace gk

#endif  // GK_PERM_HPP
