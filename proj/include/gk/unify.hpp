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

#ifndef GK_UNIFY_HPP
#define GK_UNIFY_HPP

#include <optional>
#include <set>
#include <string>

#include "gk/subst.hpp"
#include "gk/term.hpp"

namespace gk {

// Unification restricted to the higher-order pattern fragment: flexible
// heads may only be applied to distinct atoms (nominal constants or
// binder-bound variables). Within that fragment unification is decidable
// and unitary; outside it NonPatternError is thrown.
//
// Variables named in `flex` are unifiable; every other eigenvariable and
// all constants are rigid. Returns the most general unifier restricted to
// `flex` (ranges may mention fresh helper variables, prefixed "#v"), or
// nullopt when no unifier exists.
std::optional<Subst> pattern_unify(const Term& lhs, const Term& rhs,
                                   const std::set<std::string>& flex);

}  // namespace gk

#endif  // GK_UNIFY_HPP
