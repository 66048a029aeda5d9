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

#ifndef GK_NABS_HPP
#define GK_NABS_HPP

#include <map>
#include <vector>

#include "gk/subst.hpp"
#include "gk/term.hpp"

namespace gk {

// A nominal abstraction judgment s |> t of degree n: s has n more
// abstractions than t. sigma lists the eigenvariables that a solver may
// instantiate, with their types.
struct NabsProblem {
  std::map<std::string, Type> sigma;
  Term lhs;
  Term rhs;
  int degree = 0;
};

// Decide whether s |> t holds: s converts to lam c1..cn. t for distinct
// nominals ci not in the support of s.
bool nabs_holds(const Term& s, const Term& t, int degree);

// theta solves the problem when (s |> t) nca-instantiated by theta holds.
bool is_solution(const Subst& theta, const NabsProblem& p);

// A complete set of nominal abstraction solutions. Every solution of the
// problem is less general than some returned substitution. Throws
// NonPatternError if a generated unification problem leaves the pattern
// fragment.
std::vector<Subst> csnas(const NabsProblem& p);

}  // namespace gk

#endif  // GK_NABS_HPP
