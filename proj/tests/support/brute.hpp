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

#ifndef GK_TESTS_BRUTE_HPP
#define GK_TESTS_BRUTE_HPP

#include <vector>

#include "gk/nabs.hpp"

namespace gk::testing {

// Every term of the given type over the shared signature, nominals n0..nk
// and the enclosing binders, up to the given applicative depth.
std::vector<Term> enumerate_terms(const Type& ty, int depth, int max_nominal,
                                  std::vector<Term> atoms = {});

// Exhaustive solver: tries every assignment of enumerated ground terms to
// the signature variables and keeps the ones that solve the problem.
// Independent of the pattern unifier by construction.
std::vector<Subst> brute_force_csnas(const NabsProblem& p, int depth,
                                     int max_nominal);

}  // namespace gk::testing

#endif  // GK_TESTS_BRUTE_HPP
