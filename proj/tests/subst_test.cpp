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

#include "gk/subst.hpp"

#include "doctest.h"
#include "gk/error.hpp"

using namespace gk;

namespace {
const Type i = Type::base("i");
const Term n0 = Term::nominal(i, 0);
const Term n1 = Term::nominal(i, 1);
const Term n2 = Term::nominal(i, 2);
const Term fc = Term::cnst("f", Type::arrow({i, i}, i));
Term f(Term a, Term b) { return Term::apps(fc, {a, b}); }
}  // namespace

TEST_CASE("identity bindings are dropped") {
  Subst s;
  s.bind("x", Term::var("x", i));
  CHECK(s.empty());
  s.bind("x", n0);
  s.bind("x", Term::var("x", i));
  CHECK(s.empty());
}

TEST_CASE("ordinary vs nominal-capture-avoiding application") {
  Subst theta;
  theta.bind("x", n0);
  Term t = f(Term::var("x", i), n0);
  CHECK(ordinary_apply(theta, t) == f(n0, n0));
  // nca renames t's n0 away from supp(theta) first.
  CHECK(nca_apply(theta, t) == f(n0, n1));
  // No clash: nca equals ordinary application.
  Term u = f(Term::var("x", i), n1);
  CHECK(nca_apply(theta, u) == ordinary_apply(theta, u));
}

TEST_CASE("nca composition example") {
  // {n0/x} . {f y' n0 / y} freshens the lhs range away from n0.
  Subst theta, rho;
  theta.bind("x", n0);
  rho.bind("y", f(Term::var("y'", i), n0));
  Subst c = nca_compose(theta, rho);
  CHECK(c.get("x") == n1);
  CHECK(c.get("y") == f(Term::var("y'", i), n0));
}

TEST_CASE("less_general basics") {
  std::map<std::string, Type> sigma{{"x", i}, {"y", i}};
  Subst empty;
  Subst rho;
  rho.bind("x", n0);
  // Any rho is below the identity.
  CHECK(less_general(rho, empty, sigma));
  // The identity is not below a ground binding.
  CHECK(!less_general(empty, rho, sigma));
  // Reflexivity.
  CHECK(less_general(rho, rho, sigma));
}

TEST_CASE("less_general respects variable structure") {
  std::map<std::string, Type> sigma{{"x", i}, {"y", i}};
  Subst theta;  // x -> f z z'
  theta.bind("x", f(Term::var("z", i), Term::var("z'", i)));
  Subst rho;  // x -> f n0 n1
  rho.bind("x", f(n0, n1));
  CHECK(less_general(rho, theta, sigma));
  Subst rho2;  // x -> n0 does not match f _ _
  rho2.bind("x", n0);
  CHECK(!less_general(rho2, theta, sigma));
}

TEST_CASE("less_general is equivariant on the target") {
  std::map<std::string, Type> sigma{{"x", i}};
  Subst theta;
  theta.bind("x", n0);
  Subst rho;
  rho.bind("x", n2);
  // Differ only by a permutation of nominals.
  CHECK(less_general(rho, theta, sigma));
  CHECK(less_general(theta, rho, sigma));
}

TEST_CASE("less_general freshness condition") {
  // theta = {n0/x}; rho = {n0/x, n0/y}. After matching x, pi maps n0 to
  // n0; the witness for y would need n0, violating the side condition.
  std::map<std::string, Type> sigma{{"x", i}, {"y", i}};
  Subst theta;
  theta.bind("x", n0);
  Subst rho;
  rho.bind("x", n0);
  rho.bind("y", n0);
  CHECK(!less_general(rho, theta, sigma));
  // But mapping y to a different nominal is fine.
  Subst rho2;
  rho2.bind("x", n0);
  rho2.bind("y", n1);
  CHECK(less_general(rho2, theta, sigma));
}
