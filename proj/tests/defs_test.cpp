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

#include "gk/defs.hpp"

#include "doctest.h"
#include "gk/error.hpp"
#include "gk/nabs.hpp"

using namespace gk;

namespace {
const Type i = Type::base("i");
}

TEST_CASE("level computation") {
  DefTable defs;
  // eq x x has level 0.
  Definition d;
  d.pred = "eqp";
  d.ty = Type::arrow({i, i}, Type::prop());
  Clause c;
  c.xs = {{"X", i}};
  Term X = Term::var("X", i);
  c.head_args = {X, X};
  c.body = f_top();
  d.clauses.push_back(c);
  defs.add(d);
  CHECK(defs.level("eqp") == 0);
  // neq x y := (eqp x y => false) has level 1.
  Definition n;
  n.pred = "neq";
  n.ty = Type::arrow({i, i}, Type::prop());
  Clause nc;
  nc.xs = {{"X", i}, {"Y", i}};
  Term Y = Term::var("Y", i);
  nc.head_args = {Term::var("X", i), Y};
  nc.body = normalize(
      f_imp(Term::apps(Term::cnst("eqp", n.ty), {Term::var("X", i), Y}), f_bot()));
  n.clauses.push_back(nc);
  defs.add(n);
  CHECK(defs.level("neq") == 1);
  // Recursive predicates sit one level above their own atoms.
  Definition r;
  r.pred = "nat";
  r.ty = Type::arrow(i, Type::prop());
  Clause z;
  z.head_args = {Term::cnst("z", i)};
  z.body = f_top();
  r.clauses.push_back(z);
  Clause sc;
  sc.xs = {{"N", i}};
  Term N = Term::var("N", i);
  sc.head_args = {Term::app(Term::cnst("s", Type::arrow(i, i)), N)};
  sc.body = normalize(Term::app(Term::cnst("nat", r.ty), N));
  r.clauses.push_back(sc);
  r.flavor = Flavor::Inductive;
  defs.add(r);
  CHECK(defs.level("nat") == 1);
  CHECK(defs.get("nat").recursive);
}

TEST_CASE("simple definitions translate to their body directly") {
  DefTable defs;
  Definition d;
  d.pred = "eqp";
  d.ty = Type::arrow({i, i}, Type::prop());
  Clause c;
  c.xs = {{"X", i}, {"Y", i}};
  c.head_args = {Term::var("X", i), Term::var("Y", i)};
  c.body = normalize(f_eq(Term::var("X", i), Term::var("Y", i)));
  d.clauses.push_back(c);
  defs.add(d);
  const Definition& got = defs.get("eqp");
  CHECK(got.head_const.is_null());
  Term a = Term::cnst("a", i), b = Term::cnst("b", i);
  CHECK(unfold_translated(got, {a, b}) == normalize(f_eq(a, b)));
}

TEST_CASE("pattern clauses translate through the tupling constant") {
  DefTable defs;
  // fr x y := nabla z. eq x z with head (fr Z Y), i.e. fresh-for.
  Definition d;
  d.pred = "fr";
  d.ty = Type::arrow({i, i}, Type::prop());
  Clause c;
  c.xs = {{"Y", i}};
  c.zs = {{"z", i}};
  c.head_args = {Term::var("z", i), Term::var("Y", i)};
  c.body = f_top();
  d.clauses.push_back(c);
  defs.add(d);
  const Definition& got = defs.get("fr");
  REQUIRE(!got.head_const.is_null());
  // clause_head abstracts the nabla variables.
  Term ch = got.clause_head(0);
  Type chty = type_of(ch);
  REQUIRE(chty.is_arrow());
  CHECK(chty.args().size() == 1);
  // Unfolding fr n0 c yields a formula containing the head constant.
  Term t = unfold_translated(got, {Term::nominal(i, 0), Term::cnst("c", i)});
  CHECK(contains_const(t, got.head_const.name()));
  // The degree 1 judgment (\z. #fr z Y) |> (#fr n0 c) has solution Y := c,
  // so the translated form captures the intended instances.
  NabsProblem pr;
  pr.sigma = {{"Y", i}};
  pr.lhs = ch;
  pr.rhs = normalize(
      Term::apps(got.head_const, {Term::nominal(i, 0), Term::cnst("c", i)}));
  pr.degree = 1;
  auto sols = csnas(pr);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].get("Y") == Term::cnst("c", i));
}

TEST_CASE("nabla variables may not occur in the body") {
  DefTable defs;
  Definition d;
  d.pred = "bad";
  d.ty = Type::arrow(i, Type::prop());
  Clause c;
  c.zs = {{"z", i}};
  c.head_args = {Term::var("z", i)};
  c.body = normalize(f_eq(Term::var("z", i), Term::var("z", i)));
  d.clauses.push_back(c);
  CHECK_THROWS_AS(defs.add(d), Error);
}

TEST_CASE("heads and bodies must be nominal free") {
  DefTable defs;
  Definition d;
  d.pred = "bad";
  d.ty = Type::arrow(i, Type::prop());
  Clause c;
  c.head_args = {Term::nominal(i, 0)};
  c.body = f_top();
  d.clauses.push_back(c);
  CHECK_THROWS_AS(defs.add(d), Error);
}

TEST_CASE("coinductive definitions reject nabla in heads") {
  DefTable defs;
  Definition d;
  d.pred = "co";
  d.ty = Type::arrow(i, Type::prop());
  d.flavor = Flavor::CoInductive;
  Clause c;
  c.zs = {{"z", i}};
  c.head_args = {Term::var("z", i)};
  c.body = f_top();
  d.clauses.push_back(c);
  CHECK_THROWS_AS(defs.add(d), Error);
}

TEST_CASE("unfold_with replaces the predicate by an invariant") {
  DefTable defs;
  Definition d;
  d.pred = "nat";
  d.ty = Type::arrow(i, Type::prop());
  d.flavor = Flavor::Inductive;
  Clause z;
  z.head_args = {Term::cnst("z", i)};
  z.body = f_top();
  d.clauses.push_back(z);
  Clause sc;
  sc.xs = {{"N", i}};
  sc.head_args = {Term::app(Term::cnst("s", Type::arrow(i, i)), Term::var("N", i))};
  sc.body = normalize(Term::app(Term::cnst("nat", d.ty), Term::var("N", i)));
  d.clauses.push_back(sc);
  defs.add(d);
  // B S z where S = \x. top unfolds with no residual nat atom.
  Term S = Term::lam("x", i, f_top());
  Term u = unfold_with(defs.get("nat"), S, {Term::cnst("z", i)});
  CHECK(!contains_const(u, "nat"));
}
