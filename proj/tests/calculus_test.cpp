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

#include "gk/calculus.hpp"

#include "doctest.h"
#include "gk/error.hpp"
#include "gk/nabs.hpp"

using namespace gk;

namespace {
const Type i = Type::base("i");
const Term pc = Term::cnst("p", Type::arrow(i, Type::prop()));
Term p(Term a) { return Term::app(pc, a); }

Rule mk(Rule::Tag t, int hyp = -1) {
  Rule r;
  r.tag = t;
  r.hyp = hyp;
  return r;
}
}  // namespace

TEST_CASE("identity and propositional rules") {
  DefTable defs;
  // |- p n0 => p n0
  Sequent s;
  s.goal = normalize(f_imp(p(Term::nominal(i, 0)), p(Term::nominal(i, 0))));
  auto prems = apply_rule(s, mk(Rule::Tag::ImpR), defs);
  REQUIRE(prems.size() == 1);
  CHECK(apply_rule(prems[0], mk(Rule::Tag::Id, 0), defs).empty());
  // id is modulo a permutation of nominals.
  Sequent s2;
  s2.hyps.push_back(normalize(p(Term::nominal(i, 3))));
  s2.goal = normalize(p(Term::nominal(i, 7)));
  CHECK(apply_rule(s2, mk(Rule::Tag::Id, 0), defs).empty());
}

TEST_CASE("quantifier raising over support") {
  DefTable defs;
  // |- forall x. x = n0 ... the fresh eigenvariable is raised over n0.
  Sequent s;
  Term x = Term::var("x", i);
  s.goal = normalize(f_quant(
      "forall",
      abstract_leaves(f_eq(x, Term::nominal(i, 0)), {x}, {"x"})));
  auto prems = apply_rule(s, mk(Rule::Tag::AllR), defs);
  REQUIRE(prems.size() == 1);
  REQUIRE(prems[0].sig.size() == 1);
  Type hty = prems[0].sig.begin()->second;
  CHECK(hty == Type::arrow(i, i));  // raised over one nominal
}

TEST_CASE("nabla introduces a fresh nominal") {
  DefTable defs;
  Sequent s;
  s.goal = normalize(f_nabla("x", i, p(Term::bound(0))));
  auto prems = apply_rule(s, mk(Rule::Tag::NablaR), defs);
  REQUIRE(prems.size() == 1);
  CHECK(prems[0].goal == normalize(p(Term::nominal(i, 0))));
}

TEST_CASE("nabsR decides the judgment") {
  DefTable defs;
  Sequent s;
  s.goal = normalize(f_nabs(Term::lam("x", i, Term::bound(0)), Term::nominal(i, 1)));
  CHECK(apply_rule(s, mk(Rule::Tag::NabsR), defs).empty());
  Sequent bad;
  bad.goal = normalize(f_eq(Term::nominal(i, 0), Term::nominal(i, 1)));
  CHECK_THROWS_AS(apply_rule(bad, mk(Rule::Tag::NabsR), defs), RuleError);
}

TEST_CASE("nabsL on an unsatisfiable equality closes the branch") {
  DefTable defs;
  Sequent s;
  s.hyps.push_back(normalize(f_eq(Term::nominal(i, 0), Term::nominal(i, 1))));
  s.goal = f_bot();
  auto prems = apply_rule(s, mk(Rule::Tag::NabsL, 0), defs);
  CHECK(prems.empty());
}

TEST_CASE("nabsL substitutes solutions everywhere") {
  DefTable defs;
  // Sigma = {X}; hyp X = c (a constant); goal p X.
  Sequent s;
  s.sig.emplace("X", i);
  Term X = Term::var("X", i);
  Term c = Term::cnst("c", i);
  s.hyps.push_back(normalize(f_eq(X, c)));
  s.goal = normalize(p(X));
  auto prems = apply_rule(s, mk(Rule::Tag::NabsL, 0), defs);
  REQUIRE(prems.size() == 1);
  CHECK(prems[0].goal == normalize(p(c)));
  CHECK(prems[0].sig.count("X") == 0);
}

namespace {
DefTable member_defs() {
  // member X (X :: L); member X (Y :: L) := member X L.
  DefTable defs;
  Type lst = Type::base("lst");
  Type mty = Type::arrow({i, lst}, Type::prop());
  Term cons = Term::cnst("cons", Type::arrow({i, lst}, lst));
  Definition d;
  d.pred = "member";
  d.ty = mty;
  d.flavor = Flavor::Inductive;
  {
    Clause c;
    c.xs = {{"X", i}, {"L", lst}};
    Term X = Term::var("X", i), L = Term::var("L", lst);
    c.head_args = {X, Term::apps(cons, {X, L})};
    c.body = f_top();
    d.clauses.push_back(c);
  }
  {
    Clause c;
    c.xs = {{"X", i}, {"Y", i}, {"L", lst}};
    Term X = Term::var("X", i), Y = Term::var("Y", i), L = Term::var("L", lst);
    c.head_args = {X, Term::apps(cons, {Y, L})};
    c.body = normalize(Term::apps(Term::cnst("member", mty), {X, L}));
    d.clauses.push_back(c);
  }
  defs.add(d);
  return defs;
}
}  // namespace

TEST_CASE("defRp instantiates a clause against the goal") {
  DefTable defs = member_defs();
  Type lst = Type::base("lst");
  Term cons = Term::cnst("cons", Type::arrow({i, lst}, lst));
  Term nil = Term::cnst("nil", lst);
  Term a = Term::cnst("a", i), b = Term::cnst("b", i);
  Term mem = Term::cnst("member", Type::arrow({i, lst}, Type::prop()));
  // Goal: member a (b :: a :: nil) via the second clause.
  Sequent s;
  Term abnil = Term::apps(cons, {b, Term::apps(cons, {a, nil})});
  s.goal = normalize(Term::apps(mem, {a, abnil}));
  auto cands = defrp_candidates(s, 1, defs);
  REQUIRE(cands.size() == 1);
  Rule r = mk(Rule::Tag::DefRp);
  r.clause = 1;
  r.subst = cands[0];
  auto prems = apply_rule(s, r, defs);
  REQUIRE(prems.size() == 1);
  CHECK(prems[0].goal ==
        normalize(Term::apps(mem, {a, Term::apps(cons, {a, nil})})));
  // The first clause does not match this goal (a != b).
  CHECK(defrp_candidates(s, 0, defs).empty());
}

TEST_CASE("defLp cases on a hypothesis") {
  DefTable defs = member_defs();
  Type lst = Type::base("lst");
  Term cons = Term::cnst("cons", Type::arrow({i, lst}, lst));
  Term nil = Term::cnst("nil", lst);
  Term b = Term::cnst("b", i);
  Term mem = Term::cnst("member", Type::arrow({i, lst}, Type::prop()));
  // X : member X (b :: nil) |- X = b. Casing gives one viable branch.
  Sequent s;
  s.sig.emplace("X", i);
  Term X = Term::var("X", i);
  s.hyps.push_back(normalize(Term::apps(mem, {X, Term::apps(cons, {b, nil})})));
  s.goal = normalize(f_eq(X, b));
  auto prems = apply_rule(s, mk(Rule::Tag::DefLp, 0), defs);
  // First clause: X := b (goal b = b). Second: member X nil remains.
  REQUIRE(prems.size() == 2);
  CHECK(apply_rule(prems[0], mk(Rule::Tag::NabsR), defs).empty());
  // The leftover branch closes by casing on member X nil (no clauses fit).
  int memh = -1;
  for (size_t k = 0; k < prems[1].hyps.size(); ++k)
    if (classify(prems[1].hyps[k]).kind == FKind::Atom) memh = static_cast<int>(k);
  REQUIRE(memh >= 0);
  CHECK(apply_rule(prems[1], mk(Rule::Tag::DefLp, memh), defs).empty());
}

TEST_CASE("IL on the translated form refutes p := p") {
  DefTable defs;
  Definition d;
  d.pred = "q";
  d.ty = Type::prop();
  d.flavor = Flavor::Inductive;
  Clause c;
  c.body = Term::cnst("q", Type::prop());
  d.clauses.push_back(c);
  defs.add(d);
  // q |- false with invariant false.
  Sequent s;
  s.hyps.push_back(Term::cnst("q", Type::prop()));
  s.goal = f_bot();
  Rule r = mk(Rule::Tag::IL, 0);
  r.witness = f_bot();
  auto prems = apply_rule(s, r, defs);
  REQUIRE(prems.size() == 2);
  // Premise 1: false |- false. Premise 2: false |- false.
  CHECK(apply_rule(prems[0], mk(Rule::Tag::BotL, 0), defs).empty());
  CHECK(apply_rule(prems[1], mk(Rule::Tag::BotL, 0), defs).empty());
}

TEST_CASE("CIR proves q for q := q coinductively") {
  DefTable defs;
  Definition d;
  d.pred = "q";
  d.ty = Type::prop();
  d.flavor = Flavor::CoInductive;
  Clause c;
  c.body = Term::cnst("q", Type::prop());
  d.clauses.push_back(c);
  defs.add(d);
  Sequent s;
  s.goal = Term::cnst("q", Type::prop());
  Rule r = mk(Rule::Tag::CIR);
  r.witness = f_top();
  auto prems = apply_rule(s, r, defs);
  REQUIRE(prems.size() == 2);
  CHECK(apply_rule(prems[0], mk(Rule::Tag::TopR), defs).empty());
  CHECK(apply_rule(prems[1], mk(Rule::Tag::TopR), defs).empty());
}

TEST_CASE("stratification rejections") {
  DefTable defs;
  // a := a => false is rejected by the monotone bound.
  Definition d;
  d.pred = "a";
  d.ty = Type::prop();
  d.flavor = Flavor::Plain;
  Clause c;
  c.body = f_imp(Term::cnst("a", Type::prop()), f_bot());
  d.clauses.push_back(c);
  CHECK_THROWS_AS(defs.add(d), StratificationError);
  // Mutual recursion through an abstract predicate reference.
  DefTable defs2;
  Definition d1;
  d1.pred = "r";
  d1.ty = Type::prop();
  Clause c1;
  c1.body = Term::cnst("s", Type::prop());
  d1.clauses.push_back(c1);
  defs2.add(d1);
  Definition d2;
  d2.pred = "s";
  d2.ty = Type::prop();
  Clause c2;
  c2.body = Term::cnst("r", Type::prop());
  d2.clauses.push_back(c2);
  CHECK_THROWS_AS(defs2.add(d2), StratificationError);
}
