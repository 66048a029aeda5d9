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

#include "gk/parser.hpp"

#include "doctest.h"
#include "gk/error.hpp"
#include "gk/printer.hpp"

using namespace gk;

namespace {

SymTab base_tab() {
  SymTab tab;
  Parser p(
      "Kind i, lst.\n"
      "Type c, d i.\n"
      "Type g i -> i.\n"
      "Type f i -> i -> i.\n"
      "Type nil lst.\n"
      "Type cons i -> lst -> lst.\n");
  p.parse_kind(tab);
  p.parse_typedecl(tab);
  p.parse_typedecl(tab);
  p.parse_typedecl(tab);
  p.parse_typedecl(tab);
  p.parse_typedecl(tab);
  return tab;
}

Term parse1(const SymTab& tab, const std::string& s,
            const std::map<std::string, Type>& scope = {}) {
  Parser p(s + ".");
  return p.parse_standalone_term(tab, scope);
}

}  // namespace

TEST_CASE("types and declarations") {
  SymTab tab = base_tab();
  CHECK(tab.consts.at("f") ==
        Type::arrow({Type::base("i"), Type::base("i")}, Type::base("i")));
  CHECK(tab.consts.at("c") == Type::base("i"));
  // Unknown sorts are rejected.
  SymTab t2;
  Parser bad("Type x foo.");
  CHECK_THROWS_AS(bad.parse_typedecl(t2), ParseError);
}

TEST_CASE("precedence and connectives") {
  SymTab tab = base_tab();
  Term t = parse1(tab, "c = d \\/ d = c /\\ false => true");
  // => binds loosest, /\ tighter than \/.
  Term want = f_imp(f_or(f_eq(Term::cnst("c", Type::base("i")),
                              Term::cnst("d", Type::base("i"))),
                         f_and(f_eq(Term::cnst("d", Type::base("i")),
                                    Term::cnst("c", Type::base("i"))),
                               f_bot())),
                    f_top());
  CHECK(t == normalize(want));
}

TEST_CASE("quantifiers infer binder types") {
  SymTab tab = base_tab();
  Term t = parse1(tab, "forall x y, f x y = f y x");
  FView v = classify(t);
  REQUIRE(v.kind == FKind::All);
  CHECK(v.qty == Type::base("i"));
  // Annotated binders parse too.
  Term t2 = parse1(tab, "forall (x:i) (y:i), f x y = f y x");
  CHECK(t == t2);
}

TEST_CASE("abstractions and nominal literals") {
  SymTab tab = base_tab();
  Term t = parse1(tab, "(x\\ g x) = ((y:i)\\ g y)");
  FView v = classify(t);
  CHECK(v.kind == FKind::Nabs);
  CHECK(v.degree == 0);
  CHECK(v.a == v.b);
  Term u = parse1(tab, "((x:i)\\ x) |> n3");
  FView w = classify(u);
  CHECK(w.degree == 1);
  CHECK(w.b == normalize(Term::nominal(Type::base("i"), 3)));
}

TEST_CASE("degree is inferred from the abstraction type") {
  SymTab tab = base_tab();
  Term u = parse1(tab, "(x\\ y\\ f x y) |> f c d");
  CHECK(classify(u).degree == 2);
}

TEST_CASE("unbound capitals are rejected in theorems") {
  SymTab tab = base_tab();
  Parser p("Theorem bad : X = X.");
  CHECK_THROWS_AS(p.parse_theorem(tab), ParseError);
}

TEST_CASE("definitions with patterns and nabla") {
  SymTab tab = base_tab();
  Parser p(
      "Define member : i -> lst -> prop by\n"
      "  member X (cons X L);\n"
      "  member X (cons Y L) := member X L.\n"
      "Define fresh : i -> i -> prop by\n"
      "  nabla x, fresh x E.\n");
  Definition m = p.parse_define(tab);
  CHECK(m.pred == "member");
  CHECK(m.flavor == Flavor::Inductive);
  REQUIRE(m.clauses.size() == 2);
  CHECK(m.clauses[0].xs.size() == 2);
  CHECK(m.clauses[1].body == normalize(Term::apps(
            Term::cnst("member", m.ty),
            {Term::var("X", Type::base("i")), Term::var("L", Type::base("lst"))})));
  Definition fr = p.parse_define(tab);
  REQUIRE(fr.clauses.size() == 1);
  REQUIRE(fr.clauses[0].zs.size() == 1);
  CHECK(fr.clauses[0].zs[0].second == Type::base("i"));
  CHECK(fr.clauses[0].xs.size() == 1);
  // Both predicate constants were registered.
  CHECK(tab.consts.count("member") == 1);
  CHECK(tab.consts.count("fresh") == 1);
}

TEST_CASE("theorems and tactic scripts") {
  SymTab tab = base_tab();
  Parser p(
      "Theorem refl : forall (x:i), x = x.\n"
      "intros. search.\n"
      "apply H1 with c, g c to H2 H3.\n"
      "induction H2 with (x:i)\\ true.\n"
      "exists f c d. case H4. search 12. qed.\n");
  auto [name, f] = p.parse_theorem(tab);
  CHECK(name == "refl");
  CHECK(classify(f).kind == FKind::All);
  std::map<std::string, Type> scope;
  CHECK(p.parse_tactic(tab, scope).name == "intros");
  TacticCmd s = p.parse_tactic(tab, scope);
  CHECK(s.name == "search");
  CHECK(s.num == -1);
  TacticCmd a = p.parse_tactic(tab, scope);
  CHECK(a.labels == std::vector<std::string>{"H1", "H2", "H3"});
  CHECK(a.terms.size() == 2);
  TacticCmd ind = p.parse_tactic(tab, scope);
  CHECK(ind.name == "induction");
  CHECK(ind.terms.size() == 1);
  TacticCmd ex = p.parse_tactic(tab, scope);
  CHECK(ex.terms[0] == normalize(Term::apps(
            tab.consts.count("f") ? Term::cnst("f", tab.consts.at("f")) : Term(),
            {Term::cnst("c", Type::base("i")), Term::cnst("d", Type::base("i"))})));
  CHECK(p.parse_tactic(tab, scope).name == "case");
  TacticCmd se = p.parse_tactic(tab, scope);
  CHECK(se.num == 12);
  CHECK(p.parse_tactic(tab, scope).name == "qed");
  CHECK(p.at_end());
}

TEST_CASE("tactic terms see the goal signature") {
  SymTab tab = base_tab();
  std::map<std::string, Type> scope{{"h1", Type::arrow(Type::base("i"), Type::base("i"))}};
  Term t = parse1(tab, "h1 c", scope);
  CHECK(t == normalize(Term::app(
            Term::var("h1", Type::arrow(Type::base("i"), Type::base("i"))),
            Term::cnst("c", Type::base("i")))));
}

TEST_CASE("printing round trips") {
  SymTab tab = base_tab();
  std::vector<std::string> cases = {
      "forall (x:i), x = x",
      "forall x y, f x y = f y x => exists z, g z = c",
      "nabla x, (y\\ f x y) |> f x c \\/ true",
      "c = d /\\ (c = d => false)",
      "forall (h:i -> i), h c = g c",
      "(x\\ g x) |> g n0 /\\ f n1 n1 = c",
  };
  for (const std::string& s : cases) {
    CAPTURE(s);
    Term t = parse1(tab, s);
    Term u = parse1(tab, print_term(t));
    CHECK(t == u);
  }
}

TEST_CASE("parse errors carry positions") {
  SymTab tab = base_tab();
  try {
    parse1(tab, "forall x, (broken");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(":1:") != std::string::npos);
  }
}
