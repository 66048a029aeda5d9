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

#include "gk/formula.hpp"

#include <algorithm>

#include "gk/error.hpp"

namespace gk {

namespace {
const Type& prop() {
  static const Type p = Type::prop();
  return p;
}

Term binop(const std::string& name, Term a, Term b) {
  Term c = Term::cnst(name, Type::arrow({prop(), prop()}, prop()));
  return Term::apps(c, {std::move(a), std::move(b)});
}
}  // namespace

Term f_top() { return Term::cnst("true", prop()); }
Term f_bot() { return Term::cnst("false", prop()); }
Term f_and(Term a, Term b) { return binop("/\\", std::move(a), std::move(b)); }
Term f_or(Term a, Term b) { return binop("\\/", std::move(a), std::move(b)); }
Term f_imp(Term a, Term b) { return binop("=>", std::move(a), std::move(b)); }

Term f_quant(const std::string& q, Term abs) {
  Type aty = type_of(abs);
  if (!aty.is_arrow() || !(aty.result() == prop()))
    throw TypeError("quantifier body must map to prop");
  Term c = Term::cnst(q, Type::arrow(aty, prop()));
  return Term::app(c, std::move(abs));
}

Term f_all(const std::string& hint, const Type& ty, Term body) {
  return f_quant("forall", Term::lam(hint, ty, std::move(body)));
}
Term f_ex(const std::string& hint, const Type& ty, Term body) {
  return f_quant("exists", Term::lam(hint, ty, std::move(body)));
}
Term f_nabla(const std::string& hint, const Type& ty, Term body) {
  return f_quant("nabla", Term::lam(hint, ty, std::move(body)));
}

Term f_nabs(Term s, Term t) {
  Type sty = type_of(s);
  Type tty = type_of(t);
  Term c = Term::cnst("|>", Type::arrow({sty, tty}, prop()));
  return Term::apps(c, {std::move(s), std::move(t)});
}

Term f_eq(Term s, Term t) {
  if (!(type_of(s) == type_of(t))) throw TypeError("equality at unequal types");
  return f_nabs(std::move(s), std::move(t));
}

bool is_logical_const(const std::string& name) {
  static const std::vector<std::string> names{
      "true", "false", "/\\", "\\/", "=>", "forall", "exists", "nabla", "|>"};
  return std::find(names.begin(), names.end(), name) != names.end();
}

namespace {

int nabs_degree(const Type& cty) {
  // cty = sty -> tty -> prop
  Type sty = cty.arg();
  Type tty = cty.result().arg();
  int n = 0;
  Type cur = sty;
  while (!(cur == tty)) {
    if (!cur.is_arrow()) throw TypeError("invalid nominal abstraction types");
    cur = cur.result();
    ++n;
  }
  return n;
}

}  // namespace

FView classify(const Term& f) {
  FView v;
  Term h = f.head();
  auto args = f.spine_args();
  if (h.kind() == TermKind::kConst) {
    const std::string& n = h.name();
    if (n == "true" && args.empty()) { v.kind = FKind::Top; return v; }
    if (n == "false" && args.empty()) { v.kind = FKind::Bot; return v; }
    if ((n == "/\\" || n == "\\/" || n == "=>") && args.size() == 2) {
      v.kind = n == "/\\" ? FKind::And : n == "\\/" ? FKind::Or : FKind::Imp;
      v.a = args[0];
      v.b = args[1];
      return v;
    }
    if ((n == "forall" || n == "exists" || n == "nabla") && args.size() == 1) {
      v.kind = n == "forall" ? FKind::All : n == "exists" ? FKind::Ex : FKind::Nabla;
      v.abs = args[0];
      v.qty = h.leaf_type().arg().arg();
      return v;
    }
    if (n == "|>" && args.size() == 2) {
      v.kind = FKind::Nabs;
      v.a = args[0];
      v.b = args[1];
      v.degree = nabs_degree(h.leaf_type());
      return v;
    }
  }
  v.kind = FKind::Atom;
  v.pred = h;
  v.args = args;
  return v;
}

int lvl(const Term& f, const std::function<int(const std::string&)>& pred_lvl) {
  FView v = classify(f);
  switch (v.kind) {
    case FKind::Top:
    case FKind::Bot:
    case FKind::Nabs:
      return 0;
    case FKind::And:
    case FKind::Or:
      return std::max(lvl(v.a, pred_lvl), lvl(v.b, pred_lvl));
    case FKind::Imp:
      return std::max(lvl(v.a, pred_lvl) + 1, lvl(v.b, pred_lvl));
    case FKind::All:
    case FKind::Ex:
    case FKind::Nabla: {
      // Quantifiers are transparent; enter the abstraction.
      Term inner = v.abs;
      while (inner.kind() == TermKind::kLam) inner = inner.body();
      return lvl(inner, pred_lvl);
    }
    case FKind::Atom:
      if (v.pred.kind() == TermKind::kConst) return pred_lvl(v.pred.name());
      return 0;
  }
  return 0;
}

namespace {

void check_rec(const Term& f) {
  FView v = classify(f);
  switch (v.kind) {
    case FKind::Top:
    case FKind::Bot:
      return;
    case FKind::And:
    case FKind::Or:
    case FKind::Imp:
      check_rec(v.a);
      check_rec(v.b);
      return;
    case FKind::All:
    case FKind::Ex:
    case FKind::Nabla:
      if (v.qty.contains_prop())
        throw TypeError("quantified variable type mentions prop");
      check_rec(v.abs.body());
      return;
    case FKind::Nabs:
      return;  // degree already validated by classify
    case FKind::Atom:
      // Prop-free argument types are enforced when constants are declared.
      return;
  }
}

}  // namespace

void check_formula(const Term& f) {
  if (!(type_of(f) == Type::prop())) throw TypeError("formula is not of type prop");
  check_rec(normalize(f));
}

}  // namespace gk
