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

#include <algorithm>

#include "gk/error.hpp"
#include "gk/nabs.hpp"

namespace gk {

const char* rule_tag_name(Rule::Tag t) {
  switch (t) {
    case Rule::Tag::Id: return "id";
    case Rule::Tag::Cut: return "cut";
    case Rule::Tag::CL: return "cL";
    case Rule::Tag::BotL: return "botL";
    case Rule::Tag::TopR: return "topR";
    case Rule::Tag::AndL: return "andL";
    case Rule::Tag::AndR: return "andR";
    case Rule::Tag::OrL: return "orL";
    case Rule::Tag::OrR: return "orR";
    case Rule::Tag::ImpL: return "impL";
    case Rule::Tag::ImpR: return "impR";
    case Rule::Tag::AllL: return "allL";
    case Rule::Tag::AllR: return "allR";
    case Rule::Tag::ExL: return "exL";
    case Rule::Tag::ExR: return "exR";
    case Rule::Tag::NablaL: return "nablaL";
    case Rule::Tag::NablaR: return "nablaR";
    case Rule::Tag::NabsR: return "nabsR";
    case Rule::Tag::NabsL: return "nabsL";
    case Rule::Tag::DefR: return "defR";
    case Rule::Tag::DefL: return "defL";
    case Rule::Tag::DefRp: return "defRp";
    case Rule::Tag::DefLp: return "defLp";
    case Rule::Tag::IL: return "IL";
    case Rule::Tag::ILp: return "ILp";
    case Rule::Tag::CIR: return "CIR";
    case Rule::Tag::Lemma: return "lemma";
  }
  return "?";
}

namespace {

const Term& hyp_at(const Sequent& seq, int h) {
  if (h < 0 || h >= static_cast<int>(seq.hyps.size()))
    throw RuleError("no such hypothesis");
  return seq.hyps[h];
}

Sequent without_hyp(const Sequent& seq, int h) {
  Sequent out = seq;
  out.hyps.erase(out.hyps.begin() + h);
  return out;
}

Sequent replace_hyp(const Sequent& seq, int h, Term f) {
  Sequent out = seq;
  out.hyps[h] = std::move(f);
  return out;
}

// Check that t is a legal witness of type ty in signature sig: well typed,
// eigenvariables within sig, no prop inside.
void check_witness(const Sequent& seq, const Term& t, const Type& ty) {
  Type got = type_of(t);
  if (!(got == ty))
    throw RuleError("witness has type " + got.str() + ", expected " + ty.str());
  if (ty.contains_prop()) throw RuleError("witness type mentions prop");
  for (const auto& [v, vt] : free_vars(t)) {
    auto it = seq.sig.find(v);
    if (it == seq.sig.end())
      throw RuleError("witness mentions unknown variable " + v);
    if (!(it->second == vt))
      throw RuleError("witness uses " + v + " at the wrong type");
  }
}

// Raising for AllR/ExL: a fresh eigenvariable applied to the support of
// the abstraction.
std::pair<std::string, Term> raise_fresh(Sequent& seq, const Term& abs,
                                         const Type& ty) {
  std::set<Nominal> supp = support(abs);
  std::vector<Term> cs;
  std::vector<Type> tys;
  for (const Nominal& c : supp) {
    cs.push_back(Term::nominal(c));
    tys.push_back(c.ty);
  }
  std::set<std::string> avoid;
  for (const auto& [v, vt] : seq.sig) avoid.insert(v);
  std::string h = fresh_name("h", avoid);
  Type hty = Type::arrow(tys, ty);
  seq.sig.emplace(h, hty);
  return {h, Term::apps(Term::var(h, hty), cs)};
}

// Signature update for a substitution: drop its domain, add the free
// variables of its ranges.
std::map<std::string, Type> sig_after(const std::map<std::string, Type>& sig,
                                      const Subst& theta) {
  std::map<std::string, Type> out;
  for (const auto& [v, vt] : sig)
    if (!theta.binds(v)) out.emplace(v, vt);
  for (const auto& [v, vt] : theta.range_vars()) out.emplace(v, vt);
  return out;
}

const Definition& atom_def(const DefTable& defs, const FView& v) {
  if (v.kind != FKind::Atom || v.pred.kind() != TermKind::kConst ||
      !defs.defined(v.pred.name()))
    throw RuleError("not a defined atom");
  return defs.get(v.pred.name());
}

// Freshen clause variables away from the sequent signature.
Clause freshen_clause(const Clause& c, const std::map<std::string, Type>& sig) {
  std::set<std::string> avoid;
  for (const auto& [v, vt] : sig) avoid.insert(v);
  Subst ren;
  Clause out = c;
  for (auto& [n, t] : out.xs) {
    std::string nn = fresh_name(n, avoid);
    avoid.insert(nn);
    if (nn != n) ren.bind(n, Term::var(nn, t));
    n = nn;
  }
  if (!ren.empty()) {
    for (Term& a : out.head_args) a = ordinary_apply(ren, a);
    out.body = ordinary_apply(ren, out.body);
  }
  return out;
}

void check_invariant(const Term& s, const Definition& def) {
  if (!(type_of(s) == def.ty))
    throw RuleError("invariant type does not match the predicate");
  if (!support(s).empty()) throw RuleError("invariant mentions a nominal constant");
  if (!free_vars(s).empty()) throw RuleError("invariant has free variables");
}

// Clause variables stand for existentially quantified variables that are
// introduced when the sequent already has nominal constants in scope, so
// they may depend on the nominals of the matched atom. Raising makes that
// dependence explicit before the solver runs.
struct Raising {
  Subst raise;                          // clause var -> raised var applied to noms
  std::map<std::string, Type> raised;   // raised var signature
};

Raising raise_clause_vars(const std::map<std::string, Type>& sig,
                          const Clause& c, const Term& rhs) {
  Raising r;
  std::vector<Term> noms;
  for (const Nominal& n : support(rhs)) noms.push_back(Term::nominal(n));
  std::set<std::string> avoid;
  for (const auto& [n, t] : sig) avoid.insert(n);
  for (const auto& [n, t] : c.xs) avoid.insert(n);
  for (const auto& [n, t] : c.xs) {
    Type rt = t;
    for (auto it = noms.rbegin(); it != noms.rend(); ++it)
      rt = Type::arrow(type_of(*it), rt);
    std::string rn = fresh_name(n, avoid);
    avoid.insert(rn);
    r.raised.emplace(rn, rt);
    r.raise.bind(n, Term::apps(Term::var(rn, rt), noms));
  }
  return r;
}

std::vector<Term> fresh_arg_vars(const Definition& def,
                                 std::map<std::string, Type>& sig_out) {
  std::vector<Term> ys;
  std::set<std::string> avoid;
  for (size_t i = 0; i < def.ty.args().size(); ++i) {
    std::string n = fresh_name("x" + std::to_string(i + 1), avoid);
    avoid.insert(n);
    Type t = def.ty.args()[i];
    sig_out.emplace(n, t);
    ys.push_back(Term::var(n, t));
  }
  return ys;
}

}  // namespace

std::vector<Subst> deflp_solutions(const Sequent& seq, int h,
                                   const DefTable& defs) {
  FView v = classify(hyp_at(seq, h));
  const Definition& def = atom_def(defs, v);
  std::vector<Subst> out;
  for (size_t ci = 0; ci < def.clauses.size(); ++ci) {
    Clause c = freshen_clause(def.clauses[ci], seq.sig);
    Definition fresh_def = def;
    fresh_def.clauses[ci] = c;
    Term lhs = fresh_def.clause_head(static_cast<int>(ci));
    Term hc = def.head_const.is_null() ? Term::cnst(def.pred, def.ty)
                                       : def.head_const;
    Term rhs = normalize(Term::apps(hc, v.args));
    Raising r = raise_clause_vars(seq.sig, c, rhs);
    NabsProblem p;
    p.sigma = seq.sig;
    for (const auto& [n, t] : r.raised) p.sigma.emplace(n, t);
    p.lhs = normalize(ordinary_apply(r.raise, lhs));
    p.rhs = rhs;
    p.degree = static_cast<int>(c.zs.size());
    for (Subst& th : csnas(p)) out.push_back(std::move(th));
  }
  return out;
}

std::vector<Subst> defrp_candidates(const Sequent& seq, int clause,
                                    const DefTable& defs) {
  FView v = classify(seq.goal);
  const Definition& def = atom_def(defs, v);
  if (clause < 0 || clause >= static_cast<int>(def.clauses.size()))
    throw RuleError("no such clause");
  Clause c = freshen_clause(def.clauses[clause], seq.sig);
  Definition fresh_def = def;
  fresh_def.clauses[clause] = c;
  Term lhs = fresh_def.clause_head(clause);
  Term hc = def.head_const.is_null() ? Term::cnst(def.pred, def.ty)
                                     : def.head_const;
  Term rhs = normalize(Term::apps(hc, v.args));
  // Unlike defLp, the rule only asks for some theta, disjoint from the
  // signature, whose ordinary instance of the head matches the goal. Such
  // a theta may mention the goal's own nominal constants, so raise the
  // clause variables over the goal's support before solving and read the
  // answers back through the raising.
  Raising r = raise_clause_vars(seq.sig, c, rhs);
  NabsProblem p;
  p.sigma = r.raised;
  p.lhs = normalize(ordinary_apply(r.raise, lhs));
  p.rhs = rhs;
  p.degree = static_cast<int>(c.zs.size());
  std::vector<Subst> out;
  for (const Subst& sol : csnas(p)) {
    Subst th;
    for (const auto& [n, t] : c.xs) {
      Term img = normalize(
          ordinary_apply(sol, ordinary_apply(r.raise, Term::var(n, t))));
      if (!(img == Term::var(n, t))) th.bind(n, img);
    }
    // The rule requires the ordinary instance of the clause head to match
    // the goal head as stated, not up to renaming.
    if (nabs_holds(ordinary_apply(th, lhs), rhs, p.degree))
      out.push_back(std::move(th));
  }
  return out;
}

std::vector<Sequent> apply_rule(const Sequent& seq, const Rule& rule,
                                const DefTable& defs) {
  switch (rule.tag) {
    case Rule::Tag::Id: {
      if (!perm_equiv(hyp_at(seq, rule.hyp), seq.goal))
        throw RuleError("id: hypothesis does not match the goal");
      return {};
    }
    case Rule::Tag::TopR: {
      if (classify(seq.goal).kind != FKind::Top) throw RuleError("topR: goal is not true");
      return {};
    }
    case Rule::Tag::BotL: {
      if (classify(hyp_at(seq, rule.hyp)).kind != FKind::Bot)
        throw RuleError("botL: hypothesis is not false");
      return {};
    }
    case Rule::Tag::Cut: {
      Term f = normalize(rule.witness);
      check_formula(f);
      for (const auto& [v, vt] : free_vars(f)) {
        auto it = seq.sig.find(v);
        if (it == seq.sig.end() || !(it->second == vt))
          throw RuleError("cut formula mentions unknown variable " + v);
      }
      Sequent left = seq;
      left.goal = f;
      Sequent right = seq;
      right.hyps.push_back(f);
      return {left, right};
    }
    case Rule::Tag::CL: {
      Sequent out = seq;
      out.hyps.push_back(hyp_at(seq, rule.hyp));
      return {out};
    }
    case Rule::Tag::AndL: {
      FView v = classify(hyp_at(seq, rule.hyp));
      if (v.kind != FKind::And) throw RuleError("andL: not a conjunction");
      return {replace_hyp(seq, rule.hyp, rule.side == 1 ? v.a : v.b)};
    }
    case Rule::Tag::AndR: {
      FView v = classify(seq.goal);
      if (v.kind != FKind::And) throw RuleError("andR: goal is not a conjunction");
      Sequent l = seq; l.goal = v.a;
      Sequent r = seq; r.goal = v.b;
      return {l, r};
    }
    case Rule::Tag::OrL: {
      FView v = classify(hyp_at(seq, rule.hyp));
      if (v.kind != FKind::Or) throw RuleError("orL: not a disjunction");
      return {replace_hyp(seq, rule.hyp, v.a), replace_hyp(seq, rule.hyp, v.b)};
    }
    case Rule::Tag::OrR: {
      FView v = classify(seq.goal);
      if (v.kind != FKind::Or) throw RuleError("orR: goal is not a disjunction");
      Sequent out = seq;
      out.goal = rule.side == 1 ? v.a : v.b;
      return {out};
    }
    case Rule::Tag::ImpL: {
      FView v = classify(hyp_at(seq, rule.hyp));
      if (v.kind != FKind::Imp) throw RuleError("impL: not an implication");
      Sequent l = without_hyp(seq, rule.hyp);
      l.goal = v.a;
      Sequent r = replace_hyp(seq, rule.hyp, v.b);
      return {l, r};
    }
    case Rule::Tag::ImpR: {
      FView v = classify(seq.goal);
      if (v.kind != FKind::Imp) throw RuleError("impR: goal is not an implication");
      Sequent out = seq;
      out.hyps.push_back(v.a);
      out.goal = v.b;
      return {out};
    }
    case Rule::Tag::AllL: {
      FView v = classify(hyp_at(seq, rule.hyp));
      if (v.kind != FKind::All) throw RuleError("allL: not a universal");
      check_witness(seq, normalize(rule.witness), v.qty);
      return {replace_hyp(seq, rule.hyp,
                          normalize(Term::app(v.abs, normalize(rule.witness))))};
    }
    case Rule::Tag::ExR: {
      FView v = classify(seq.goal);
      if (v.kind != FKind::Ex) throw RuleError("exR: goal is not an existential");
      check_witness(seq, normalize(rule.witness), v.qty);
      Sequent out = seq;
      out.goal = normalize(Term::app(v.abs, normalize(rule.witness)));
      return {out};
    }
    case Rule::Tag::AllR: {
      FView v = classify(seq.goal);
      if (v.kind != FKind::All) throw RuleError("allR: goal is not a universal");
      Sequent out = seq;
      auto [h, t] = raise_fresh(out, v.abs, v.qty);
      out.goal = normalize(Term::app(v.abs, t));
      return {out};
    }
    case Rule::Tag::ExL: {
      FView v = classify(hyp_at(seq, rule.hyp));
      if (v.kind != FKind::Ex) throw RuleError("exL: not an existential");
      Sequent out = seq;
      auto [h, t] = raise_fresh(out, v.abs, v.qty);
      out.hyps[rule.hyp] = normalize(Term::app(v.abs, t));
      return {out};
    }
    case Rule::Tag::NablaR: {
      FView v = classify(seq.goal);
      if (v.kind != FKind::Nabla) throw RuleError("nablaR: goal is not a nabla");
      Nominal a = fresh_nominal(v.qty, support(v.abs));
      Sequent out = seq;
      out.goal = normalize(Term::app(v.abs, Term::nominal(a)));
      return {out};
    }
    case Rule::Tag::NablaL: {
      FView v = classify(hyp_at(seq, rule.hyp));
      if (v.kind != FKind::Nabla) throw RuleError("nablaL: not a nabla");
      Nominal a = fresh_nominal(v.qty, support(v.abs));
      return {replace_hyp(seq, rule.hyp,
                          normalize(Term::app(v.abs, Term::nominal(a))))};
    }
    case Rule::Tag::NabsR: {
      FView v = classify(seq.goal);
      if (v.kind != FKind::Nabs) throw RuleError("nabsR: goal is not |>");
      if (!nabs_holds(v.a, v.b, v.degree))
        throw RuleError("nabsR: the abstraction does not hold");
      return {};
    }
    case Rule::Tag::NabsL: {
      FView v = classify(hyp_at(seq, rule.hyp));
      if (v.kind != FKind::Nabs) throw RuleError("nabsL: not a |> hypothesis");
      NabsProblem p;
      p.sigma = seq.sig;
      p.lhs = v.a;
      p.rhs = v.b;
      p.degree = v.degree;
      std::vector<Sequent> out;
      for (const Subst& th : csnas(p)) {
        Sequent prem = without_hyp(seq, rule.hyp);
        prem.sig = sig_after(seq.sig, th);
        for (Term& f : prem.hyps) f = nca_apply(th, f);
        prem.goal = nca_apply(th, prem.goal);
        out.push_back(std::move(prem));
      }
      return out;
    }
    case Rule::Tag::DefR: {
      FView v = classify(seq.goal);
      const Definition& def = atom_def(defs, v);
      Sequent out = seq;
      out.goal = unfold_translated(def, v.args);
      return {out};
    }
    case Rule::Tag::DefL: {
      FView v = classify(hyp_at(seq, rule.hyp));
      const Definition& def = atom_def(defs, v);
      return {replace_hyp(seq, rule.hyp, unfold_translated(def, v.args))};
    }
    case Rule::Tag::DefRp: {
      FView v = classify(seq.goal);
      const Definition& def = atom_def(defs, v);
      if (rule.clause < 0 || rule.clause >= static_cast<int>(def.clauses.size()))
        throw RuleError("defRp: no such clause");
      Clause c = freshen_clause(def.clauses[rule.clause], seq.sig);
      const Subst& th = rule.subst;
      for (const std::string& x : th.domain()) {
        bool is_clause_var = false;
        for (const auto& [n, t] : c.xs) is_clause_var = is_clause_var || n == x;
        if (!is_clause_var)
          throw RuleError("defRp: substitution binds a non-clause variable");
      }
      Definition fresh_def = def;
      fresh_def.clauses[rule.clause] = c;
      Term lhs = fresh_def.clause_head(rule.clause);
      Term hc = def.head_const.is_null() ? Term::cnst(def.pred, def.ty)
                                         : def.head_const;
      Term rhs = normalize(Term::apps(hc, v.args));
      if (!nabs_holds(ordinary_apply(th, lhs), rhs,
                      static_cast<int>(c.zs.size())))
        throw RuleError("defRp: clause instance does not match the goal");
      Subst body_th = th;
      for (const auto& [n, t] : c.xs)
        if (!th.binds(n)) body_th.bind(n, Term::var(n, t));
      Sequent out = seq;
      out.goal = normalize(ordinary_apply(th, c.body));
      // New eigenvariables from the instantiation and leftover clause vars.
      for (const auto& [n, t] : th.range_vars()) out.sig.emplace(n, t);
      for (const auto& [n, t] : c.xs)
        if (!th.binds(n) && has_free_var(out.goal, n)) out.sig.emplace(n, t);
      return {out};
    }
    case Rule::Tag::DefLp: {
      FView v = classify(hyp_at(seq, rule.hyp));
      const Definition& def = atom_def(defs, v);
      std::vector<Sequent> out;
      // Premises follow clause order; recompute the per-clause bodies.
      for (size_t ci = 0; ci < def.clauses.size(); ++ci) {
        Clause c = freshen_clause(def.clauses[ci], seq.sig);
        Definition fresh_def = def;
        fresh_def.clauses[ci] = c;
        Term lhs = fresh_def.clause_head(static_cast<int>(ci));
        Term hc = def.head_const.is_null() ? Term::cnst(def.pred, def.ty)
                                           : def.head_const;
        Term rhs = normalize(Term::apps(hc, v.args));
        Raising r = raise_clause_vars(seq.sig, c, rhs);
        NabsProblem p;
        p.sigma = seq.sig;
        for (const auto& [n, t] : r.raised) p.sigma.emplace(n, t);
        p.lhs = normalize(ordinary_apply(r.raise, lhs));
        p.rhs = rhs;
        p.degree = static_cast<int>(c.zs.size());
        Term body_r = normalize(ordinary_apply(r.raise, c.body));
        for (const Subst& th : csnas(p)) {
          Sequent prem = without_hyp(seq, rule.hyp);
          std::map<std::string, Type> full_sig = p.sigma;
          prem.sig = sig_after(full_sig, th);
          for (Term& f : prem.hyps) f = nca_apply(th, f);
          prem.goal = nca_apply(th, prem.goal);
          Term body = nca_apply(th, body_r);
          prem.hyps.push_back(normalize(body));
          out.push_back(std::move(prem));
        }
      }
      return out;
    }
    case Rule::Tag::IL: {
      FView v = classify(hyp_at(seq, rule.hyp));
      const Definition& def = atom_def(defs, v);
      if (def.flavor != Flavor::Inductive) throw RuleError("IL: not inductive");
      Term s = normalize(rule.witness);
      check_invariant(s, def);
      Sequent p1;
      std::vector<Term> ys = fresh_arg_vars(def, p1.sig);
      p1.hyps.push_back(unfold_with(def, s, ys));
      p1.goal = normalize(Term::apps(s, ys));
      Sequent p2 = replace_hyp(seq, rule.hyp, normalize(Term::apps(s, v.args)));
      return {p1, p2};
    }
    case Rule::Tag::ILp: {
      FView v = classify(hyp_at(seq, rule.hyp));
      const Definition& def = atom_def(defs, v);
      if (def.flavor != Flavor::Inductive) throw RuleError("ILp: not inductive");
      Term s = normalize(rule.witness);
      check_invariant(s, def);
      std::vector<Sequent> out;
      for (size_t ci = 0; ci < def.clauses.size(); ++ci) {
        const Clause& c = def.clauses[ci];
        Sequent prem;
        for (const auto& [n, t] : c.xs) prem.sig.emplace(n, t);
        prem.hyps.push_back(normalize(replace_const(c.body, def.pred, s)));
        Term inner = normalize(Term::apps(s, c.head_args));
        for (auto it = c.zs.rbegin(); it != c.zs.rend(); ++it)
          inner = f_quant("nabla",
                          abstract_leaves(inner, {Term::var(it->first, it->second)},
                                          {it->first}));
        prem.goal = normalize(inner);
        out.push_back(std::move(prem));
      }
      Sequent main = replace_hyp(seq, rule.hyp, normalize(Term::apps(s, v.args)));
      out.push_back(std::move(main));
      return out;
    }
    case Rule::Tag::CIR: {
      FView v = classify(seq.goal);
      const Definition& def = atom_def(defs, v);
      if (def.flavor != Flavor::CoInductive) throw RuleError("CIR: not coinductive");
      Term s = normalize(rule.witness);
      check_invariant(s, def);
      Sequent p1 = seq;
      p1.goal = normalize(Term::apps(s, v.args));
      Sequent p2;
      std::vector<Term> ys = fresh_arg_vars(def, p2.sig);
      p2.hyps.push_back(normalize(Term::apps(s, ys)));
      p2.goal = unfold_with(def, s, ys);
      return {p1, p2};
    }
    case Rule::Tag::Lemma: {
      Term f = normalize(rule.witness);
      if (!(f == seq.goal) && !perm_equiv(f, seq.goal))
        throw RuleError("lemma: statement does not match the goal");
      return {};
    }
  }
  throw RuleError("unknown rule");
}

}  // namespace gk
