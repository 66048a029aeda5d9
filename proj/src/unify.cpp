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

#include "gk/unify.hpp"

#include <deque>
#include <utility>
#include <vector>

#include "gk/error.hpp"

namespace gk {

namespace {

// Atoms are nominal constants or the local constants standing for binders
// opened during descent.
bool is_local(const Term& t) {
  return t.kind() == TermKind::kConst && t.name().rfind("#u", 0) == 0;
}

bool is_atom(const Term& t) {
  return t.kind() == TermKind::kNominal || is_local(t);
}

std::string atom_key(const Term& t) {
  if (t.kind() == TermKind::kNominal)
    return "n:" + t.leaf_type().str() + ":" + std::to_string(t.nominal_of().index);
  return "l:" + t.name();
}

struct Unifier {
  std::set<std::string> flex;
  Subst sigma;
  std::deque<std::pair<Term, Term>> eqs;
  int local_counter = 0;
  int helper_counter = 0;

  Term fresh_local(const Type& ty) {
    return Term::cnst("#u" + std::to_string(local_counter++), ty);
  }

  Term fresh_flex(const Type& ty) {
    std::string name = "#v" + std::to_string(helper_counter++);
    flex.insert(name);
    return Term::var(name, ty);
  }

  bool is_flex_head(const Term& h) const {
    return h.kind() == TermKind::kVar && flex.count(h.name()) > 0;
  }

  // Strip eta expansion from the arguments of a flexible head; all must be
  // distinct atoms or the problem leaves the pattern fragment.
  std::vector<Term> pattern_args(const Term& t) const {
    std::vector<Term> out;
    std::set<std::string> seen;
    for (const Term& a : t.spine_args()) {
      auto atom = strip_eta_atom(a);
      if (!atom || !is_atom(*atom))
        throw NonPatternError("flexible head applied to a non-atom");
      if (!seen.insert(atom_key(*atom)).second)
        throw NonPatternError("flexible head applied to repeated atoms");
      out.push_back(*atom);
    }
    return out;
  }

  // Prune subterms not expressible over `allowed`; returns nullopt when a
  // rigid atom escapes, which means there is no unifier.
  std::optional<Term> prune(const Term& t, std::set<std::string>& allowed,
                            const std::string& tabu_var) {
    if (t.kind() == TermKind::kLam) {
      Term local = fresh_local(t.binder_type());
      allowed.insert(atom_key(local));
      auto b = prune(open_body(t.body(), local), allowed, tabu_var);
      allowed.erase(atom_key(local));
      if (!b) return std::nullopt;
      return abstract_leaves(*b, {local}, {t.hint()});
    }
    Term h = t.head();
    auto args = t.spine_args();
    if (h.kind() == TermKind::kVar && sigma.binds(h.name())) {
      return prune(ordinary_apply(sigma, t), allowed, tabu_var);
    }
    if (is_flex_head(h)) {
      if (h.name() == tabu_var) return std::nullopt;  // occurs check
      auto atoms = pattern_args(t);
      std::vector<Term> kept;
      for (const Term& a : atoms)
        if (allowed.count(atom_key(a))) kept.push_back(a);
      if (kept.size() == atoms.size()) return t;
      std::vector<Type> kept_tys;
      for (const Term& a : kept) kept_tys.push_back(a.leaf_type());
      Type target = type_of(h).result_after(static_cast<int>(atoms.size()));
      Term g2 = fresh_flex(Type::arrow(kept_tys, target));
      sigma.bind(h.name(), normalize(abstract_leaves(Term::apps(g2, kept), atoms)));
      return normalize(Term::apps(g2, kept));
    }
    // Rigid head.
    if (is_atom(h) && !allowed.count(atom_key(h))) return std::nullopt;
    Term out = h;
    for (const Term& a : args) {
      auto pa = prune(a, allowed, tabu_var);
      if (!pa) return std::nullopt;
      out = Term::app(out, *pa);
    }
    return out;
  }

  // Bind F (applied to atoms) to rhs; false means no unifier.
  bool bind(const Term& fhead, const std::vector<Term>& atoms, const Term& rhs) {
    std::set<std::string> allowed;
    for (const Term& a : atoms) allowed.insert(atom_key(a));
    auto pruned = prune(rhs, allowed, fhead.name());
    if (!pruned) return false;
    sigma.bind(fhead.name(), normalize(abstract_leaves(*pruned, atoms)));
    return true;
  }

  bool step(Term l, Term r) {
    l = normalize(ordinary_apply(sigma, l));
    r = normalize(ordinary_apply(sigma, r));
    if (l == r) return true;
    if (l.kind() == TermKind::kLam || r.kind() == TermKind::kLam) {
      if (l.kind() != r.kind() || l.binder_type() != r.binder_type()) return false;
      Term local = fresh_local(l.binder_type());
      eqs.emplace_back(open_body(l.body(), local), open_body(r.body(), local));
      return true;
    }
    Term lh = l.head(), rh = r.head();
    bool lf = is_flex_head(lh), rf = is_flex_head(rh);
    if (lf && rf) {
      auto la = pattern_args(l), ra = pattern_args(r);
      if (lh == rh) {
        // Same variable: keep argument positions where the atoms agree.
        std::vector<Term> kept;
        for (size_t i = 0; i < la.size(); ++i)
          if (la[i] == ra[i]) kept.push_back(la[i]);
        if (kept.size() == la.size()) return true;
        std::vector<Type> tys;
        for (const Term& a : kept) tys.push_back(a.leaf_type());
        Type target = type_of(lh).result_after(static_cast<int>(la.size()));
        Term h2 = fresh_flex(Type::arrow(tys, target));
        sigma.bind(lh.name(), normalize(abstract_leaves(Term::apps(h2, kept), la)));
        return true;
      }
      // Different variables: images of the common atoms.
      std::vector<Term> common;
      std::set<std::string> rkeys;
      for (const Term& a : ra) rkeys.insert(atom_key(a));
      for (const Term& a : la)
        if (rkeys.count(atom_key(a))) common.push_back(a);
      std::vector<Type> tys;
      for (const Term& a : common) tys.push_back(a.leaf_type());
      Type target = type_of(lh).result_after(static_cast<int>(la.size()));
      Term h2 = fresh_flex(Type::arrow(tys, target));
      sigma.bind(lh.name(), normalize(abstract_leaves(Term::apps(h2, common), la)));
      sigma.bind(rh.name(), normalize(abstract_leaves(Term::apps(h2, common), ra)));
      return true;
    }
    if (lf) return bind(lh, pattern_args(l), r);
    if (rf) return bind(rh, pattern_args(r), l);
    // Rigid-rigid.
    if (lh.kind() != rh.kind()) return false;
    switch (lh.kind()) {
      case TermKind::kVar:
      case TermKind::kConst:
      case TermKind::kNominal:
        if (lh != rh) return false;
        break;
      default:
        return false;
    }
    auto la = l.spine_args(), ra = r.spine_args();
    if (la.size() != ra.size()) return false;
    for (size_t i = 0; i < la.size(); ++i) eqs.emplace_back(la[i], ra[i]);
    return true;
  }

  std::optional<Subst> run(Term l, Term r) {
    eqs.emplace_back(std::move(l), std::move(r));
    while (!eqs.empty()) {
      auto [a, b] = eqs.front();
      eqs.pop_front();
      if (!step(a, b)) return std::nullopt;
    }
    // Close sigma under itself; occurs checks keep this acyclic.
    bool changed = true;
    int rounds = 0;
    while (changed) {
      if (++rounds > 1000) throw NonPatternError("unify: substitution not settling");
      changed = false;
      Subst next;
      for (const auto& [k, v] : sigma.mapping()) {
        Term v2 = ordinary_apply(sigma, v);
        if (v2 != v) changed = true;
        next.bind(k, v2);
      }
      sigma = next;
    }
    return sigma;
  }
};

}  // namespace

std::optional<Subst> pattern_unify(const Term& lhs, const Term& rhs,
                                   const std::set<std::string>& flex) {
  Unifier u;
  u.flex = flex;
  auto out = u.run(normalize(lhs), normalize(rhs));
  if (!out) return std::nullopt;
  // Hide bindings of helper variables; they remain only inside ranges.
  Subst restricted;
  for (const auto& [k, v] : out->mapping())
    if (flex.count(k)) restricted.bind(k, v);
  return restricted;
}

}  // namespace gk
