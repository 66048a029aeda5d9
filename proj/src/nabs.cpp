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

#include "gk/nabs.hpp"

#include <algorithm>
#include <functional>

#include "gk/error.hpp"
#include "gk/unify.hpp"

namespace gk {

namespace {

// Lockstep comparison of the stripped body u against t. Outer binder k
// (0-based from the outside) must consistently map to a single nominal
// outside supp(s), injectively across binders.
struct HoldsWalker {
  int degree;
  std::set<Nominal> forbidden;  // supp(s)
  std::map<int, Nominal> binder_map;
  std::set<Nominal> used;

  bool walk(const Term& u, const Term& t, int depth) {
    if (u.kind() == TermKind::kBound) {
      int i = u.index();
      if (i < depth) return t.kind() == TermKind::kBound && t.index() == i;
      int binder = degree - 1 - (i - depth);  // 0-based outermost first
      if (t.kind() != TermKind::kNominal) return false;
      Nominal c = t.nominal_of();
      auto it = binder_map.find(binder);
      if (it != binder_map.end()) return it->second == c;
      if (forbidden.count(c) || used.count(c)) return false;
      binder_map.emplace(binder, c);
      used.insert(c);
      return true;
    }
    if (u.kind() != t.kind()) return false;
    switch (u.kind()) {
      case TermKind::kVar:
      case TermKind::kConst:
      case TermKind::kNominal:
        return u == t;
      case TermKind::kLam:
        return u.binder_type() == t.binder_type() &&
               walk(u.body(), t.body(), depth + 1);
      case TermKind::kApp:
        return walk(u.fun(), t.fun(), depth) && walk(u.arg(), t.arg(), depth);
      default:
        return false;
    }
  }
};

}  // namespace

bool nabs_holds(const Term& s, const Term& t, int degree) {
  Term sn = normalize(s);
  Term tn = normalize(t);
  Term u = sn;
  for (int i = 0; i < degree; ++i) {
    if (u.kind() != TermKind::kLam) return false;  // eta-long s of arrow type
    u = u.body();
  }
  HoldsWalker w;
  w.degree = degree;
  w.forbidden = support(sn);
  return w.walk(u, tn, 0);
}

bool is_solution(const Subst& theta, const NabsProblem& p) {
  // Rename the judgment's nominals away from supp(theta) jointly, then
  // apply theta ordinarily; this is nca applied to s |> t as one unit.
  std::set<Nominal> sj = support(p.lhs);
  for (const Nominal& n : support(p.rhs)) sj.insert(n);
  std::set<Nominal> sth = theta.range_support();
  std::set<Nominal> avoid = sj;
  avoid.insert(sth.begin(), sth.end());
  Perm pi;
  for (const Nominal& n : sj) {
    if (!sth.count(n)) continue;
    Nominal fresh = fresh_nominal(n.ty, avoid);
    avoid.insert(fresh);
    pi.swap(n, fresh);
  }
  Term s = ordinary_apply(theta, apply_perm(pi, p.lhs));
  Term t = ordinary_apply(theta, apply_perm(pi, p.rhs));
  return nabs_holds(s, t, p.degree);
}

namespace {

// Canonical form of a solution for duplicate detection: tuple the ranges
// over sigma, rename free variables in traversal order.
Term solution_key(const Subst& theta, const std::map<std::string, Type>& sigma) {
  std::vector<Term> parts;
  std::vector<Type> tys;
  for (const auto& [x, ty] : sigma) {
    Term v = theta.binds(x) ? theta.get(x) : Term::var(x, ty);
    parts.push_back(normalize(v));
    tys.push_back(type_of(parts.back()));
  }
  Term tup = Term::apps(Term::cnst("#tuple", Type::arrow(tys, Type::base("#t"))), parts);
  // Rename free variables in order of first occurrence.
  Subst ren;
  int k = 0;
  std::function<void(const Term&)> scan = [&](const Term& t) {
    switch (t.kind()) {
      case TermKind::kVar:
        if (!ren.binds(t.name()))
          ren.bind(t.name(), Term::var("#c" + std::to_string(k++), t.leaf_type()));
        return;
      case TermKind::kLam:
        scan(t.body());
        return;
      case TermKind::kApp:
        scan(t.fun());
        scan(t.arg());
        return;
      default:
        return;
    }
  };
  scan(tup);
  return ordinary_apply(ren, tup);
}

}  // namespace

std::vector<Subst> csnas(const NabsProblem& p) {
  Term s = normalize(p.lhs);
  Term t = normalize(p.rhs);
  int n = p.degree;

  // Names already in play; raised and helper variables must avoid them.
  std::set<std::string> taken;
  for (const auto& [x, ty] : p.sigma) taken.insert(x);
  for (const auto& [x, ty] : free_vars(s)) taken.insert(x);
  for (const auto& [x, ty] : free_vars(t)) taken.insert(x);

  // Fresh nominals c1..cn, matching the abstraction types of s, distinct
  // from everything in the judgment.
  std::vector<Type> abs_tys;
  {
    Type ty = type_of(s);
    for (int i = 0; i < n; ++i) {
      if (!ty.is_arrow()) throw Error("csnas: degree exceeds lhs arity");
      abs_tys.push_back(ty.arg());
      ty = ty.result();
    }
  }
  std::set<Nominal> avoid = support(s);
  for (const Nominal& m : support(t)) avoid.insert(m);
  std::vector<Term> cs;
  for (const Type& ty : abs_tys) {
    Nominal c = fresh_nominal(ty, avoid);
    avoid.insert(c);
    cs.push_back(Term::nominal(c));
  }

  // Raise every signature variable over the new nominals. With degree 0
  // there is nothing to raise.
  Subst raise;
  std::set<std::string> flex;
  std::map<std::string, std::string> raised_of;  // original -> raised
  if (n == 0) {
    for (const auto& [x, ty] : p.sigma) flex.insert(x);
  } else {
    for (const auto& [x, ty] : p.sigma) {
      std::string rx = fresh_name(x + "'", taken);
      taken.insert(rx);
      raised_of[x] = rx;
      Term hr = Term::var(rx, Type::arrow(abs_tys, ty));
      raise.bind(x, Term::apps(hr, cs));
      flex.insert(rx);
    }
  }
  Term s2 = ordinary_apply(raise, s);
  Term t2 = ordinary_apply(raise, t);

  // Candidate nominals for the abstraction positions.
  std::vector<Nominal> noms;
  for (const Nominal& m : support(t2)) noms.push_back(m);
  for (const Term& c : cs)
    if (!support(t2).count(c.nominal_of())) noms.push_back(c.nominal_of());
  std::sort(noms.begin(), noms.end());

  std::vector<Subst> out;
  std::vector<Term> keys;

  // All ordered selections of n distinct type-compatible nominals.
  std::vector<int> pick(n, -1);
  std::vector<bool> in_use(noms.size(), false);
  std::function<void(int)> go = [&](int k) {
    if (k == n) {
      std::vector<Term> bs;
      std::set<Nominal> picked;
      for (int i = 0; i < n; ++i) picked.insert(noms[pick[i]]);
      for (const Nominal& m : noms)
        if (!picked.count(m)) bs.push_back(Term::nominal(m));
      std::vector<Term> rs = bs;
      for (int i = 0; i < n; ++i) rs.push_back(Term::nominal(noms[pick[i]]));
      Term L = normalize(abstract_leaves(s2, bs));
      Term R = normalize(abstract_leaves(t2, rs));
      auto mgu = pattern_unify(L, R, flex);
      if (mgu) {
        // Compose the raising with the unifier and clean helper names.
        Subst theta;
        for (const auto& [x, ty] : p.sigma) {
          Term raised = n == 0 ? Term::var(x, ty) : raise.get(x);
          theta.bind(x, normalize(ordinary_apply(*mgu, raised)));
        }
        std::set<std::string> raised_names;
        for (const auto& [orig, rx] : raised_of) raised_names.insert(rx);
        Subst ren;
        std::set<std::string> local_taken = taken;
        for (const auto& [x, v] : theta.mapping()) {
          (void)x;
          for (const auto& [w, wty] : free_vars(v)) {
            bool is_helper = w.rfind("#v", 0) == 0 || raised_names.count(w) > 0;
            if (is_helper && !ren.binds(w)) {
              std::string nn = fresh_name("Z", local_taken);
              local_taken.insert(nn);
              ren.bind(w, Term::var(nn, wty));
            }
          }
        }
        if (!ren.empty()) {
          Subst theta2;
          for (const auto& [x, v] : theta.mapping())
            theta2.bind(x, ordinary_apply(ren, v));
          theta = theta2;
        }
        Term key = solution_key(theta, p.sigma);
        bool dup = false;
        for (const Term& k2 : keys)
          if (perm_equiv(key, k2).has_value()) { dup = true; break; }
        if (!dup) {
          keys.push_back(key);
          out.push_back(theta);
        }
      }
      return;
    }
    for (size_t j = 0; j < noms.size(); ++j) {
      if (in_use[j] || !(noms[j].ty == abs_tys[k])) continue;
      in_use[j] = true;
      pick[k] = static_cast<int>(j);
      go(k + 1);
      in_use[j] = false;
    }
  };
  go(0);
  return out;
}

}  // namespace gk
