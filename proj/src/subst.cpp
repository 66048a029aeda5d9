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

#include <deque>
#include <utility>
#include <vector>

#include "gk/error.hpp"

namespace gk {

void Subst::bind(const std::string& name, Term t) {
  if (t.kind() == TermKind::kVar && t.name() == name) {
    map_.erase(name);
    return;
  }
  map_[name] = std::move(t);
}

std::set<std::string> Subst::domain() const {
  std::set<std::string> out;
  for (const auto& [k, v] : map_) out.insert(k);
  return out;
}

std::set<Nominal> Subst::range_support() const {
  std::set<Nominal> out;
  for (const auto& [k, v] : map_) {
    auto s = support(v);
    out.insert(s.begin(), s.end());
  }
  return out;
}

std::map<std::string, Type> Subst::range_vars() const {
  std::map<std::string, Type> out;
  for (const auto& [k, v] : map_) {
    auto fv = free_vars(v);
    out.insert(fv.begin(), fv.end());
  }
  return out;
}

namespace {

// Range terms never contain free de Bruijn indices, so substitution under
// binders needs no shifting.
Term raw_apply(const Subst& theta, const Term& t) {
  switch (t.kind()) {
    case TermKind::kVar:
      if (theta.binds(t.name())) return theta.get(t.name());
      return t;
    case TermKind::kConst:
    case TermKind::kNominal:
    case TermKind::kBound:
      return t;
    case TermKind::kLam:
      return Term::lam(t.hint(), t.binder_type(), raw_apply(theta, t.body()));
    case TermKind::kApp:
      return Term::app(raw_apply(theta, t.fun()), raw_apply(theta, t.arg()));
  }
  return t;
}

}  // namespace

Term ordinary_apply(const Subst& theta, const Term& t) {
  if (theta.empty()) return t;
  return normalize(raw_apply(theta, t));
}

Term nca_apply(const Subst& theta, const Term& t) {
  std::set<Nominal> st = support(t);
  std::set<Nominal> sth = theta.range_support();
  std::set<Nominal> avoid = st;
  avoid.insert(sth.begin(), sth.end());
  Perm pi;
  for (const Nominal& n : st) {
    if (!sth.count(n)) continue;
    Nominal fresh = fresh_nominal(n.ty, avoid);
    avoid.insert(fresh);
    pi.swap(n, fresh);
  }
  return ordinary_apply(theta, apply_perm(pi, t));
}

Subst perm_subst(const Perm& p, const Subst& theta) {
  Subst out;
  for (const auto& [k, v] : theta.mapping()) out.bind(k, apply_perm(p, v));
  return out;
}

Subst nca_compose(const Subst& theta, const Subst& rho) {
  std::set<Nominal> sth = theta.range_support();
  std::set<Nominal> srh = rho.range_support();
  std::set<Nominal> avoid = sth;
  avoid.insert(srh.begin(), srh.end());
  Perm pi;
  for (const Nominal& n : sth) {
    if (!srh.count(n)) continue;
    Nominal fresh = fresh_nominal(n.ty, avoid);
    avoid.insert(fresh);
    pi.swap(n, fresh);
  }
  Subst out;
  for (const auto& [k, v] : theta.mapping())
    out.bind(k, ordinary_apply(rho, apply_perm(pi, v)));
  for (const auto& [k, v] : rho.mapping())
    if (!theta.binds(k)) out.bind(k, v);
  return out;
}

Subst restrict_to(const Subst& theta, const std::set<std::string>& sigma) {
  Subst out;
  for (const auto& [k, v] : theta.mapping())
    if (sigma.count(k)) out.bind(k, v);
  return out;
}

// -- less_general ----------------------------------------------------------

namespace {

struct MatchState {
  Perm pi;                       // pattern-side nominals -> target-side
  std::set<Nominal> pi_image;
  Subst sigma;                   // assignments to pattern-side variables
  std::deque<std::pair<Term, Term>> flex;  // deferred flex equations
  std::set<Nominal> all_noms;    // every nominal seen, for fresh picks
  int local_counter = 0;

  Term fresh_local(const Type& ty) {
    return Term::cnst("#l" + std::to_string(local_counter++), ty);
  }

  void note_noms(const Term& t) {
    auto s = support(t);
    all_noms.insert(s.begin(), s.end());
  }

  bool is_local(const Term& t) const {
    return t.kind() == TermKind::kConst && t.name().rfind("#l", 0) == 0;
  }

  // Structural pass: extend pi on rigid nominal heads, defer flex heads.
  bool structural(Term p, Term t) {
    if (p.kind() == TermKind::kLam || t.kind() == TermKind::kLam) {
      if (p.kind() != t.kind()) return false;
      if (p.binder_type() != t.binder_type()) return false;
      Term c = fresh_local(p.binder_type());
      return structural(open_body(p.body(), c), open_body(t.body(), c));
    }
    Term ph = p.head();
    if (ph.kind() == TermKind::kVar) {
      flex.emplace_back(p, t);
      return true;
    }
    Term th = t.head();
    auto pa = p.spine_args();
    auto ta = t.spine_args();
    if (pa.size() != ta.size()) return false;
    switch (ph.kind()) {
      case TermKind::kConst:
        if (th.kind() != TermKind::kConst || ph != th) return false;
        break;
      case TermKind::kNominal:
        if (th.kind() != TermKind::kNominal) return false;
        if (!pi.extend(ph.nominal_of(), th.nominal_of())) return false;
        pi_image.insert(th.nominal_of());
        break;
      default:
        return false;
    }
    for (size_t i = 0; i < pa.size(); ++i)
      if (!structural(pa[i], ta[i])) return false;
    return true;
  }
};

}  // namespace

bool less_general(const Subst& rho, const Subst& theta,
                  const std::map<std::string, Type>& sigma) {
  MatchState st;
  std::vector<std::pair<Term, Term>> pairs;
  for (const auto& [x, ty] : sigma) {
    Term xv = Term::var(x, ty);
    Term p = normalize(theta.binds(x) ? theta.get(x) : xv);
    Term t = normalize(rho.binds(x) ? rho.get(x) : xv);
    st.note_noms(p);
    st.note_noms(t);
    pairs.emplace_back(p, t);
  }
  for (auto& [p, t] : pairs)
    if (!st.structural(p, t)) return false;

  // Resolve deferred flexible equations. Each round either consumes an
  // equation structurally or assigns one variable, so this terminates.
  int guard = 0;
  while (!st.flex.empty()) {
    if (++guard > 10000) throw NonPatternError("less_general: no progress");
    auto [p, t] = st.flex.front();
    st.flex.pop_front();
    Term ph = p.head();
    if (st.sigma.binds(ph.name())) {
      Term p2 = ordinary_apply(st.sigma, p);
      if (!st.structural(p2, t)) return false;
      continue;
    }
    // Pattern-side variable head: arguments must be distinct atoms.
    auto args = p.spine_args();
    std::vector<Term> images;
    std::set<std::string> seen_atoms;
    for (const Term& a : args) {
      // Arguments of an eta-long flexible head may be eta-expanded atoms.
      auto atom = strip_eta_atom(a);
      if (!atom) throw NonPatternError("less_general: non-atom argument");
      Term stripped = *atom;
      std::string key;
      Term image;
      if (stripped.kind() == TermKind::kNominal) {
        Nominal n = stripped.nominal_of();
        Nominal img = st.pi.apply(n);
        if (img == n && !st.pi_image.count(n) && !st.pi.mapping().count(n)) {
          // Unconstrained nominal argument: map it to a vacuous fresh
          // nominal on the target side.
          Nominal f = fresh_nominal(n.ty, st.all_noms);
          st.all_noms.insert(f);
          st.pi.extend(n, f);
          st.pi_image.insert(f);
          img = f;
        }
        image = Term::nominal(img);
        key = "n:" + img.ty.str() + ":" + std::to_string(img.index);
      } else if (st.is_local(stripped)) {
        image = stripped;
        key = "l:" + stripped.name();
      } else {
        throw NonPatternError("less_general: non-atom argument");
      }
      if (!seen_atoms.insert(key).second)
        throw NonPatternError("less_general: repeated argument");
      images.push_back(image);
    }
    Term body = abstract_leaves(t, images);
    // Remaining local constants would escape their scope.
    bool escaped = false;
    for (int i = 0; i < st.local_counter && !escaped; ++i)
      escaped = contains_const(body, "#l" + std::to_string(i));
    if (escaped) return false;
    st.sigma.bind(ph.name(), normalize(body));
  }

  // Freshness side condition of the composition: the witnessing
  // substitution must not mention nominals moved into place by pi.
  for (const auto& [k, v] : st.sigma.mapping()) {
    (void)k;
    for (const Nominal& n : support(v))
      if (st.pi_image.count(n)) return false;
  }
  return true;
}

}  // namespace gk
