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

#include "gk/perm.hpp"

namespace gk {

bool Perm::extend(const Nominal& n1, const Nominal& n2) {
  if (n1.ty != n2.ty) return false;
  auto f = fwd_.find(n1);
  if (f != fwd_.end()) return f->second == n2;
  auto b = bwd_.find(n2);
  if (b != bwd_.end()) return b->second == n1;
  // Mapping n1 -> n2 alone is a partial injection; it extends to a
  // permutation on the full set, which is all callers need.
  fwd_[n1] = n2;
  bwd_[n2] = n1;
  return true;
}

void Perm::swap(const Nominal& n1, const Nominal& n2) {
  if (n1 == n2) return;
  extend(n1, n2);
  extend(n2, n1);
}

Nominal Perm::apply(const Nominal& n) const {
  auto it = fwd_.find(n);
  if (it != fwd_.end()) return it->second;
  // Not explicitly mapped. If n is hit by some explicit mapping, it must
  // move somewhere to stay injective; we route it through inverse chains.
  auto b = bwd_.find(n);
  if (b == bwd_.end()) return n;
  // Follow the chain of preimages back to a nominal with no preimage;
  // n's image is that chain start (completing the cycle deterministically).
  Nominal cur = n;
  while (true) {
    auto it2 = bwd_.find(cur);
    if (it2 == bwd_.end()) return cur;
    cur = it2->second;
  }
}

Perm Perm::inverse() const {
  Perm out;
  out.fwd_ = bwd_;
  out.bwd_ = fwd_;
  return out;
}

bool Perm::is_identity() const {
  for (const auto& [k, v] : fwd_)
    if (!(k == v)) return false;
  return true;
}

Term apply_perm(const Perm& p, const Term& t) {
  switch (t.kind()) {
    case TermKind::kVar:
    case TermKind::kConst:
    case TermKind::kBound:
      return t;
    case TermKind::kNominal:
      return Term::nominal(p.apply(t.nominal_of()));
    case TermKind::kLam:
      return Term::lam(t.hint(), t.binder_type(), apply_perm(p, t.body()));
    case TermKind::kApp:
      return Term::app(apply_perm(p, t.fun()), apply_perm(p, t.arg()));
  }
  return t;
}

namespace {

bool pe(const Term& t, const Term& u, Perm& acc) {
  if (t.kind() != u.kind()) return false;
  switch (t.kind()) {
    case TermKind::kVar:
    case TermKind::kConst:
      return t == u;
    case TermKind::kBound:
      return t.index() == u.index();
    case TermKind::kNominal:
      return acc.extend(t.nominal_of(), u.nominal_of());
    case TermKind::kLam:
      return t.binder_type() == u.binder_type() && pe(t.body(), u.body(), acc);
    case TermKind::kApp:
      return pe(t.fun(), u.fun(), acc) && pe(t.arg(), u.arg(), acc);
  }
  return false;
}

}  // namespace

std::optional<Perm> perm_equiv(const Term& t, const Term& u) {
  Perm acc;
  if (pe(t, u, acc)) return acc;
  return std::nullopt;
}

}  // namespace gk
