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

#include "gk/term.hpp"

#include <algorithm>
#include <cassert>

#include "gk/error.hpp"

namespace gk {

struct Term::Node {
  TermKind kind;
  std::string name;  // kVar, kConst; hint for kLam
  Type ty;           // leaf type or binder type
  Nominal nom;       // kNominal
  int index = 0;     // kBound
  Term a, b;         // kLam: a = body; kApp: a = fun, b = arg
};

Term Term::var(std::string name, Type ty) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::kVar;
  n->name = std::move(name);
  n->ty = std::move(ty);
  return Term(std::move(n));
}

Term Term::cnst(std::string name, Type ty) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::kConst;
  n->name = std::move(name);
  n->ty = std::move(ty);
  return Term(std::move(n));
}

Term Term::nominal(Nominal nom) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::kNominal;
  n->ty = nom.ty;
  n->nom = std::move(nom);
  return Term(std::move(n));
}

Term Term::bound(int index) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::kBound;
  n->index = index;
  return Term(std::move(n));
}

Term Term::lam(std::string hint, Type binder_ty, Term body) {
  assert(!body.is_null());
  auto n = std::make_shared<Node>();
  n->kind = TermKind::kLam;
  n->name = std::move(hint);
  n->ty = std::move(binder_ty);
  n->a = std::move(body);
  return Term(std::move(n));
}

Term Term::app(Term fun, Term arg) {
  assert(!fun.is_null() && !arg.is_null());
  auto n = std::make_shared<Node>();
  n->kind = TermKind::kApp;
  n->a = std::move(fun);
  n->b = std::move(arg);
  return Term(std::move(n));
}

Term Term::apps(Term fun, const std::vector<Term>& args) {
  Term t = std::move(fun);
  for (const Term& a : args) t = app(t, a);
  return t;
}

TermKind Term::kind() const {
  assert(node_);
  return node_->kind;
}

const std::string& Term::name() const { return node_->name; }
const Type& Term::leaf_type() const { return node_->ty; }
const Nominal& Term::nominal_of() const { return node_->nom; }
int Term::index() const { return node_->index; }
const std::string& Term::hint() const { return node_->name; }
const Type& Term::binder_type() const { return node_->ty; }
Term Term::body() const { return node_->a; }
Term Term::fun() const { return node_->a; }
Term Term::arg() const { return node_->b; }

Term Term::head() const {
  Term t = *this;
  while (t.kind() == TermKind::kApp) t = t.fun();
  return t;
}

std::vector<Term> Term::spine_args() const {
  std::vector<Term> out;
  Term t = *this;
  while (t.kind() == TermKind::kApp) {
    out.push_back(t.arg());
    t = t.fun();
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case TermKind::kVar:
    case TermKind::kConst:
      return name() == other.name() && leaf_type() == other.leaf_type();
    case TermKind::kNominal:
      return nominal_of() == other.nominal_of();
    case TermKind::kBound:
      return index() == other.index();
    case TermKind::kLam:
      return binder_type() == other.binder_type() && body() == other.body();
    case TermKind::kApp:
      return fun() == other.fun() && arg() == other.arg();
  }
  return false;
}

// -- Typing --------------------------------------------------------------

Type type_of(const Term& t, std::vector<Type> env) {
  switch (t.kind()) {
    case TermKind::kVar:
    case TermKind::kConst:
    case TermKind::kNominal:
      return t.leaf_type();
    case TermKind::kBound: {
      int i = t.index();
      if (i < 0 || i >= static_cast<int>(env.size()))
        throw TypeError("unbound de Bruijn index " + std::to_string(i));
      return env[env.size() - 1 - i];
    }
    case TermKind::kLam: {
      env.push_back(t.binder_type());
      Type body = type_of(t.body(), std::move(env));
      return Type::arrow(t.binder_type(), body);
    }
    case TermKind::kApp: {
      Type f = type_of(t.fun(), env);
      Type a = type_of(t.arg(), env);
      if (!f.is_arrow() || f.arg() != a)
        throw TypeError("ill-typed application: " + f.str() + " to " + a.str());
      return f.result();
    }
  }
  throw TypeError("null term");
}

// -- Normalization -------------------------------------------------------

Term shift(const Term& t, int d, int cutoff) {
  if (d == 0) return t;
  switch (t.kind()) {
    case TermKind::kVar:
    case TermKind::kConst:
    case TermKind::kNominal:
      return t;
    case TermKind::kBound:
      return t.index() >= cutoff ? Term::bound(t.index() + d) : t;
    case TermKind::kLam:
      return Term::lam(t.hint(), t.binder_type(), shift(t.body(), d, cutoff + 1));
    case TermKind::kApp:
      return Term::app(shift(t.fun(), d, cutoff), shift(t.arg(), d, cutoff));
  }
  return t;
}

namespace {

Term subst_bound(const Term& t, int j, const Term& arg) {
  switch (t.kind()) {
    case TermKind::kVar:
    case TermKind::kConst:
    case TermKind::kNominal:
      return t;
    case TermKind::kBound:
      if (t.index() == j) return shift(arg, j);
      return t.index() > j ? Term::bound(t.index() - 1) : t;
    case TermKind::kLam:
      return Term::lam(t.hint(), t.binder_type(), subst_bound(t.body(), j + 1, arg));
    case TermKind::kApp:
      return Term::app(subst_bound(t.fun(), j, arg), subst_bound(t.arg(), j, arg));
  }
  return t;
}

}  // namespace

Term open_body(const Term& body, const Term& arg) { return subst_bound(body, 0, arg); }

Term beta_normal(const Term& t) {
  switch (t.kind()) {
    case TermKind::kVar:
    case TermKind::kConst:
    case TermKind::kNominal:
    case TermKind::kBound:
      return t;
    case TermKind::kLam:
      return Term::lam(t.hint(), t.binder_type(), beta_normal(t.body()));
    case TermKind::kApp: {
      Term f = beta_normal(t.fun());
      Term a = beta_normal(t.arg());
      if (f.kind() == TermKind::kLam) return beta_normal(open_body(f.body(), a));
      return Term::app(f, a);
    }
  }
  return t;
}

namespace {

// Eta-long form of a beta-normal term at the given type.
Term eta_long(const Term& t, const Type& ty, std::vector<Type>& env) {
  if (ty.is_arrow()) {
    if (t.kind() == TermKind::kLam) {
      env.push_back(t.binder_type());
      Term body = eta_long(t.body(), ty.result(), env);
      env.pop_back();
      return Term::lam(t.hint(), t.binder_type(), body);
    }
    env.push_back(ty.arg());
    Term body =
        eta_long(Term::app(shift(t, 1), Term::bound(0)), ty.result(), env);
    env.pop_back();
    return Term::lam("x", ty.arg(), body);
  }
  // Base type: expand each spine argument at the head's argument type.
  Term h = t.head();
  std::vector<Term> as = t.spine_args();
  Type hty;
  if (h.kind() == TermKind::kBound) {
    hty = env[env.size() - 1 - h.index()];
  } else {
    hty = h.leaf_type();
  }
  Term out = h;
  for (Term& a : as) {
    if (!hty.is_arrow()) throw TypeError("over-applied head in eta expansion");
    out = Term::app(out, eta_long(a, hty.arg(), env));
    hty = hty.result();
  }
  return out;
}

}  // namespace

Term normalize(const Term& t) {
  Term b = beta_normal(t);
  Type ty = type_of(b);
  std::vector<Type> env;
  return eta_long(b, ty, env);
}

// -- Free structure ------------------------------------------------------

namespace {

template <typename F>
void walk_leaves(const Term& t, F&& f) {
  switch (t.kind()) {
    case TermKind::kVar:
    case TermKind::kConst:
    case TermKind::kNominal:
      f(t);
      return;
    case TermKind::kBound:
      return;
    case TermKind::kLam:
      walk_leaves(t.body(), f);
      return;
    case TermKind::kApp:
      walk_leaves(t.fun(), f);
      walk_leaves(t.arg(), f);
      return;
  }
}

}  // namespace

std::set<Nominal> support(const Term& t) {
  std::set<Nominal> out;
  walk_leaves(t, [&](const Term& leaf) {
    if (leaf.kind() == TermKind::kNominal) out.insert(leaf.nominal_of());
  });
  return out;
}

std::map<std::string, Type> free_vars(const Term& t) {
  std::map<std::string, Type> out;
  walk_leaves(t, [&](const Term& leaf) {
    if (leaf.kind() == TermKind::kVar) out.emplace(leaf.name(), leaf.leaf_type());
  });
  return out;
}

bool has_free_var(const Term& t, const std::string& name) {
  bool found = false;
  walk_leaves(t, [&](const Term& leaf) {
    if (leaf.kind() == TermKind::kVar && leaf.name() == name) found = true;
  });
  return found;
}

bool contains_const(const Term& t, const std::string& name) {
  bool found = false;
  walk_leaves(t, [&](const Term& leaf) {
    if (leaf.kind() == TermKind::kConst && leaf.name() == name) found = true;
  });
  return found;
}

Term replace_const(const Term& t, const std::string& name, const Term& repl) {
  switch (t.kind()) {
    case TermKind::kConst:
      if (t.name() == name) return repl;
      return t;
    case TermKind::kVar:
    case TermKind::kNominal:
    case TermKind::kBound:
      return t;
    case TermKind::kLam:
      // repl is closed w.r.t. bound variables, so no shifting is needed.
      return Term::lam(t.hint(), t.binder_type(), replace_const(t.body(), name, repl));
    case TermKind::kApp:
      return Term::app(replace_const(t.fun(), name, repl),
                       replace_const(t.arg(), name, repl));
  }
  return t;
}

namespace {

Term replace_leaf(const Term& t, const Term& leaf, int target, int depth) {
  switch (t.kind()) {
    case TermKind::kVar:
    case TermKind::kConst:
    case TermKind::kNominal:
      if (t == leaf) return Term::bound(depth + target);
      return t;
    case TermKind::kBound:
      return t;
    case TermKind::kLam:
      return Term::lam(t.hint(), t.binder_type(),
                       replace_leaf(t.body(), leaf, target, depth + 1));
    case TermKind::kApp:
      return Term::app(replace_leaf(t.fun(), leaf, target, depth),
                       replace_leaf(t.arg(), leaf, target, depth));
  }
  return t;
}

Type leaf_ty(const Term& leaf) { return leaf.leaf_type(); }

}  // namespace

Term abstract_leaves(const Term& t, const std::vector<Term>& leaves,
                     const std::vector<std::string>& hints) {
  int n = static_cast<int>(leaves.size());
  Term body = t;
  // leaf i becomes index n-1-i at the top of the new binder block.
  for (int i = 0; i < n; ++i) body = replace_leaf(body, leaves[i], n - 1 - i, 0);
  for (int i = n - 1; i >= 0; --i) {
    std::string hint = i < static_cast<int>(hints.size()) ? hints[i] : "x";
    body = Term::lam(hint, leaf_ty(leaves[i]), body);
  }
  return body;
}

namespace {

bool uses_index(const Term& t, int j) {
  switch (t.kind()) {
    case TermKind::kVar:
    case TermKind::kConst:
    case TermKind::kNominal:
      return false;
    case TermKind::kBound:
      return t.index() == j;
    case TermKind::kLam:
      return uses_index(t.body(), j + 1);
    case TermKind::kApp:
      return uses_index(t.fun(), j) || uses_index(t.arg(), j);
  }
  return false;
}

}  // namespace

std::optional<Term> strip_eta_atom(const Term& t) {
  Term cur = t;
  int depth = 0;
  while (cur.kind() == TermKind::kLam) {
    Term b = cur.body();
    // Peel one eta layer: body must be (f (bound 0)) with f ignoring the
    // binder; successive layers use increasing inner indices, so peel from
    // the innermost application instead.
    // Count binders, then require body = h applied to bound(k-1)..bound(0).
    ++depth;
    cur = b;
  }
  if (depth == 0) {
    switch (t.kind()) {
      case TermKind::kVar:
      case TermKind::kConst:
      case TermKind::kNominal:
      case TermKind::kBound:
        return t;
      default:
        return std::nullopt;
    }
  }
  std::vector<Term> args = cur.spine_args();
  Term h = cur.head();
  if (h.kind() == TermKind::kLam) return std::nullopt;
  if (static_cast<int>(args.size()) != depth) return std::nullopt;
  for (int i = 0; i < depth; ++i) {
    auto inner = strip_eta_atom(args[i]);
    if (!inner || inner->kind() != TermKind::kBound ||
        inner->index() != depth - 1 - i)
      return std::nullopt;
  }
  if (h.kind() == TermKind::kBound) {
    if (h.index() < depth) return std::nullopt;
    return Term::bound(h.index() - depth);
  }
  for (int j = 0; j < depth; ++j)
    if (uses_index(h, j)) return std::nullopt;
  return shift(h, -depth, depth);
}

Nominal fresh_nominal(const Type& ty, const std::set<Nominal>& avoid) {
  int i = 0;
  while (avoid.count(Nominal{ty, i})) ++i;
  return Nominal{ty, i};
}

std::string fresh_name(const std::string& stem, const std::set<std::string>& avoid) {
  if (!avoid.count(stem)) return stem;
  for (int i = 1;; ++i) {
    std::string cand = stem + std::to_string(i);
    if (!avoid.count(cand)) return cand;
  }
}

}  // namespace gk
