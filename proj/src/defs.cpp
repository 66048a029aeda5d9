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

#include <algorithm>
#include <functional>

#include "gk/error.hpp"

namespace gk {

const Definition& DefTable::get(const std::string& p) const {
  auto it = map_.find(p);
  if (it == map_.end()) throw Error("undefined predicate " + p);
  return it->second;
}

int DefTable::level(const std::string& p) const {
  auto it = map_.find(p);
  return it == map_.end() ? 0 : it->second.level;
}

namespace {

// Non-logical constants with prop-target types occurring in a formula.
void collect_pred_consts(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::kConst:
      if (!is_logical_const(t.name()) && t.leaf_type().target().is_prop())
        out.insert(t.name());
      return;
    case TermKind::kLam:
      collect_pred_consts(t.body(), out);
      return;
    case TermKind::kApp:
      collect_pred_consts(t.fun(), out);
      collect_pred_consts(t.arg(), out);
      return;
    default:
      return;
  }
}

bool simple_patterns(const Definition& def) {
  if (def.clauses.size() != 1) return false;
  const Clause& c = def.clauses[0];
  if (!c.zs.empty()) return false;
  if (c.head_args.size() != c.xs.size()) return false;
  std::set<std::string> seen;
  for (size_t i = 0; i < c.head_args.size(); ++i) {
    const Term& a = c.head_args[i];
    if (a.kind() != TermKind::kVar) return false;
    if (!seen.insert(a.name()).second) return false;
  }
  return seen.size() == c.xs.size();
}

}  // namespace

Term Definition::clause_head(int i) const {
  const Clause& c = clauses[i];
  Term h = head_const.is_null() ? Term::cnst(pred, ty) : head_const;
  std::vector<Term> zvars;
  Term t = Term::apps(h, c.head_args);
  for (const auto& [zn, zt] : c.zs) zvars.push_back(Term::var(zn, zt));
  return normalize(abstract_leaves(t, zvars));
}

void DefTable::add(Definition def) {
  const std::string& p = def.pred;
  if (map_.count(p)) throw StratificationError("predicate " + p + " defined twice");
  {
    auto it = pending_.find(p);
    if (it != pending_.end())
      throw StratificationError("mutual recursion between " + p + " and " +
                                it->second);
  }
  if (!def.ty.target().is_prop())
    throw StratificationError("defined predicate must target prop");

  std::vector<Type> arg_tys = def.ty.args();
  def.recursive = false;
  for (const Clause& c : def.clauses) {
    if (c.head_args.size() != arg_tys.size())
      throw StratificationError(p + ": clause head arity mismatch");
    std::set<std::string> xnames, znames;
    for (const auto& [n, t] : c.xs) xnames.insert(n);
    for (const auto& [n, t] : c.zs) znames.insert(n);
    for (size_t i = 0; i < c.head_args.size(); ++i) {
      if (!support(c.head_args[i]).empty())
        throw StratificationError(p + ": clause head mentions a nominal constant");
      if (!(type_of(c.head_args[i]) == arg_tys[i]))
        throw StratificationError(p + ": clause head argument type mismatch");
    }
    if (!support(c.body).empty())
      throw StratificationError(p + ": clause body mentions a nominal constant");
    for (const auto& [v, vt] : free_vars(c.body)) {
      (void)vt;
      if (znames.count(v))
        throw StratificationError(p + ": nabla-bound " + v + " occurs in the body");
      if (!xnames.count(v))
        throw StratificationError(p + ": unbound variable " + v + " in clause body");
    }
    if (contains_const(c.body, p)) def.recursive = true;
  }

  // Level inference. The top-plug bound treats occurrences of p as level
  // 0, which matches plugging the body with a vacuous truth.
  auto base_lvl = [&](const std::string& q) { return level(q); };
  int l0 = 0;
  for (const Clause& c : def.clauses) {
    auto plugged = [&](const std::string& q) { return q == p ? 0 : base_lvl(q); };
    l0 = std::max(l0, lvl(c.body, plugged));
  }
  bool strict = def.recursive || def.flavor != Flavor::Plain;
  def.level = strict ? l0 + 1 : l0;
  // Monotone bound: lvl(B p xs) <= lvl(p).
  for (const Clause& c : def.clauses) {
    auto with_p = [&](const std::string& q) {
      return q == p ? def.level : base_lvl(q);
    };
    if (lvl(c.body, with_p) > def.level)
      throw StratificationError(p + ": clause body level exceeds predicate level");
  }

  if (def.flavor == Flavor::CoInductive) {
    for (const Clause& c : def.clauses)
      if (!c.zs.empty())
        throw StratificationError(
            p + ": coinductive clauses must not have a nabla prefix");
  }

  // Build the translated single-clause form.
  if (simple_patterns(def)) {
    const Clause& c = def.clauses[0];
    std::vector<Term> xv;
    for (const Term& a : c.head_args) xv.push_back(a);
    def.translated = normalize(abstract_leaves(c.body, xv));
    def.head_const = Term();
  } else {
    // Tupling constant p# : arg types -> a dedicated sort.
    Type dsort = Type::base("#d_" + p);
    def.head_const = Term::cnst("#" + p, Type::arrow(arg_tys, dsort));
    std::vector<Term> ys;
    std::set<std::string> used;
    for (const Clause& c : def.clauses)
      for (const auto& [n, t] : c.xs) used.insert(n);
    for (size_t i = 0; i < arg_tys.size(); ++i) {
      std::string yn = fresh_name("y" + std::to_string(i), used);
      used.insert(yn);
      ys.push_back(Term::var(yn, arg_tys[i]));
    }
    Term body;
    for (size_t ci = 0; ci < def.clauses.size(); ++ci) {
      const Clause& c = def.clauses[ci];
      Term lhs = def.clause_head(static_cast<int>(ci));
      Term rhs = Term::apps(def.head_const, ys);
      Term disj = f_and(f_nabs(lhs, rhs), c.body);
      // Close over the clause variables.
      std::vector<Term> xv;
      for (const auto& [n, t] : c.xs) xv.push_back(Term::var(n, t));
      for (auto it = xv.rbegin(); it != xv.rend(); ++it)
        disj = f_quant("exists", abstract_leaves(disj, {*it}, {it->name()}));
      body = body.is_null() ? disj : f_or(body, disj);
    }
    if (body.is_null()) body = f_bot();
    def.translated = normalize(abstract_leaves(body, ys));
  }

  // Record abstract predicate references for mutual recursion detection.
  std::set<std::string> refs;
  for (const Clause& c : def.clauses) collect_pred_consts(c.body, refs);
  for (const std::string& q : refs)
    if (q != p && !map_.count(q)) pending_.emplace(q, p);

  map_.emplace(p, std::move(def));
}

Term unfold_translated(const Definition& def, const std::vector<Term>& args) {
  return normalize(Term::apps(def.translated, args));
}

Term unfold_with(const Definition& def, const Term& s,
                 const std::vector<Term>& args) {
  Term body = replace_const(def.translated, def.pred, s);
  return normalize(Term::apps(body, args));
}

}  // namespace gk
