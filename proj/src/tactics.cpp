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

#include "gk/tactics.hpp"

#include <algorithm>
#include <climits>
#include <set>

#include "gk/error.hpp"
#include "gk/nabs.hpp"

namespace gk {

bool replay_tree(const Sequent& seq, const TraceNode& tree,
                 const DefTable& defs) {
  if (!tree.filled) return false;
  std::vector<Sequent> prems;
  try {
    prems = apply_rule(seq, tree.rule, defs);
  } catch (const Error&) {
    return false;
  }
  if (prems.size() != tree.children.size()) return false;
  for (size_t i = 0; i < prems.size(); ++i)
    if (!replay_tree(prems[i], tree.children[i], defs)) return false;
  return true;
}

size_t tree_size(const TraceNode& tree) {
  size_t n = 1;
  for (const TraceNode& c : tree.children) n += tree_size(c);
  return n;
}

ProofState::ProofState(Term goal, const DefTable& defs,
                       const std::map<std::string, Term>& lemmas)
    : defs_(defs), lemmas_(lemmas) {
  statement_ = normalize(std::move(goal));
  check_formula(statement_);
  root_ = std::make_unique<TraceNode>();
  Goal g;
  g.seq.goal = statement_;
  for (const auto& [v, vt] : free_vars(statement_)) g.seq.sig.emplace(v, vt);
  g.hole = root_.get();
  goals_.push_back(std::move(g));
}

const Sequent& ProofState::current() const {
  if (goals_.empty()) throw TacticError("no open goals");
  return goals_.front().seq;
}

const std::vector<std::string>& ProofState::labels() const {
  if (goals_.empty()) throw TacticError("no open goals");
  return goals_.front().labels;
}

const std::vector<std::string>& ProofState::labels_of(size_t goal) const {
  if (goal >= goals_.size()) throw TacticError("no such goal");
  return goals_[goal].labels;
}

int ProofState::hyp_index(const std::string& label) const {
  const auto& ls = labels();
  for (size_t i = 0; i < ls.size(); ++i)
    if (ls[i] == label) return static_cast<int>(i);
  return -1;
}

const std::string& ProofState::label_at(int hyp) const {
  const auto& ls = labels();
  if (hyp < 0 || hyp >= static_cast<int>(ls.size()))
    throw TacticError("no such hypothesis");
  return ls[hyp];
}

std::string ProofState::last_label() const {
  const auto& ls = labels();
  if (ls.empty()) throw TacticError("no hypotheses");
  return ls.back();
}

std::string ProofState::fresh_label() {
  return "H" + std::to_string(++counter_);
}

std::vector<std::string> ProofState::child_labels(const Goal& g,
                                                  const Rule& rule,
                                                  size_t premise,
                                                  size_t nhyps) {
  std::vector<std::string> out = g.labels;
  auto drop = [&](int h) {
    if (h >= 0 && h < static_cast<int>(out.size())) out.erase(out.begin() + h);
  };
  switch (rule.tag) {
    case Rule::Tag::Cut:
      if (premise == 1) out.push_back(fresh_label());
      break;
    case Rule::Tag::CL:
    case Rule::Tag::ImpR:
      out.push_back(fresh_label());
      break;
    case Rule::Tag::ImpL:
      if (premise == 0) drop(rule.hyp);
      break;
    case Rule::Tag::NabsL:
      drop(rule.hyp);
      break;
    case Rule::Tag::DefLp:
      drop(rule.hyp);
      out.push_back(fresh_label());
      break;
    case Rule::Tag::IL:
    case Rule::Tag::ILp:
    case Rule::Tag::CIR:
      // Inner premises carry their own fresh hypotheses; the main premise
      // keeps the context.
      if (nhyps != out.size()) out.clear();
      break;
    default:
      break;
  }
  while (out.size() < nhyps) out.push_back(fresh_label());
  while (out.size() > nhyps) out.pop_back();
  return out;
}

void ProofState::apply(const Rule& rule) {
  if (goals_.empty()) throw TacticError("no open goals");
  if (rule.tag == Rule::Tag::Lemma) {
    auto it = lemmas_.find(rule.name);
    if (it == lemmas_.end())
      throw TacticError("unknown lemma " + rule.name);
    if (!(normalize(rule.witness) == it->second))
      throw TacticError("lemma " + rule.name + " proves a different statement");
  }
  Goal g = goals_.front();
  std::vector<Sequent> prems = apply_rule(g.seq, rule, defs_);
  goals_.pop_front();
  g.hole->filled = true;
  g.hole->rule = rule;
  g.hole->children.resize(prems.size());
  std::vector<Goal> next(prems.size());
  for (size_t i = 0; i < prems.size(); ++i) {
    next[i].labels = child_labels(g, rule, i, prems[i].hyps.size());
    next[i].seq = std::move(prems[i]);
    next[i].hole = &g.hole->children[i];
  }
  for (size_t i = next.size(); i-- > 0;) goals_.push_front(std::move(next[i]));
}

void ProofState::splice(const TraceNode& tree) {
  if (!tree.filled) throw TacticError("derivation has an open goal");
  size_t before = goals_.size();
  apply(tree.rule);
  size_t added = goals_.size() + 1 - before;
  if (added != tree.children.size())
    throw TacticError("derivation shape mismatch");
  for (const TraceNode& c : tree.children) splice(c);
}

void ProofState::rotate() {
  if (goals_.empty()) throw TacticError("no open goals");
  Goal g = std::move(goals_.front());
  goals_.pop_front();
  goals_.push_back(std::move(g));
}

namespace {

Rule mk(Rule::Tag tag, int hyp = -1, int side = 1) {
  Rule r;
  r.tag = tag;
  r.hyp = hyp;
  r.side = side;
  return r;
}

int must_hyp(const ProofState& st, const std::string& label) {
  int h = st.hyp_index(label);
  if (h < 0) throw TacticError("no hypothesis " + label);
  return h;
}

bool decomposable(FKind k) {
  return k == FKind::Bot || k == FKind::And || k == FKind::Or ||
         k == FKind::Ex || k == FKind::Nabla || k == FKind::Nabs;
}

// Invertibly break up every pending hypothesis across all goals created in
// the process. Restores goal order on exit, with the produced goals at the
// front of the queue.
void decompose(ProofState& st, std::set<std::string> pending, size_t mine = 1) {
  size_t done = 0;
  while (mine > 0 && !st.done()) {
    int h = -1;
    FKind k{};
    for (size_t i = 0; i < st.labels().size(); ++i) {
      if (!pending.count(st.labels()[i])) continue;
      FKind ki = classify(st.current().hyps[i]).kind;
      if (decomposable(ki)) {
        h = static_cast<int>(i);
        k = ki;
        break;
      }
    }
    if (h < 0) {
      st.rotate();
      ++done;
      --mine;
      continue;
    }
    size_t before = st.num_goals();
    switch (k) {
      case FKind::Bot:
        st.apply(mk(Rule::Tag::BotL, h));
        break;
      case FKind::And: {
        st.apply(mk(Rule::Tag::CL, h));
        std::string dup = st.last_label();
        pending.insert(dup);
        st.apply(mk(Rule::Tag::AndL, h, 1));
        st.apply(mk(Rule::Tag::AndL, must_hyp(st, dup), 2));
        break;
      }
      case FKind::Or:
        st.apply(mk(Rule::Tag::OrL, h));
        break;
      case FKind::Ex:
        st.apply(mk(Rule::Tag::ExL, h));
        break;
      case FKind::Nabla:
        st.apply(mk(Rule::Tag::NablaL, h));
        break;
      case FKind::Nabs:
        st.apply(mk(Rule::Tag::NabsL, h));
        break;
      default:
        throw TacticError("not decomposable");
    }
    mine += static_cast<size_t>(static_cast<long>(st.num_goals()) -
                                static_cast<long>(before));
  }
  // Queue is now [others..., done...]; bring the finished goals forward.
  size_t others = st.num_goals() - done;
  for (size_t i = 0; i < others; ++i) st.rotate();
}

}  // namespace

void t_intro(ProofState& st) {
  FView v = classify(st.current().goal);
  switch (v.kind) {
    case FKind::Imp: st.apply(mk(Rule::Tag::ImpR)); return;
    case FKind::All: st.apply(mk(Rule::Tag::AllR)); return;
    case FKind::Nabla: st.apply(mk(Rule::Tag::NablaR)); return;
    default: throw TacticError("nothing to introduce");
  }
}

void t_intros(ProofState& st) {
  while (!st.done()) {
    FKind k = classify(st.current().goal).kind;
    if (k != FKind::Imp && k != FKind::All && k != FKind::Nabla) return;
    t_intro(st);
  }
}

void t_case(ProofState& st, const std::string& label, bool translated) {
  int h = must_hyp(st, label);
  FView v = classify(st.current().hyps[h]);
  if (v.kind == FKind::Atom) {
    std::set<std::string> parent(st.labels().begin(), st.labels().end());
    size_t before = st.num_goals();
    if (translated)
      st.apply(mk(Rule::Tag::DefL, h));
    else
      st.apply(mk(Rule::Tag::DefLp, h));
    size_t added = st.num_goals() + 1 - before;
    std::set<std::string> pending;
    for (size_t j = 0; j < added; ++j)
      for (const std::string& l : st.labels_of(j))
        if (!parent.count(l)) pending.insert(l);
    if (translated) pending.insert(label);
    decompose(st, pending, added);
    return;
  }
  if (!decomposable(v.kind)) throw TacticError("cannot case on " + label);
  decompose(st, {label});
}

void t_induction(ProofState& st, const std::string& label, const Term& inv,
                 bool translated) {
  Rule r = mk(translated ? Rule::Tag::IL : Rule::Tag::ILp,
              must_hyp(st, label));
  r.witness = inv;
  st.apply(r);
}

void t_coinduction(ProofState& st, const Term& inv) {
  Rule r = mk(Rule::Tag::CIR);
  r.witness = inv;
  st.apply(r);
}

void t_exists(ProofState& st, const Term& witness) {
  Rule r = mk(Rule::Tag::ExR);
  r.witness = witness;
  st.apply(r);
}

void t_split(ProofState& st) { st.apply(mk(Rule::Tag::AndR)); }
void t_left(ProofState& st) { st.apply(mk(Rule::Tag::OrR, -1, 1)); }
void t_right(ProofState& st) { st.apply(mk(Rule::Tag::OrR, -1, 2)); }

void t_assert(ProofState& st, const Term& f) {
  Rule r = mk(Rule::Tag::Cut);
  r.witness = f;
  st.apply(r);
}

void t_apply(ProofState& st, const std::string& label,
             const std::vector<Term>& witnesses,
             const std::vector<std::string>& to) {
  std::string work = label;
  if (st.hyp_index(label) < 0) {
    auto it = st.lemmas().find(label);
    if (it == st.lemmas().end()) throw TacticError("no hypothesis " + label);
    // Bring the lemma into the context through a cut discharged by it.
    Rule cut = mk(Rule::Tag::Cut);
    cut.witness = it->second;
    st.apply(cut);
    Rule lem = mk(Rule::Tag::Lemma);
    lem.witness = it->second;
    lem.name = label;
    st.apply(lem);
    work = st.last_label();
  } else {
    st.apply(mk(Rule::Tag::CL, st.hyp_index(label)));
    work = st.last_label();
  }
  for (const Term& w : witnesses) {
    int h = must_hyp(st, work);
    if (classify(st.current().hyps[h]).kind != FKind::All)
      throw TacticError("too many instantiation witnesses");
    Rule r = mk(Rule::Tag::AllL, h);
    r.witness = w;
    st.apply(r);
  }
  size_t used = 0;
  while (true) {
    int h = must_hyp(st, work);
    FView v = classify(st.current().hyps[h]);
    if (v.kind != FKind::Imp) break;
    st.apply(mk(Rule::Tag::ImpL, h));
    // Close the antecedent premise, by a named hypothesis when given.
    int closer = -1;
    if (used < to.size()) {
      closer = must_hyp(st, to[used]);
      ++used;
    } else {
      for (size_t i = 0; i < st.current().hyps.size(); ++i)
        if (perm_equiv(st.current().hyps[i], st.current().goal)) {
          closer = static_cast<int>(i);
          break;
        }
    }
    if (closer < 0) throw TacticError("cannot discharge a premise of " + label);
    st.apply(mk(Rule::Tag::Id, closer));
  }
}

void t_unfold(ProofState& st, int clause, bool translated) {
  if (translated) {
    st.apply(mk(Rule::Tag::DefR));
    return;
  }
  FView v = classify(st.current().goal);
  if (v.kind != FKind::Atom) throw TacticError("goal is not a defined atom");
  size_t nclauses = 0;
  {
    if (v.pred.kind() != TermKind::kConst || !st.defs().defined(v.pred.name()))
      throw TacticError("goal is not a defined atom");
    nclauses = st.defs().get(v.pred.name()).clauses.size();
  }
  for (size_t ci = 0; ci < nclauses; ++ci) {
    if (clause >= 0 && ci != static_cast<size_t>(clause)) continue;
    std::vector<Subst> cands =
        defrp_candidates(st.current(), static_cast<int>(ci), st.defs());
    if (cands.empty()) continue;
    Rule r = mk(Rule::Tag::DefRp);
    r.clause = static_cast<int>(ci);
    r.subst = cands[0];
    st.apply(r);
    return;
  }
  throw TacticError("no clause matches the goal");
}

void t_lemma(ProofState& st, const std::string& name) {
  auto it = st.lemmas().find(name);
  if (it == st.lemmas().end()) throw TacticError("unknown lemma " + name);
  Rule r = mk(Rule::Tag::Lemma);
  r.witness = it->second;
  r.name = name;
  st.apply(r);
}

namespace {

// Closed subterms of the sequent with the requested type, used as witness
// candidates during search.
void collect_typed(const Term& t, const Type& ty, std::vector<Term>& out);

bool has_free_bound(const Term& t, int depth) {
  switch (t.kind()) {
    case TermKind::kBound: return t.index() >= depth;
    case TermKind::kLam: return has_free_bound(t.body(), depth + 1);
    case TermKind::kApp:
      return has_free_bound(t.fun(), depth) || has_free_bound(t.arg(), depth);
    default: return false;
  }
}

void push_unique(std::vector<Term>& out, const Term& t) {
  for (const Term& u : out)
    if (u == t) return;
  out.push_back(t);
}

void collect_typed(const Term& t, const Type& ty, std::vector<Term>& out) {
  if (out.size() >= 24) return;
  if (!has_free_bound(t, 0)) {
    bool logical = t.kind() == TermKind::kConst && is_logical_const(t.name());
    if (!logical) {
      Type tt = type_of(t);
      if (tt == ty && !tt.contains_prop()) push_unique(out, t);
    }
  }
  switch (t.kind()) {
    case TermKind::kLam: collect_typed(t.body(), ty, out); break;
    case TermKind::kApp:
      collect_typed(t.fun(), ty, out);
      collect_typed(t.arg(), ty, out);
      break;
    default: break;
  }
}

std::vector<Term> witness_candidates(const Sequent& seq, const Type& ty) {
  std::vector<Term> out;
  for (const Term& h : seq.hyps) collect_typed(h, ty, out);
  collect_typed(seq.goal, ty, out);
  std::set<Nominal> supp;
  for (const Term& h : seq.hyps)
    for (const Nominal& c : support(h)) supp.insert(c);
  for (const Nominal& c : support(seq.goal)) supp.insert(c);
  for (const Nominal& c : supp)
    if (c.ty == ty) push_unique(out, Term::nominal(c));
  if (out.empty() && ty.is_base()) push_unique(out, Term::nominal(ty, 0));
  return out;
}

struct Searcher {
  const DefTable& defs;
  const std::map<std::string, Term>& lemmas;

  bool expand(const Sequent& seq, const Rule& r, int depth, TraceNode& out) {
    std::vector<Sequent> prems;
    try {
      prems = apply_rule(seq, r, defs);
    } catch (const Error&) {
      return false;
    }
    out.filled = true;
    out.rule = r;
    out.children.assign(prems.size(), TraceNode{});
    for (size_t i = 0; i < prems.size(); ++i)
      if (!go(prems[i], depth, out.children[i])) {
        out.filled = false;
        out.children.clear();
        return false;
      }
    return true;
  }

  bool go(const Sequent& seq, int depth, TraceNode& out) {
    FView g = classify(seq.goal);
    // Closers.
    if (g.kind == FKind::Top) return expand(seq, mk(Rule::Tag::TopR), depth, out);
    for (size_t i = 0; i < seq.hyps.size(); ++i)
      if (perm_equiv(seq.hyps[i], seq.goal))
        return expand(seq, mk(Rule::Tag::Id, static_cast<int>(i)), depth, out);
    for (size_t i = 0; i < seq.hyps.size(); ++i)
      if (classify(seq.hyps[i]).kind == FKind::Bot)
        return expand(seq, mk(Rule::Tag::BotL, static_cast<int>(i)), depth, out);
    if (g.kind == FKind::Nabs && nabs_holds(g.a, g.b, g.degree))
      return expand(seq, mk(Rule::Tag::NabsR), depth, out);
    for (const auto& [name, f] : lemmas)
      if (perm_equiv(f, seq.goal)) {
        Rule r = mk(Rule::Tag::Lemma);
        r.witness = f;
        r.name = name;
        return expand(seq, r, depth, out);
      }
    // Invertible steps, no depth cost.
    for (size_t i = 0; i < seq.hyps.size(); ++i) {
      FView v = classify(seq.hyps[i]);
      int h = static_cast<int>(i);
      switch (v.kind) {
        case FKind::And: {
          // Keep both conjuncts: contract, then take one side each.
          std::vector<Sequent> p1 = apply_rule(seq, mk(Rule::Tag::CL, h), defs);
          Rule a1 = mk(Rule::Tag::AndL, h, 1);
          Rule a2 = mk(Rule::Tag::AndL,
                       static_cast<int>(p1[0].hyps.size()) - 1, 2);
          std::vector<Sequent> p2 = apply_rule(p1[0], a1, defs);
          std::vector<Sequent> p3 = apply_rule(p2[0], a2, defs);
          TraceNode inner;
          if (!go(p3[0], depth, inner)) return false;
          out.filled = true;
          out.rule = mk(Rule::Tag::CL, h);
          out.children.assign(1, TraceNode{});
          out.children[0].filled = true;
          out.children[0].rule = a1;
          out.children[0].children.assign(1, TraceNode{});
          out.children[0].children[0].filled = true;
          out.children[0].children[0].rule = a2;
          out.children[0].children[0].children.assign(1, std::move(inner));
          return true;
        }
        case FKind::Or: return expand(seq, mk(Rule::Tag::OrL, h), depth, out);
        case FKind::Ex: return expand(seq, mk(Rule::Tag::ExL, h), depth, out);
        case FKind::Nabla:
          return expand(seq, mk(Rule::Tag::NablaL, h), depth, out);
        case FKind::Nabs:
          return expand(seq, mk(Rule::Tag::NabsL, h), depth, out);
        default: break;
      }
    }
    switch (g.kind) {
      case FKind::Imp: return expand(seq, mk(Rule::Tag::ImpR), depth, out);
      case FKind::All: return expand(seq, mk(Rule::Tag::AllR), depth, out);
      case FKind::Nabla:
        return expand(seq, mk(Rule::Tag::NablaR), depth, out);
      case FKind::And: return expand(seq, mk(Rule::Tag::AndR), depth, out);
      default: break;
    }
    if (depth <= 0) return false;
    // Choice points.
    if (g.kind == FKind::Or) {
      if (expand(seq, mk(Rule::Tag::OrR, -1, 1), depth - 1, out)) return true;
      if (expand(seq, mk(Rule::Tag::OrR, -1, 2), depth - 1, out)) return true;
    }
    if (g.kind == FKind::Ex) {
      for (const Term& w : witness_candidates(seq, g.qty)) {
        Rule r = mk(Rule::Tag::ExR);
        r.witness = w;
        if (expand(seq, r, depth - 1, out)) return true;
      }
    }
    if (g.kind == FKind::Atom && g.pred.kind() == TermKind::kConst &&
        defs.defined(g.pred.name())) {
      const Definition& def = defs.get(g.pred.name());
      for (size_t ci = 0; ci < def.clauses.size(); ++ci) {
        std::vector<Subst> cands;
        try {
          cands = defrp_candidates(seq, static_cast<int>(ci), defs);
        } catch (const Error&) {
          continue;
        }
        for (Subst& th : cands) {
          Rule r = mk(Rule::Tag::DefRp);
          r.clause = static_cast<int>(ci);
          r.subst = std::move(th);
          if (expand(seq, r, depth - 1, out)) return true;
        }
      }
    }
    for (size_t i = 0; i < seq.hyps.size(); ++i) {
      FView v = classify(seq.hyps[i]);
      int h = static_cast<int>(i);
      if (v.kind == FKind::Atom && v.pred.kind() == TermKind::kConst &&
          defs.defined(v.pred.name())) {
        if (expand(seq, mk(Rule::Tag::DefLp, h), depth - 1, out)) return true;
      }
      if (v.kind == FKind::Imp) {
        if (expand(seq, mk(Rule::Tag::ImpL, h), depth - 1, out)) return true;
      }
      if (v.kind == FKind::All) {
        for (const Term& w : witness_candidates(seq, v.qty)) {
          Rule r = mk(Rule::Tag::AllL, h);
          r.witness = w;
          if (expand(seq, r, depth - 1, out)) return true;
        }
      }
    }
    return false;
  }
};

}  // namespace

std::optional<TraceNode> search_derivation(
    const Sequent& seq, int depth, const DefTable& defs,
    const std::map<std::string, Term>& lemmas) {
  Searcher s{defs, lemmas};
  TraceNode out;
  if (s.go(seq, depth, out)) return out;
  return std::nullopt;
}

bool t_search(ProofState& st, int depth) {
  auto tree = search_derivation(st.current(), depth, st.defs(), st.lemmas());
  if (!tree) return false;
  st.splice(*tree);
  return true;
}

}  // namespace gk
