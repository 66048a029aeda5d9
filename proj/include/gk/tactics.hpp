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

#ifndef GK_TACTICS_HPP
#define GK_TACTICS_HPP

#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gk/calculus.hpp"

namespace gk {

// A completed or partially completed derivation. Children follow the
// premise order of apply_rule. Unfilled nodes are open goals.
struct TraceNode {
  bool filled = false;
  Rule rule;
  std::vector<TraceNode> children;
};

// Replay a recorded derivation against a sequent through the kernel.
// Returns false when some rule fails to apply or the branching shape
// disagrees with the recorded tree.
bool replay_tree(const Sequent& seq, const TraceNode& tree,
                 const DefTable& defs);

size_t tree_size(const TraceNode& tree);

// Interactive proof construction. Goals form a queue; tactics act on the
// front goal. Every step goes through apply_rule, so a finished state
// carries a kernel-checked derivation.
class ProofState {
 public:
  ProofState(Term goal, const DefTable& defs,
             const std::map<std::string, Term>& lemmas);

  bool done() const { return goals_.empty(); }
  size_t num_goals() const { return goals_.size(); }
  const Sequent& current() const;
  const std::vector<std::string>& labels() const;
  const DefTable& defs() const { return defs_; }
  const std::map<std::string, Term>& lemmas() const { return lemmas_; }

  int hyp_index(const std::string& label) const;
  const std::string& label_at(int hyp) const;
  const std::vector<std::string>& labels_of(size_t goal) const;

  // Apply one rule to the front goal; its premises take its place at the
  // front of the queue. Returns the labels of hypotheses that are new in
  // each premise.
  void apply(const Rule& rule);

  // Replay a prebuilt derivation onto the front goal, checking every node.
  void splice(const TraceNode& tree);

  // Move the front goal to the back of the queue.
  void rotate();

  const TraceNode& trace() const { return *root_; }
  const Term& statement() const { return statement_; }

  // Label of the most recently introduced hypothesis of the front goal.
  std::string last_label() const;

 private:
  struct Goal {
    Sequent seq;
    std::vector<std::string> labels;
    TraceNode* hole;
  };

  std::string fresh_label();
  std::vector<std::string> child_labels(const Goal& g, const Rule& rule,
                                        size_t premise, size_t nhyps);

  const DefTable& defs_;
  const std::map<std::string, Term>& lemmas_;
  Term statement_;
  std::unique_ptr<TraceNode> root_;
  std::deque<Goal> goals_;
  int counter_ = 0;
};

// Named tactics. All throw TacticError on misuse.
void t_intro(ProofState& st);
void t_intros(ProofState& st);
void t_case(ProofState& st, const std::string& label, bool translated = false);
void t_induction(ProofState& st, const std::string& label, const Term& inv,
                 bool translated = false);
void t_coinduction(ProofState& st, const Term& inv);
void t_exists(ProofState& st, const Term& witness);
void t_split(ProofState& st);
void t_left(ProofState& st);
void t_right(ProofState& st);
void t_assert(ProofState& st, const Term& f);
void t_apply(ProofState& st, const std::string& label,
             const std::vector<Term>& witnesses,
             const std::vector<std::string>& to);
void t_unfold(ProofState& st, int clause = -1, bool translated = false);
void t_lemma(ProofState& st, const std::string& name);

// Bounded goal-directed search; returns true when the front goal closes.
// Depth is consumed at choice points only (disjunction and existential
// goals, unfolding, case analysis, implication and universal hypotheses).
bool t_search(ProofState& st, int depth);

// Standalone search used by t_search and by tests.
std::optional<TraceNode> search_derivation(const Sequent& seq, int depth,
                                           const DefTable& defs,
                                           const std::map<std::string, Term>& lemmas);

}  // namespace gk

#endif  // GK_TACTICS_HPP
