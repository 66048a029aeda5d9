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

#ifndef GK_CALCULUS_HPP
#define GK_CALCULUS_HPP

#include <map>
#include <string>
#include <vector>

#include "gk/defs.hpp"
#include "gk/subst.hpp"

namespace gk {

// An intuitionistic sequent Sigma : Gamma |- C. All formulas are kept in
// beta-normal eta-long form.
struct Sequent {
  std::map<std::string, Type> sig;
  std::vector<Term> hyps;
  Term goal;
};

// A single inference step, identified by tag plus parameters. Proofs are
// validated exclusively by replaying rules through apply_rule.
struct Rule {
  enum class Tag {
    Id, Cut, CL, BotL, TopR,
    AndL, AndR, OrL, OrR, ImpL, ImpR,
    AllL, AllR, ExL, ExR, NablaL, NablaR,
    NabsR, NabsL,
    DefR, DefL, DefRp, DefLp,
    IL, ILp, CIR,
    Lemma,
  };
  Tag tag{};
  int hyp = -1;       // principal hypothesis index
  int side = 1;       // AndL / OrR: 1 or 2
  Term witness;       // ExR/AllL term, Cut formula, IL/ILp/CIR invariant,
                      // Lemma statement
  int clause = -1;    // DefRp clause index
  Subst subst;        // DefRp instantiation
  std::string name;   // Lemma name, for traces
};

const char* rule_tag_name(Rule::Tag t);

// Apply one rule; returns the premises in canonical order. Closing rules
// return no premises. Throws RuleError if the rule does not apply.
std::vector<Sequent> apply_rule(const Sequent& seq, const Rule& rule,
                                const DefTable& defs);

// The complete set of DefLp premises' instantiations for hypothesis h,
// exposed so tactics can inspect the case analysis.
std::vector<Subst> deflp_solutions(const Sequent& seq, int hyp,
                                   const DefTable& defs);

// Candidate instantiations for DefRp on the goal with the given clause.
std::vector<Subst> defrp_candidates(const Sequent& seq, int clause,
                                    const DefTable& defs);

}  // namespace gk

#endif  // GK_CALCULUS_HPP
