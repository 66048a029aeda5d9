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

#ifndef GK_SESSION_HPP
#define GK_SESSION_HPP

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "gk/parser.hpp"
#include "gk/tactics.hpp"

namespace gk {

struct SessionOptions {
  int depth = 5;          // default search depth
  bool translated = false;  // route case/unfold/induction through the
                            // single-clause translated form
  std::string trace_dir;  // write one JSON derivation per theorem
  bool quiet = false;
  bool color = false;     // ANSI colors in status lines
};

// Executes scripts: declarations, definitions, theorems with tactic
// proofs. Proved theorems become lemmas for later proofs.
class Session {
 public:
  explicit Session(SessionOptions opt = {});

  // Exit codes: 0 all theorems proved, 1 a proof failed or is incomplete,
  // 2 parse, typing, or stratification error.
  int run_file(const std::string& path, std::ostream& out = std::cout);
  int run_text(const std::string& text, const std::string& name,
               std::ostream& out = std::cout);

  // Interactive loop; prints the goal state after every step.
  int repl(std::istream& in, std::ostream& out);

  const std::map<std::string, Term>& lemmas() const { return lemmas_; }
  const DefTable& defs() const { return defs_; }
  const SymTab& symtab() const { return tab_; }

 private:
  // Executes one top level command; true when input remains.
  bool step(Parser& p, std::ostream& out, bool interactive);
  void run_tactic(const TacticCmd& cmd, std::ostream& out, bool interactive);
  void finish_theorem(std::ostream& out);
  void print_goals(std::ostream& out) const;

  SessionOptions opt_;
  SymTab tab_;
  DefTable defs_;
  std::map<std::string, Term> lemmas_;
  std::optional<ProofState> proof_;
  std::string proof_name_;
};

}  // namespace gk

#endif  // GK_SESSION_HPP
