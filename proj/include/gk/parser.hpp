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

#ifndef GK_PARSER_HPP
#define GK_PARSER_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gk/defs.hpp"
#include "gk/term.hpp"

namespace gk {

// Declared sorts and constants visible to the elaborator.
struct SymTab {
  std::set<std::string> kinds;
  std::map<std::string, Type> consts;
};

// One proof-script step.
struct TacticCmd {
  std::string name;                 // intro(s), case, induction, ...
  std::vector<std::string> labels;  // principal target, then "to" targets
  std::vector<Term> terms;          // witnesses / invariant / cut formula
  int num = -1;                     // search depth or clause index
};

// Commands are parsed one at a time so the symbol table and the proof
// context can evolve between them.
class Parser {
 public:
  explicit Parser(std::string text, std::string source = "<input>");

  bool at_end();
  // Keyword of the next command (not consumed); "" at end of input.
  std::string peek_word();

  // "Kind i, lst."
  void parse_kind(SymTab& tab);
  // "Type cons i -> lst -> lst."
  void parse_typedecl(SymTab& tab);
  // "Define p : T by clause; ... ." / "CoDefine ...". Registers the
  // predicate constant in tab.
  Definition parse_define(SymTab& tab);
  // "Theorem name : formula."
  std::pair<std::string, Term> parse_theorem(const SymTab& tab);
  // One tactic step; scope gives the eigenvariables of the front goal and
  // witness_hint, when present, the expected type of an exists witness.
  TacticCmd parse_tactic(const SymTab& tab,
                         const std::map<std::string, Type>& scope,
                         const Type* witness_hint = nullptr);
  // Skip the rest of the current command after an error.
  void recover();

  // Standalone term or formula elaboration (used by tests and the REPL).
  Term parse_standalone_term(const SymTab& tab,
                             const std::map<std::string, Type>& scope);

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

}  // namespace gk

#endif  // GK_PARSER_HPP
