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

#include "gk/session.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gk/error.hpp"
#include "gk/printer.hpp"
#include "json.hpp"

namespace gk {

namespace {

nlohmann::json trace_json(const TraceNode& n) {
  nlohmann::json j;
  j["rule"] = rule_tag_name(n.rule.tag);
  if (n.rule.hyp >= 0) j["hyp"] = n.rule.hyp;
  if (n.rule.tag == Rule::Tag::OrR || n.rule.tag == Rule::Tag::AndL)
    j["side"] = n.rule.side;
  if (!n.rule.witness.is_null()) j["witness"] = print_term(n.rule.witness);
  if (n.rule.clause >= 0) j["clause"] = n.rule.clause;
  if (!n.rule.subst.empty()) {
    nlohmann::json s = nlohmann::json::object();
    for (const auto& [v, t] : n.rule.subst.mapping()) s[v] = print_term(t);
    j["subst"] = s;
  }
  if (!n.rule.name.empty()) j["name"] = n.rule.name;
  if (!n.children.empty()) {
    nlohmann::json cs = nlohmann::json::array();
    for (const TraceNode& c : n.children) cs.push_back(trace_json(c));
    j["children"] = cs;
  }
  return j;
}

}  // namespace

Session::Session(SessionOptions opt) : opt_(std::move(opt)) {}

int Session::run_file(const std::string& path, std::ostream& out) {
  std::ifstream in(path);
  if (!in) {
    out << "error: cannot open " << path << "\n";
    return 2;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return run_text(ss.str(), path, out);
}

int Session::run_text(const std::string& text, const std::string& name,
                      std::ostream& out) {
  try {
    Parser p(text, name);
    while (!p.at_end()) {
      if (!step(p, out, false)) break;
    }
    if (proof_) {
      out << "error: theorem " << proof_name_ << " has no qed\n";
      return 1;
    }
    return 0;
  } catch (const TacticError& e) {
    out << "error: " << e.what() << "\n";
    if (proof_ && !opt_.quiet) {
      out << "in theorem " << proof_name_ << ":\n";
      print_goals(out);
    }
    return 1;
  } catch (const RuleError& e) {
    out << "error: " << e.what() << "\n";
    if (proof_ && !opt_.quiet) {
      out << "in theorem " << proof_name_ << ":\n";
      print_goals(out);
    }
    return 1;
  } catch (const Error& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  }
}

int Session::repl(std::istream& in, std::ostream& out) {
  std::string pending;
  out << "gkernel. Commands end with '.'; Quit. exits.\n";
  auto prompt = [&]() { out << (proof_ ? proof_name_ + "> " : "> ") << std::flush; };
  prompt();
  std::string line;
  while (std::getline(in, line)) {
    pending += line + "\n";
    size_t dot;
    while ((dot = pending.find('.')) != std::string::npos) {
      std::string chunk = pending.substr(0, dot + 1);
      pending = pending.substr(dot + 1);
      try {
        Parser p(chunk, "<repl>");
        if (p.peek_word() == "Quit") return 0;
        if (!p.at_end()) step(p, out, true);
      } catch (const Error& e) {
        out << "error: " << e.what() << "\n";
      }
    }
    prompt();
  }
  return 0;
}

bool Session::step(Parser& p, std::ostream& out, bool interactive) {
  std::string w = p.peek_word();
  if (w.empty()) return false;
  if (proof_) {
    Type hint;
    if (!proof_->done()) {
      FView v = classify(proof_->current().goal);
      if (v.kind == FKind::Ex) hint = v.qty;
    }
    TacticCmd cmd = p.parse_tactic(tab_, proof_->done()
                                             ? std::map<std::string, Type>{}
                                             : proof_->current().sig,
                                   hint.is_null() ? nullptr : &hint);
    run_tactic(cmd, out, interactive);
    return true;
  }
  if (w == "Kind") {
    p.parse_kind(tab_);
    return true;
  }
  if (w == "Type") {
    p.parse_typedecl(tab_);
    return true;
  }
  if (w == "Define" || w == "CoDefine") {
    Definition d = p.parse_define(tab_);
    std::string pred = d.pred;
    try {
      defs_.add(std::move(d));
    } catch (const Error&) {
      // The predicate constant must not survive a rejected definition.
      tab_.consts.erase(pred);
      throw;
    }
    return true;
  }
  if (w == "Theorem") {
    auto [name, f] = p.parse_theorem(tab_);
    if (lemmas_.count(name)) throw ParseError("theorem " + name + " already exists");
    proof_.emplace(f, defs_, lemmas_);
    proof_name_ = name;
    if (interactive) print_goals(out);
    return true;
  }
  throw ParseError("unexpected command " + w);
}

void Session::run_tactic(const TacticCmd& cmd, std::ostream& out,
                         bool interactive) {
  ProofState& st = *proof_;
  const std::string& n = cmd.name;
  if (n == "qed") {
    if (!st.done()) throw TacticError(std::to_string(st.num_goals()) +
                                      " goals remain at qed");
    finish_theorem(out);
    return;
  }
  if (n == "abort") {
    proof_.reset();
    out << "aborted " << proof_name_ << "\n";
    return;
  }
  if (st.done()) throw TacticError("no goals left; expected qed");
  if (n == "intro") t_intro(st);
  else if (n == "intros") t_intros(st);
  else if (n == "split") t_split(st);
  else if (n == "left") t_left(st);
  else if (n == "right") t_right(st);
  else if (n == "case") t_case(st, cmd.labels.at(0), opt_.translated);
  else if (n == "induction")
    t_induction(st, cmd.labels.at(0), cmd.terms.at(0), opt_.translated);
  else if (n == "coinduction") t_coinduction(st, cmd.terms.at(0));
  else if (n == "exists") t_exists(st, cmd.terms.at(0));
  else if (n == "assert") t_assert(st, cmd.terms.at(0));
  else if (n == "lemma") t_lemma(st, cmd.labels.at(0));
  else if (n == "unfold") t_unfold(st, cmd.num, opt_.translated);
  else if (n == "apply")
    t_apply(st, cmd.labels.at(0), cmd.terms,
            {cmd.labels.begin() + 1, cmd.labels.end()});
  else if (n == "search") {
    if (!t_search(st, cmd.num < 0 ? opt_.depth : cmd.num))
      throw TacticError("search found no derivation");
  } else {
    throw TacticError("unknown tactic " + n);
  }
  if (interactive) print_goals(out);
}

void Session::finish_theorem(std::ostream& out) {
  lemmas_[proof_name_] = proof_->statement();
  if (!opt_.trace_dir.empty()) {
    std::filesystem::create_directories(opt_.trace_dir);
    nlohmann::json j;
    j["theorem"] = proof_name_;
    j["statement"] = print_term(proof_->statement());
    j["proof"] = trace_json(proof_->trace());
    std::ofstream f(opt_.trace_dir + "/" + proof_name_ + ".json");
    f << j.dump(2) << "\n";
  }
  if (!opt_.quiet) {
    const char* on = opt_.color ? "\033[32m" : "";
    const char* off = opt_.color ? "\033[0m" : "";
    out << "Theorem " << proof_name_ << ": " << on << "proved" << off << " ("
        << tree_size(proof_->trace()) << " rules)\n";
  }
  proof_.reset();
}

void Session::print_goals(std::ostream& out) const {
  if (!proof_) return;
  if (proof_->done()) {
    out << "Proof completed; expected qed.\n";
    return;
  }
  if (proof_->num_goals() > 1)
    out << "[" << proof_->num_goals() << " goals]\n";
  out << print_sequent(proof_->current(), proof_->labels());
}

}  // namespace gk
