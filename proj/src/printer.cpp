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

#include "gk/printer.hpp"

#include <set>
#include <sstream>

#include "gk/formula.hpp"

namespace gk {

namespace {

// Precedence levels, loosest first: imp < or < and < rel < app < atom.
enum Prec { kImp = 0, kOr, kAnd, kRel, kApp, kAtom };

void collect_names(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::kVar:
    case TermKind::kConst: out.insert(t.name()); break;
    case TermKind::kLam: collect_names(t.body(), out); break;
    case TermKind::kApp:
      collect_names(t.fun(), out);
      collect_names(t.arg(), out);
      break;
    default: break;
  }
}

struct Printer {
  std::set<std::string> used;
  std::vector<std::string> binders;  // innermost last

  std::string freshen(const std::string& hint) {
    std::string base = hint.empty() ? "x" : hint;
    std::string n = base;
    int k = 0;
    auto taken = [&](const std::string& s) {
      if (used.count(s)) return true;
      for (const auto& b : binders)
        if (b == s) return true;
      return false;
    };
    while (taken(n)) n = base + std::to_string(++k);
    return n;
  }

  void wrap(std::ostringstream& os, int prec, int min, const std::string& s) {
    if (prec < min)
      os << "(" << s << ")";
    else
      os << s;
  }

  std::string quant_body(const std::string& q, const Term& abs) {
    std::string n = freshen(abs.hint());
    std::ostringstream os;
    os << q << " (" << n << ":" << print_type(abs.binder_type()) << "), ";
    binders.push_back(n);
    os << go(abs.body(), kImp);
    binders.pop_back();
    return os.str();
  }

  std::string go(const Term& t, int min) {
    std::ostringstream os;
    // Formula shapes first.
    if (t.kind() == TermKind::kApp || t.kind() == TermKind::kConst) {
      Term h = t.head();
      std::vector<Term> args = t.spine_args();
      if (h.kind() == TermKind::kConst && is_logical_const(h.name())) {
        const std::string& c = h.name();
        if (c == "true" && args.empty()) return "true";
        if (c == "false" && args.empty()) return "false";
        if (args.size() == 2 && (c == "/\\" || c == "\\/" || c == "=>")) {
          int prec = c == "=>" ? kImp : (c == "\\/" ? kOr : kAnd);
          // => is right associative, the others associate to the left.
          int lp = c == "=>" ? prec + 1 : prec;
          int rp = c == "=>" ? prec : prec + 1;
          wrap(os, prec, min, go(args[0], lp) + " " + c + " " + go(args[1], rp));
          return os.str();
        }
        if (args.size() == 2 && c == "|>") {
          FView v = classify(t);
          std::string op = v.degree == 0 ? "=" : "|>";
          wrap(os, kRel, min,
               go(args[0], kRel + 1) + " " + op + " " + go(args[1], kRel + 1));
          return os.str();
        }
        if (args.size() == 1 &&
            (c == "forall" || c == "exists" || c == "nabla") &&
            args[0].kind() == TermKind::kLam) {
          wrap(os, kImp, min, quant_body(c, args[0]));
          return os.str();
        }
      }
    }
    switch (t.kind()) {
      case TermKind::kVar:
      case TermKind::kConst: return t.name();
      case TermKind::kNominal: return t.nominal_of().str();
      case TermKind::kBound: {
        int ix = t.index();
        int pos = static_cast<int>(binders.size()) - 1 - ix;
        if (pos < 0) return "#b" + std::to_string(ix);
        return binders[pos];
      }
      case TermKind::kLam: {
        std::string n = freshen(t.hint());
        std::ostringstream body;
        body << "(" << n << ":" << print_type(t.binder_type()) << ")\\ ";
        binders.push_back(n);
        body << go(t.body(), kImp);
        binders.pop_back();
        wrap(os, kImp, min, body.str());
        return os.str();
      }
      case TermKind::kApp: {
        std::string s = go(t.fun(), kApp) + " " + go(t.arg(), kApp + 1);
        wrap(os, kApp, min, s);
        return os.str();
      }
      default: return "?";
    }
  }
};

}  // namespace

std::string print_type(const Type& t) { return t.str(); }

std::string print_term(const Term& t) {
  Printer p;
  collect_names(t, p.used);
  return p.go(t, kImp);
}

std::string print_sequent(const Sequent& seq,
                          const std::vector<std::string>& labels) {
  std::ostringstream os;
  if (!seq.sig.empty()) {
    os << "Variables:";
    for (const auto& [v, vt] : seq.sig) os << " " << v << ":" << vt.str();
    os << "\n";
  }
  for (size_t i = 0; i < seq.hyps.size(); ++i) {
    std::string l = i < labels.size() ? labels[i] : "H?";
    os << "  " << l << " : " << print_term(seq.hyps[i]) << "\n";
  }
  os << "============================\n";
  os << "  " << print_term(seq.goal) << "\n";
  return os.str();
}

}  // namespace gk
