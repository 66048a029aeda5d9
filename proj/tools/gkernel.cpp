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

#include <unistd.h>

#include <algorithm>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gk/nabs.hpp"
#include "gk/printer.hpp"
#include "gk/session.hpp"

namespace {

// Random ground term over a few first order constants and nominals.
gk::Term random_term(std::mt19937& rng, int depth) {
  using namespace gk;
  const Type i = Type::base("i");
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 3);
  switch (pick(rng)) {
    case 0: return Term::cnst("c", i);
    case 1: case 2: case 3:
      return Term::nominal(i, pick(rng) % 3);
    case 4:
      return Term::app(Term::cnst("f", Type::arrow(i, i)),
                       random_term(rng, depth - 1));
    default:
      return Term::apps(Term::cnst("g", Type::arrow({i, i}, i)),
                        {random_term(rng, depth - 1),
                         random_term(rng, depth - 1)});
  }
}

// Seeded invariant checks: abstracting distinct nominals out of a random
// term yields a valid nominal abstraction of matching degree, and swapping
// two nominals is invisible to equality modulo permutations.
int random_checks(unsigned seed) {
  using namespace gk;
  std::mt19937 rng(seed);
  int bad = 0;
  for (int iter = 0; iter < 200; ++iter) {
    Term t = normalize(random_term(rng, 3));
    std::set<Nominal> ns = support(t);
    std::vector<Nominal> supp(ns.begin(), ns.end());
    std::shuffle(supp.begin(), supp.end(), rng);
    size_t d = supp.empty() ? 0 : rng() % (supp.size() + 1);
    std::vector<Term> leaves;
    for (size_t k = 0; k < d; ++k) leaves.push_back(Term::nominal(supp[k]));
    Term s = normalize(abstract_leaves(t, leaves));
    if (!nabs_holds(s, t, static_cast<int>(d))) {
      std::cout << "FAIL abstraction of " << d << " nominals\n";
      ++bad;
    }
    if (supp.size() >= 2) {
      Perm p;
      p.swap(supp[0], supp[1]);
      if (!perm_equiv(normalize(apply_perm(p, t)), t)) {
        std::cout << "FAIL swap invariance\n";
        ++bad;
      }
    }
  }
  std::cout << (bad == 0 ? "ok   " : "FAIL ")
            << "200 randomized abstraction and swap checks (seed " << seed
            << ")\n";
  return bad;
}

// Built in sanity checks over the nominal abstraction judgment; returns 0
// when every expected outcome is reproduced.
int selftest(unsigned seed) {
  using namespace gk;
  const Type i = Type::base("i");
  Term p2 = Term::cnst("p", Type::arrow({i, i}, Type::prop()));
  Term n1 = Term::nominal(i, 1);
  Term n2 = Term::nominal(i, 2);
  auto lam2 = [&](Term body) {
    return normalize(Term::lam("x", i, Term::lam("y", i, body)));
  };
  Term b0 = Term::bound(0), b1 = Term::bound(1);
  struct Case {
    const char* label;
    Term s, t;
    bool want;
  };
  std::vector<Case> cases = {
      {"p c1 c2 from two binders", lam2(Term::apps(p2, {b1, b0})),
       normalize(Term::apps(p2, {n1, n2})), true},
      {"swapped arguments", lam2(Term::apps(p2, {b0, b1})),
       normalize(Term::apps(p2, {n2, n1})), true},
      {"repeated nominal", lam2(Term::apps(p2, {b1, b0})),
       normalize(Term::apps(p2, {n1, n1})), false},
      {"nominal left behind", lam2(Term::apps(p2, {b1, n2})),
       normalize(Term::apps(p2, {n1, n2})), true},
      {"wrong nominal left behind", lam2(Term::apps(p2, {b1, n1})),
       normalize(Term::apps(p2, {n1, n2})), false},
      {"binder unused", lam2(Term::apps(p2, {n1, b0})),
       normalize(Term::apps(p2, {n1, n2})), true},
  };
  int bad = 0;
  for (const Case& c : cases) {
    bool got = nabs_holds(c.s, c.t, 2);
    bool ok = got == c.want;
    std::cout << (ok ? "ok   " : "FAIL ") << c.label << "\n";
    bad += ok ? 0 : 1;
  }
  // One solver round trip: (x\ D x) |> p n1 n2 has no solution, while
  // raising lets h n1 cover p applied to any nominal pair.
  {
    NabsProblem p;
    p.sigma = {{"D", Type::arrow(i, Type::prop())}};
    p.lhs = normalize(Term::lam("x", i, Term::app(Term::var("D", Type::arrow(i, Type::prop())), Term::bound(0))));
    p.rhs = normalize(Term::apps(p2, {n1, n2}));
    p.degree = 1;
    bool ok = csnas(p).empty();
    std::cout << (ok ? "ok   " : "FAIL ") << "solver rejects capture\n";
    bad += ok ? 0 : 1;
  }
  bad += random_checks(seed);
  return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gkernel: a proof checker for a logic of generic judgments"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "check proof script files");
  std::vector<std::string> files;
  gk::SessionOptions opt;
  check->add_option("files", files, "proof scripts")->required();
  check->add_option("--depth", opt.depth, "default search depth");
  check->add_flag("--translated", opt.translated,
                  "use the single-clause translated form for case analysis, "
                  "unfolding and induction");
  check->add_option("--json-trace", opt.trace_dir,
                    "write one JSON derivation per theorem into this directory");
  check->add_flag("--quiet", opt.quiet, "suppress per-theorem output");

  bool no_color = false;
  app.add_flag("--no-color", no_color, "disable ANSI colors in output");

  auto* repl = app.add_subcommand("repl", "interactive session");
  int repl_depth = 5;
  std::string repl_file;
  repl->add_option("--depth", repl_depth, "default search depth");
  repl->add_option("file", repl_file,
                   "script to load before reading interactive input");

  auto* self = app.add_subcommand("selftest", "built in solver checks");
  unsigned seed = 0;
  self->add_option("--seed", seed, "seed for the randomized checks");

  CLI11_PARSE(app, argc, argv);

  bool color = !no_color && isatty(fileno(stdout));
  if (self->parsed()) return selftest(seed);
  if (repl->parsed()) {
    gk::SessionOptions ropt;
    ropt.depth = repl_depth;
    ropt.color = color;
    gk::Session s(ropt);
    if (!repl_file.empty()) {
      int r = s.run_file(repl_file);
      if (r != 0) std::cout << repl_file << ": load FAILED (" << r << ")\n";
    }
    return s.repl(std::cin, std::cout);
  }
  opt.color = color;
  int rc = 0;
  const char* red = color ? "\033[31m" : "";
  const char* off = color ? "\033[0m" : "";
  for (const std::string& f : files) {
    gk::Session s(opt);
    int r = s.run_file(f);
    if (!opt.quiet && r == 0) std::cout << f << ": ok\n";
    if (r != 0) {
      std::cout << f << ": " << red << "FAILED" << off << " (" << r << ")\n";
      rc = std::max(rc, r);
    }
  }
  return rc;
}
