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

#include "gk/parser.hpp"

#include <cctype>
#include <memory>

#include "gk/error.hpp"
#include "gk/formula.hpp"

namespace gk {

namespace {

struct Tok {
  enum K { kIdent, kSym, kEnd } k = kEnd;
  std::string s;
  int line = 0;
};

std::vector<Tok> lex(const std::string& text, const std::string& src) {
  std::vector<Tok> out;
  int line = 1;
  size_t i = 0;
  auto err = [&](const std::string& m) {
    throw ParseError(src + ":" + std::to_string(line) + ": " + m);
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') { ++line; ++i; continue; }
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (c == '%') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_' || text[j] == '\''))
        ++j;
      out.push_back({Tok::kIdent, text.substr(i, j - i), line});
      i = j;
      continue;
    }
    auto two = [&](const char* s) {
      return i + 1 < text.size() && text[i] == s[0] && text[i + 1] == s[1];
    };
    if (two(":=") || two("->") || two("=>") || two("/\\") || two("\\/") ||
        two("|>")) {
      out.push_back({Tok::kSym, text.substr(i, 2), line});
      i += 2;
      continue;
    }
    if (std::string(".;,:()\\=").find(c) != std::string::npos) {
      out.push_back({Tok::kSym, std::string(1, c), line});
      ++i;
      continue;
    }
    err(std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::kEnd, "", line});
  return out;
}

bool is_nominal_literal(const std::string& s) {
  if (s.size() < 2 || s[0] != 'n') return false;
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

bool is_capital(const std::string& s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

bool is_meta(const Type& t) {
  return t.is_base() && !t.base_name().empty() && t.base_name()[0] == '?';
}

// -- Raw syntax ----------------------------------------------------------

struct PT;
using PTP = std::shared_ptr<PT>;

struct PT {
  enum K { kId, kApp, kLam, kQuant, kBin, kTrue, kFalse } k = kId;
  std::string name;  // kId ident, kQuant quantifier, kBin operator
  std::vector<std::pair<std::string, Type>> binders;  // kLam (one), kQuant
  PTP a, b;
  int line = 0;

  Type ascription;  // optional (t : ty) annotation

  // Filled by inference.
  Type ty;
  enum R { rNone, rBound, rConst, rEigen, rFree, rZ, rNominal } rk = rNone;
  int bindex = -1;  // rBound de Bruijn index, rNominal index
};

// -- Type inference ------------------------------------------------------

struct Inf {
  std::string src;
  int next = 0;
  std::map<std::string, Type> sol;
  std::vector<std::tuple<Type, Type, int>> nabs_pairs;

  Type meta() { return Type::base("?" + std::to_string(next++)); }

  Type resolve(const Type& t) {
    if (t.is_arrow()) return Type::arrow(resolve(t.arg()), resolve(t.result()));
    if (is_meta(t)) {
      auto it = sol.find(t.base_name());
      if (it != sol.end()) return resolve(it->second);
    }
    return t;
  }

  [[noreturn]] void fail(int line, const std::string& m) {
    throw ParseError(src + ":" + std::to_string(line) + ": " + m);
  }

  bool occurs(const std::string& m, const Type& t) {
    Type r = resolve(t);
    if (r.is_arrow()) return occurs(m, r.arg()) || occurs(m, r.result());
    return is_meta(r) && r.base_name() == m;
  }

  void unify(const Type& a0, const Type& b0, int line) {
    Type a = resolve(a0), b = resolve(b0);
    if (a == b) return;
    if (is_meta(a)) {
      if (occurs(a.base_name(), b)) fail(line, "cannot infer a finite type");
      sol[a.base_name()] = b;
      return;
    }
    if (is_meta(b)) { unify(b, a, line); return; }
    if (a.is_arrow() && b.is_arrow()) {
      unify(a.arg(), b.arg(), line);
      unify(a.result(), b.result(), line);
      return;
    }
    fail(line, "type mismatch: " + resolve(a0).str() + " vs " +
                   resolve(b0).str());
  }

  Type must_resolve(const Type& t, int line, const std::string& what) {
    Type r = resolve(t);
    std::function<bool(const Type&)> has_meta = [&](const Type& u) {
      if (u.is_arrow()) return has_meta(u.arg()) || has_meta(u.result());
      return is_meta(u);
    };
    if (has_meta(r)) fail(line, "cannot infer the type of " + what);
    return r;
  }
};

// -- Elaboration ---------------------------------------------------------

struct Ctx {
  const SymTab& tab;
  const std::map<std::string, Type>* scope = nullptr;  // eigenvariables
  std::map<std::string, Type>* frees = nullptr;        // clause variables
  std::map<std::string, Type>* zvars = nullptr;        // nabla clause vars
  std::map<std::string, Type> nom_lit;                 // literal -> type
  std::vector<std::pair<std::string, Type>> binders;
};

void annotate(PT& t, Ctx& cx, Inf& inf);

void annotate_node(PT& t, Ctx& cx, Inf& inf) {
  switch (t.k) {
    case PT::kTrue:
    case PT::kFalse:
      t.ty = Type::prop();
      return;
    case PT::kId: {
      for (size_t i = cx.binders.size(); i-- > 0;) {
        if (cx.binders[i].first == t.name) {
          t.rk = PT::rBound;
          t.bindex = static_cast<int>(cx.binders.size() - 1 - i);
          t.ty = cx.binders[i].second;
          return;
        }
      }
      if (cx.zvars) {
        auto it = cx.zvars->find(t.name);
        if (it != cx.zvars->end()) {
          t.rk = PT::rZ;
          t.ty = it->second;
          return;
        }
      }
      if (cx.scope) {
        auto it = cx.scope->find(t.name);
        if (it != cx.scope->end()) {
          t.rk = PT::rEigen;
          t.ty = it->second;
          return;
        }
      }
      {
        auto it = cx.tab.consts.find(t.name);
        if (it != cx.tab.consts.end()) {
          t.rk = PT::rConst;
          t.ty = it->second;
          return;
        }
      }
      if (is_nominal_literal(t.name)) {
        auto [it, fresh] = cx.nom_lit.emplace(t.name, inf.meta());
        (void)fresh;
        t.rk = PT::rNominal;
        t.bindex = std::stoi(t.name.substr(1));
        t.ty = it->second;
        return;
      }
      if (is_capital(t.name)) {
        if (!cx.frees)
          inf.fail(t.line, "unbound variable " + t.name +
                               " (quantify it explicitly)");
        auto [it, fresh] = cx.frees->emplace(t.name, inf.meta());
        (void)fresh;
        t.rk = PT::rFree;
        t.ty = it->second;
        return;
      }
      inf.fail(t.line, "unknown identifier " + t.name);
    }
    case PT::kApp: {
      annotate(*t.a, cx, inf);
      annotate(*t.b, cx, inf);
      Type r = inf.meta();
      inf.unify(t.a->ty, Type::arrow(t.b->ty, r), t.line);
      t.ty = r;
      return;
    }
    case PT::kLam: {
      auto& [n, bt] = t.binders[0];
      if (bt.is_null()) bt = inf.meta();
      cx.binders.emplace_back(n, bt);
      annotate(*t.a, cx, inf);
      cx.binders.pop_back();
      t.ty = Type::arrow(bt, t.a->ty);
      return;
    }
    case PT::kQuant: {
      for (auto& [n, bt] : t.binders) {
        if (bt.is_null()) bt = inf.meta();
        cx.binders.emplace_back(n, bt);
      }
      annotate(*t.a, cx, inf);
      inf.unify(t.a->ty, Type::prop(), t.line);
      for (size_t i = 0; i < t.binders.size(); ++i) cx.binders.pop_back();
      t.ty = Type::prop();
      return;
    }
    case PT::kBin: {
      annotate(*t.a, cx, inf);
      annotate(*t.b, cx, inf);
      if (t.name == "=" ) {
        inf.unify(t.a->ty, t.b->ty, t.line);
      } else if (t.name == "|>") {
        inf.nabs_pairs.emplace_back(t.a->ty, t.b->ty, t.line);
      } else {
        inf.unify(t.a->ty, Type::prop(), t.line);
        inf.unify(t.b->ty, Type::prop(), t.line);
      }
      t.ty = Type::prop();
      return;
    }
  }
}

void annotate(PT& t, Ctx& cx, Inf& inf) {
  annotate_node(t, cx, inf);
  if (!t.ascription.is_null()) inf.unify(t.ty, t.ascription, t.line);
}

void settle_nabs(Inf& inf) {
  for (const auto& [ls0, rs0, line] : inf.nabs_pairs) {
    Type ls = inf.resolve(ls0), rs = inf.resolve(rs0);
    bool ok = false;
    if (!is_meta(ls)) {
      for (int k = 0; k <= ls.arity(); ++k)
        if (ls.result_after(k) == rs) { ok = true; break; }
      // An undetermined right operand takes the maximal degree; writing
      // |> rather than = signals a nontrivial abstraction.
      if (!ok && is_meta(rs) && ls.arity() > 0) {
        inf.unify(rs, ls.target(), line);
        ok = true;
      }
    }
    if (!ok) inf.unify(ls, rs, line);
  }
}

Term build(const PT& t, Inf& inf) {
  switch (t.k) {
    case PT::kTrue: return f_top();
    case PT::kFalse: return f_bot();
    case PT::kId: {
      Type ty = inf.must_resolve(t.ty, t.line, t.name);
      switch (t.rk) {
        case PT::rBound: return Term::bound(t.bindex);
        case PT::rConst: return Term::cnst(t.name, ty);
        case PT::rEigen:
        case PT::rFree:
        case PT::rZ: return Term::var(t.name, ty);
        case PT::rNominal: return Term::nominal(ty, t.bindex);
        default: inf.fail(t.line, "unresolved identifier " + t.name);
      }
    }
    case PT::kApp: return Term::app(build(*t.a, inf), build(*t.b, inf));
    case PT::kLam: {
      Type bt = inf.must_resolve(t.binders[0].second, t.line,
                                 t.binders[0].first);
      return Term::lam(t.binders[0].first, bt, build(*t.a, inf));
    }
    case PT::kQuant: {
      Term body = build(*t.a, inf);
      for (size_t i = t.binders.size(); i-- > 0;) {
        Type bt = inf.must_resolve(t.binders[i].second, t.line,
                                   t.binders[i].first);
        Term lam = Term::lam(t.binders[i].first, bt, body);
        Term q = Term::cnst(
            t.name, Type::arrow(Type::arrow(bt, Type::prop()), Type::prop()));
        body = Term::app(q, lam);
      }
      return body;
    }
    case PT::kBin: {
      Term a = build(*t.a, inf);
      Term b = build(*t.b, inf);
      if (t.name == "/\\") return f_and(a, b);
      if (t.name == "\\/") return f_or(a, b);
      if (t.name == "=>") return f_imp(a, b);
      Type ls = inf.must_resolve(t.a->ty, t.line, "the left operand");
      Type rs = inf.must_resolve(t.b->ty, t.line, "the right operand");
      Term c = Term::cnst("|>", Type::arrow({ls, rs}, Type::prop()));
      return Term::apps(c, {a, b});
    }
  }
  inf.fail(t.line, "malformed term");
}

}  // namespace

// -- Parser --------------------------------------------------------------

struct Parser::Impl {
  std::string src;
  std::vector<Tok> toks;
  size_t pos = 0;
  // Identifiers that end a term in the current context ("to", "with").
  std::set<std::string> stops;

  const Tok& peek(int ahead = 0) const {
    size_t i = pos + ahead;
    return i < toks.size() ? toks[i] : toks.back();
  }
  Tok next() { return toks[std::min(pos++, toks.size() - 1)]; }

  [[noreturn]] void fail(const std::string& m) {
    throw ParseError(src + ":" + std::to_string(peek().line) + ": " + m);
  }

  bool at_sym(const std::string& s, int ahead = 0) const {
    return peek(ahead).k == Tok::kSym && peek(ahead).s == s;
  }
  void expect_sym(const std::string& s) {
    if (!at_sym(s)) fail("expected '" + s + "'");
    next();
  }
  std::string expect_ident(const std::string& what) {
    if (peek().k != Tok::kIdent) fail("expected " + what);
    return next().s;
  }
  void expect_dot() { expect_sym("."); }

  // -- types --

  Type parse_type(const SymTab& tab) {
    Type left = parse_type1(tab);
    if (at_sym("->")) {
      next();
      return Type::arrow(left, parse_type(tab));
    }
    return left;
  }

  Type parse_type1(const SymTab& tab) {
    if (at_sym("(")) {
      next();
      Type t = parse_type(tab);
      expect_sym(")");
      return t;
    }
    std::string n = expect_ident("a type");
    if (n == "prop") return Type::prop();
    if (!tab.kinds.count(n)) fail("unknown sort " + n);
    return Type::base(n);
  }

  // -- raw terms --

  PTP mk(PT::K k, int line) {
    auto p = std::make_shared<PT>();
    p->k = k;
    p->line = line;
    return p;
  }

  PTP parse_term(const SymTab& tab) { return parse_imp(tab); }

  PTP parse_imp(const SymTab& tab) {
    PTP a = parse_or(tab);
    if (at_sym("=>")) {
      int line = next().line;
      PTP r = mk(PT::kBin, line);
      r->name = "=>";
      r->a = a;
      r->b = parse_imp(tab);
      return r;
    }
    return a;
  }

  PTP parse_or(const SymTab& tab) {
    PTP a = parse_and(tab);
    while (at_sym("\\/")) {
      int line = next().line;
      PTP r = mk(PT::kBin, line);
      r->name = "\\/";
      r->a = a;
      r->b = parse_and(tab);
      a = r;
    }
    return a;
  }

  PTP parse_and(const SymTab& tab) {
    PTP a = parse_rel(tab);
    while (at_sym("/\\")) {
      int line = next().line;
      PTP r = mk(PT::kBin, line);
      r->name = "/\\";
      r->a = a;
      r->b = parse_rel(tab);
      a = r;
    }
    return a;
  }

  PTP parse_rel(const SymTab& tab) {
    PTP a = parse_app(tab);
    if (at_sym("=") || at_sym("|>")) {
      Tok op = next();
      PTP r = mk(PT::kBin, op.line);
      r->name = op.s == "=" ? "=" : "|>";
      r->a = a;
      r->b = parse_app(tab);
      return r;
    }
    return a;
  }

  bool starts_atom() const {
    if (at_sym("(")) return true;
    return peek().k == Tok::kIdent && !stops.count(peek().s);
  }

  PTP parse_app(const SymTab& tab) {
    PTP a = parse_prefix(tab);
    while (starts_atom() && !starts_binder_only()) {
      int line = peek().line;
      PTP arg = parse_prefix(tab);
      PTP r = mk(PT::kApp, line);
      r->a = a;
      r->b = arg;
      a = r;
    }
    return a;
  }

  // A quantifier keyword or an abstraction binder begins a prefix form
  // that swallows the rest of the term; as an application argument it must
  // be parenthesized, so stop the application loop there.
  bool starts_binder_only() const {
    if (peek().k == Tok::kIdent) {
      const std::string& s = peek().s;
      if (s == "forall" || s == "exists" || s == "nabla") return true;
      if (at_sym("\\", 1)) return true;
      return false;
    }
    if (at_sym("(")) {
      // (x:ty)\ ...
      int d = 0;
      for (size_t i = 0; pos + i < toks.size(); ++i) {
        const Tok& t = toks[pos + i];
        if (t.k == Tok::kSym && t.s == "(") ++d;
        if (t.k == Tok::kSym && t.s == ")") {
          --d;
          if (d == 0)
            return pos + i + 1 < toks.size() &&
                   toks[pos + i + 1].k == Tok::kSym &&
                   toks[pos + i + 1].s == "\\";
        }
        if (t.k == Tok::kEnd) break;
      }
    }
    return false;
  }

  PTP parse_prefix(const SymTab& tab) {
    int line = peek().line;
    if (peek().k == Tok::kIdent) {
      const std::string& s = peek().s;
      if (s == "forall" || s == "exists" || s == "nabla") {
        next();
        PTP r = mk(PT::kQuant, line);
        r->name = s;
        r->binders = parse_binders(tab);
        expect_sym(",");
        r->a = parse_imp(tab);
        return r;
      }
      if (s == "true" || s == "false") {
        next();
        return mk(s == "true" ? PT::kTrue : PT::kFalse, line);
      }
      if (at_sym("\\", 1)) {
        std::string n = next().s;
        next();  // backslash
        PTP r = mk(PT::kLam, line);
        r->binders.emplace_back(n, Type());
        r->a = parse_imp(tab);
        return r;
      }
      PTP r = mk(PT::kId, line);
      r->name = next().s;
      return r;
    }
    if (at_sym("(")) {
      if (starts_binder_only()) {
        next();
        std::string n = expect_ident("a binder");
        expect_sym(":");
        Type ty = parse_type(tab);
        expect_sym(")");
        expect_sym("\\");
        PTP r = mk(PT::kLam, line);
        r->binders.emplace_back(n, ty);
        r->a = parse_imp(tab);
        return r;
      }
      next();
      PTP t = parse_imp(tab);
      if (at_sym(":")) {
        next();
        t->ascription = parse_type(tab);
      }
      expect_sym(")");
      return t;
    }
    fail("expected a term");
  }

  std::vector<std::pair<std::string, Type>> parse_binders(const SymTab& tab) {
    std::vector<std::pair<std::string, Type>> out;
    while (!at_sym(",")) {
      if (peek().k == Tok::kIdent) {
        out.emplace_back(next().s, Type());
      } else if (at_sym("(")) {
        next();
        std::string n = expect_ident("a binder");
        expect_sym(":");
        Type ty = parse_type(tab);
        expect_sym(")");
        out.emplace_back(n, ty);
      } else {
        break;
      }
    }
    if (out.empty()) fail("expected at least one binder");
    return out;
  }

  Term elaborate(PTP t, Ctx& cx, Inf& inf, const Type* hint = nullptr) {
    annotate(*t, cx, inf);
    if (hint && !hint->is_null()) inf.unify(t->ty, *hint, t->line);
    settle_nabs(inf);
    return normalize(build(*t, inf));
  }
};

Parser::Parser(std::string text, std::string source) {
  impl_ = std::make_shared<Impl>();
  impl_->src = source;
  impl_->toks = lex(text, source);
}

bool Parser::at_end() { return impl_->peek().k == Tok::kEnd; }

std::string Parser::peek_word() {
  return impl_->peek().k == Tok::kEnd ? "" : impl_->peek().s;
}

void Parser::parse_kind(SymTab& tab) {
  Impl& ip = *impl_;
  if (ip.expect_ident("'Kind'") != "Kind") ip.fail("expected 'Kind'");
  while (true) {
    std::string n = ip.expect_ident("a sort name");
    if (n == "prop" || tab.kinds.count(n)) ip.fail("sort " + n + " already exists");
    tab.kinds.insert(n);
    if (ip.at_sym(",")) { ip.next(); continue; }
    break;
  }
  ip.expect_dot();
}

void Parser::parse_typedecl(SymTab& tab) {
  Impl& ip = *impl_;
  if (ip.expect_ident("'Type'") != "Type") ip.fail("expected 'Type'");
  std::vector<std::string> names;
  while (true) {
    std::string n = ip.expect_ident("a constant name");
    if (tab.consts.count(n) || is_logical_const(n))
      ip.fail("constant " + n + " already exists");
    if (is_nominal_literal(n) || is_capital(n) || n[0] == '#')
      ip.fail("reserved constant name " + n);
    names.push_back(n);
    if (ip.at_sym(",")) { ip.next(); continue; }
    break;
  }
  Type ty = ip.parse_type(tab);
  ip.expect_dot();
  for (const std::string& n : names) tab.consts.emplace(n, ty);
}

Definition Parser::parse_define(SymTab& tab) {
  Impl& ip = *impl_;
  std::string kw = ip.expect_ident("'Define'");
  Definition def;
  if (kw == "Define") def.flavor = Flavor::Inductive;
  else if (kw == "CoDefine") def.flavor = Flavor::CoInductive;
  else ip.fail("expected 'Define' or 'CoDefine'");
  def.pred = ip.expect_ident("a predicate name");
  if (tab.consts.count(def.pred) || is_capital(def.pred) ||
      is_nominal_literal(def.pred) || is_logical_const(def.pred))
    ip.fail("predicate name " + def.pred + " is taken or reserved");
  ip.expect_sym(":");
  def.ty = ip.parse_type(tab);
  if (!(def.ty.target() == Type::prop()))
    ip.fail("a predicate type must target prop");
  tab.consts.emplace(def.pred, def.ty);
  if (ip.expect_ident("'by'") != "by") ip.fail("expected 'by'");
  while (true) {
    Clause c;
    Inf inf{ip.src};
    Ctx cx{tab};
    std::map<std::string, Type> frees, zvars;
    cx.frees = &frees;
    cx.zvars = &zvars;
    std::vector<std::string> zorder;
    if (ip.peek().k == Tok::kIdent && ip.peek().s == "nabla") {
      ip.next();
      while (ip.peek().k == Tok::kIdent) {
        std::string z = ip.next().s;
        if (zvars.count(z)) ip.fail("duplicate nabla variable " + z);
        zvars.emplace(z, inf.meta());
        zorder.push_back(z);
      }
      ip.expect_sym(",");
    }
    PTP head = ip.parse_app(tab);
    PTP body;
    if (ip.at_sym(":=")) {
      ip.next();
      body = ip.parse_term(tab);
    }
    annotate(*head, cx, inf);
    inf.unify(head->ty, Type::prop(), head->line);
    if (body) {
      annotate(*body, cx, inf);
      inf.unify(body->ty, Type::prop(), body->line);
    }
    settle_nabs(inf);
    Term h = normalize(build(*head, inf));
    Term hh = h.head();
    if (hh.kind() != TermKind::kConst || hh.name() != def.pred)
      ip.fail("clause head must be an application of " + def.pred);
    c.head_args = h.spine_args();
    c.body = body ? normalize(build(*body, inf)) : f_top();
    for (const std::string& z : zorder)
      c.zs.emplace_back(z, inf.must_resolve(zvars[z], ip.peek().line, z));
    for (const auto& [n, t] : frees)
      c.xs.emplace_back(n, inf.must_resolve(t, ip.peek().line, n));
    def.clauses.push_back(std::move(c));
    if (ip.at_sym(";")) { ip.next(); continue; }
    break;
  }
  ip.expect_dot();
  return def;
}

std::pair<std::string, Term> Parser::parse_theorem(const SymTab& tab) {
  Impl& ip = *impl_;
  if (ip.expect_ident("'Theorem'") != "Theorem") ip.fail("expected 'Theorem'");
  std::string name = ip.expect_ident("a theorem name");
  ip.expect_sym(":");
  PTP t = ip.parse_term(tab);
  ip.expect_dot();
  Inf inf{ip.src};
  Ctx cx{tab};
  Term f = ip.elaborate(t, cx, inf);
  check_formula(f);
  return {name, f};
}

TacticCmd Parser::parse_tactic(const SymTab& tab,
                               const std::map<std::string, Type>& scope,
                               const Type* witness_hint) {
  Impl& ip = *impl_;
  TacticCmd cmd;
  cmd.name = ip.expect_ident("a tactic");
  auto term_arg = [&](const Type* hint = nullptr) {
    ip.stops = {"to", "with"};
    PTP t = ip.parse_term(tab);
    ip.stops.clear();
    Inf inf{ip.src};
    Ctx cx{tab};
    cx.scope = &scope;
    return ip.elaborate(t, cx, inf, hint);
  };
  auto int_arg = [&]() {
    std::string n = ip.expect_ident("a number");
    for (char c : n)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        ip.fail("expected a number");
    return std::stoi(n);
  };
  if (cmd.name == "intro" || cmd.name == "intros" || cmd.name == "split" ||
      cmd.name == "left" || cmd.name == "right" || cmd.name == "qed" ||
      cmd.name == "abort") {
    ip.expect_dot();
    return cmd;
  }
  if (cmd.name == "search" || cmd.name == "unfold") {
    if (ip.peek().k == Tok::kIdent) cmd.num = int_arg();
    ip.expect_dot();
    return cmd;
  }
  if (cmd.name == "case" || cmd.name == "lemma") {
    cmd.labels.push_back(ip.expect_ident("a name"));
    ip.expect_dot();
    return cmd;
  }
  if (cmd.name == "induction") {
    cmd.labels.push_back(ip.expect_ident("a hypothesis"));
    if (ip.expect_ident("'with'") != "with") ip.fail("expected 'with'");
    cmd.terms.push_back(term_arg());
    ip.expect_dot();
    return cmd;
  }
  if (cmd.name == "coinduction") {
    if (ip.expect_ident("'with'") != "with") ip.fail("expected 'with'");
    cmd.terms.push_back(term_arg());
    ip.expect_dot();
    return cmd;
  }
  if (cmd.name == "exists" || cmd.name == "assert") {
    // The goal's binder type disambiguates witnesses such as bare nominals.
    cmd.terms.push_back(term_arg(cmd.name == "exists" ? witness_hint : nullptr));
    ip.expect_dot();
    return cmd;
  }
  if (cmd.name == "apply") {
    cmd.labels.push_back(ip.expect_ident("a hypothesis or lemma"));
    if (ip.peek().k == Tok::kIdent && ip.peek().s == "with") {
      ip.next();
      cmd.terms.push_back(term_arg());
      while (ip.at_sym(",")) {
        ip.next();
        cmd.terms.push_back(term_arg());
      }
    }
    if (ip.peek().k == Tok::kIdent && ip.peek().s == "to") {
      ip.next();
      while (ip.peek().k == Tok::kIdent && !ip.at_sym("."))
        cmd.labels.push_back(ip.next().s);
    }
    ip.expect_dot();
    return cmd;
  }
  ip.fail("unknown tactic " + cmd.name);
}

void Parser::recover() {
  Impl& ip = *impl_;
  while (ip.peek().k != Tok::kEnd) {
    if (ip.at_sym(".")) { ip.next(); return; }
    ip.next();
  }
}

Term Parser::parse_standalone_term(const SymTab& tab,
                                   const std::map<std::string, Type>& scope) {
  Impl& ip = *impl_;
  PTP t = ip.parse_term(tab);
  ip.expect_dot();
  Inf inf{ip.src};
  Ctx cx{tab};
  cx.scope = &scope;
  return ip.elaborate(t, cx, inf);
}

}  // namespace gk
