#include "btg/text/syntax.hpp"

#include <algorithm>

#include "btg/error.hpp"

namespace btg::text {

using kernel::Sort;
using kernel::Term;

namespace {

const Sexpr& item(const Sexpr& s, std::size_t i, const char* what) {
  if (!s.is_list || i >= s.items.size()) fail_at(Errc::SyntaxError, s, std::string("expected ") + what);
  return s.items[i];
}

const std::string& atom(const Sexpr& s, const char* what) {
  if (!s.is_atom()) fail_at(Errc::SyntaxError, s, std::string("expected ") + what);
  return s.atom;
}

Sexpr atom_of(std::string a) { return Sexpr::make_atom(std::move(a)); }

Sexpr tagged(std::string tag, std::vector<Sexpr> rest) {
  rest.insert(rest.begin(), atom_of(std::move(tag)));
  return Sexpr::list(std::move(rest));
}

Sexpr pair_of(const std::string& a, const std::string& b) { return Sexpr::list({atom_of(a), atom_of(b)}); }

// Sort of a term read from `s` when it can be told without context.
std::optional<Sort> infer_sort(const Sexpr& s, const TermScope& scope) {
  if (s.is_atom()) {
    if (auto it = scope.bound.find(s.atom); it != scope.bound.end()) return it->second;
    if (const auto* d = scope.sig->find_symbol(s.atom); d != nullptr && d->arity() == 0) return d->result;
    return std::nullopt;
  }
  if (s.items.empty() || s.items.front().is_list) return std::nullopt;
  if (s.head() == "quote") return kernel::kSyn;
  if (s.head() == "#half") return s.items.size() == 2 ? infer_sort(s.items[1], scope) : std::nullopt;
  if (const auto* d = scope.sig->find_symbol(s.head())) return d->result;
  return std::nullopt;
}

}  // namespace

bool is_integer(std::string_view a) noexcept {
  if (!a.empty() && a.front() == '-') a.remove_prefix(1);
  return !a.empty() && std::all_of(a.begin(), a.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Integer parse_integer(const Sexpr& s) {
  if (!s.is_atom() || !is_integer(s.atom)) fail_at(Errc::SyntaxError, s, "expected an integer");
  return Integer(s.atom);
}

Term parse_term(const Sexpr& s, const TermScope& scope, const std::optional<Sort>& expected) {
  const kernel::Signature& sig = *scope.sig;
  if (s.is_atom()) {
    if (is_integer(s.atom)) {
      if (expected) {
        if (!sig.admits_literals(*expected)) fail_at(Errc::SortError, s, "sort " + expected->name + " has no literals");
        return Term::lit(Integer(s.atom), *expected);
      }
      const Sort* n = sig.numeral_sort();
      if (n == nullptr) fail_at(Errc::SortError, s, "no sort admits literals");
      return Term::lit(Integer(s.atom), *n);
    }
    if (auto it = scope.bound.find(s.atom); it != scope.bound.end()) return Term::var(s.atom, it->second);
    if (const auto* d = sig.find_symbol(s.atom)) {
      if (d->arity() != 0) fail_at(Errc::SortError, s, "symbol " + s.atom + " needs " + std::to_string(d->arity()) + " arguments");
      return Term::app(s.atom);
    }
    if (scope.free_vars) {
      if (expected) return Term::var(s.atom, *expected);
      if (scope.default_sort) return Term::var(s.atom, *scope.default_sort);
      fail_at(Errc::SortError, s, "cannot infer the sort of " + s.atom);
    }
    fail_at(Errc::UnknownReference, s, "unknown name " + s.atom);
  }
  if (s.items.empty()) fail_at(Errc::SyntaxError, s, "empty term");
  const std::string& f = atom(s.items.front(), "a symbol");
  if (f == "quote") {
    if (s.items.size() != 2) fail_at(Errc::SyntaxError, s, "quote takes one term");
    return Term::quote(parse_term(s.items[1], scope));
  }
  if (f == std::string(transformers::kHalf)) {
    if (s.items.size() != 2) fail_at(Errc::SyntaxError, s, "#half takes one term");
    return Term::app(f, {parse_term(s.items[1], scope, expected)});
  }
  const auto* d = sig.find_symbol(f);
  if (d == nullptr) fail_at(Errc::UnknownReference, s.items.front(), "unknown symbol " + f);
  if (d->arity() != s.items.size() - 1) {
    fail_at(Errc::SortError, s, "symbol " + f + " takes " + std::to_string(d->arity()) + " arguments");
  }
  std::vector<Term> args;
  for (std::size_t i = 0; i < d->arity(); ++i) args.push_back(parse_term(s.items[i + 1], scope, d->args[i]));
  return Term::app(f, std::move(args));
}

Sexpr term_sexpr(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var: return atom_of(t.name());
    case Term::Kind::Lit: return atom_of(t.value().str());
    case Term::Kind::Quote: return tagged("quote", {term_sexpr(t.body())});
    case Term::Kind::App: {
      if (t.args().empty()) return atom_of(t.name());
      std::vector<Sexpr> items{atom_of(t.name())};
      for (const auto& a : t.args()) items.push_back(term_sexpr(a));
      return Sexpr::list(std::move(items));
    }
  }
  return {};
}

Term parse_term_text(std::string_view text, const kernel::Signature& sig) {
  auto sx = read_sexprs(text);
  if (sx.size() != 1) throw Error(Errc::SyntaxError, "expected exactly one term", SourceLoc{1, 1});
  TermScope scope{&sig, {}, true, {}};
  if (const Sort* n = sig.numeral_sort()) {
    scope.default_sort = *n;
  } else if (!sig.sorts().empty()) {
    scope.default_sort = sig.sorts().front();
  }
  Term t = parse_term(sx.front(), scope);
  located(sx.front(), [&] { return kernel::well_sorted(sig, t); });
  return t;
}

namespace {

kernel::Equation parse_equation(const Sexpr& s, const TermScope& scope) {
  if (s.head() != "=" || s.items.size() != 3) fail_at(Errc::SyntaxError, s, "expected (= lhs rhs)");
  auto sort = infer_sort(s.items[1], scope);
  if (!sort) sort = infer_sort(s.items[2], scope);
  return {parse_term(s.items[1], scope, sort), parse_term(s.items[2], scope, sort)};
}

Sexpr equation_sexpr(const kernel::Equation& e) { return tagged("=", {term_sexpr(e.lhs), term_sexpr(e.rhs)}); }

}  // namespace

kernel::Formula parse_formula(const Sexpr& s, const kernel::Signature& sig) {
  TermScope scope{&sig, {}, false, {}};
  std::vector<kernel::Binder> binders;
  const Sexpr* body = &s;
  if (s.head() == "forall") {
    if (s.items.size() != 3 || !s.items[1].is_list) fail_at(Errc::SyntaxError, s, "expected (forall (binders) body)");
    for (const auto& b : s.items[1].items) {
      if (!b.is_list || b.items.size() != 2) fail_at(Errc::SyntaxError, b, "expected (name sort)");
      const std::string& name = atom(b.items[0], "a variable");
      Sort sort{atom(b.items[1], "a sort")};
      if (!sig.has_sort(sort)) fail_at(Errc::SortError, b.items[1], "unknown sort " + sort.name);
      if (scope.bound.count(name)) fail_at(Errc::SyntaxError, b, "variable " + name + " bound twice");
      scope.bound.emplace(name, sort);
      binders.push_back({name, sort});
    }
    body = &s.items[2];
  }
  kernel::Formula f{binders, kernel::Equation{Term::lit(0, kernel::kSyn), Term::lit(0, kernel::kSyn)}};
  if (body->head() == "=>") {
    if (body->items.size() != 3 || !body->items[1].is_list) {
      fail_at(Errc::SyntaxError, *body, "expected (=> (hypotheses) conclusion)");
    }
    kernel::Implication imp{{}, parse_equation(body->items[2], scope)};
    for (const auto& h : body->items[1].items) imp.hypotheses.push_back(parse_equation(h, scope));
    f.body = std::move(imp);
  } else {
    f.body = parse_equation(*body, scope);
  }
  located(s, [&] { kernel::check_formula(sig, f); });
  return f;
}

Sexpr formula_sexpr(const kernel::Formula& f) {
  Sexpr body;
  if (const auto* eq = std::get_if<kernel::Equation>(&f.body)) {
    body = equation_sexpr(*eq);
  } else {
    const auto& imp = std::get<kernel::Implication>(f.body);
    std::vector<Sexpr> hyps;
    for (const auto& h : imp.hypotheses) hyps.push_back(equation_sexpr(h));
    body = tagged("=>", {Sexpr::list(std::move(hyps)), equation_sexpr(imp.conclusion)});
  }
  if (f.binders.empty()) return body;
  std::vector<Sexpr> bs;
  for (const auto& b : f.binders) bs.push_back(pair_of(b.name, b.sort.name));
  return tagged("forall", {Sexpr::list(std::move(bs)), std::move(body)});
}

kernel::SymbolDecl parse_decl(const Sexpr& s) {
  if (!s.is_list || s.items.size() < 3) fail_at(Errc::SyntaxError, s, "expected (name args... -> result)");
  kernel::SymbolDecl d{atom(s.items[0], "a symbol name"), {}, {}};
  std::size_t n = s.items.size();
  if (!s.items[n - 2].is_atom("->")) fail_at(Errc::SyntaxError, s, "expected -> before the result sort");
  for (std::size_t i = 1; i + 2 < n; ++i) d.args.push_back({atom(s.items[i], "a sort")});
  d.result = {atom(s.items[n - 1], "a sort")};
  return d;
}

Sexpr decl_sexpr(const kernel::SymbolDecl& d) {
  std::vector<Sexpr> items{atom_of(d.name)};
  for (const auto& a : d.args) items.push_back(atom_of(a.name));
  items.push_back(atom_of("->"));
  items.push_back(atom_of(d.result.name));
  return Sexpr::list(std::move(items));
}

void parse_renaming_clause(const Sexpr& clause, kernel::Renaming& r) {
  auto& target = clause.head() == "sorts" ? r.sorts : r.symbols;
  if (clause.head() != "sorts" && clause.head() != "ops") fail_at(Errc::SyntaxError, clause, "expected sorts or ops");
  for (std::size_t i = 1; i < clause.items.size(); ++i) {
    const Sexpr& p = clause.items[i];
    if (!p.is_list || p.items.size() != 2) fail_at(Errc::SyntaxError, p, "expected (from to)");
    if (!target.emplace(atom(p.items[0], "a name"), atom(p.items[1], "a name")).second) {
      fail_at(Errc::SyntaxError, p, "mapped twice");
    }
  }
}

std::vector<Sexpr> renaming_clauses(const kernel::Renaming& r) {
  std::vector<Sexpr> sorts{atom_of("sorts")};
  for (const auto& [a, b] : r.sorts) sorts.push_back(pair_of(a, b));
  std::vector<Sexpr> ops{atom_of("ops")};
  for (const auto& [a, b] : r.symbols) ops.push_back(pair_of(a, b));
  return {Sexpr::list(std::move(sorts)), Sexpr::list(std::move(ops))};
}

namespace {

const char* hole_text(meaning::Production::Hole h) {
  switch (h) {
    case meaning::Production::Hole::Self: return "self";
    case meaning::Production::Hole::Literal: return "lit";
    case meaning::Production::Hole::Variable: return "var";
  }
  return "self";
}

}  // namespace

meaning::SyntacticClass parse_class(const Sexpr& s, const kernel::Signature& sig, const SignatureLookup& lookup) {
  const std::string_view k = s.head();
  auto sort_at = [&](std::size_t i) { return Sort{atom(item(s, i, "a sort"), "a sort")}; };
  if (k == "closed" && s.items.size() == 2) return meaning::ClosedTermClass{sort_at(1)};
  if (k == "variable" && s.items.size() == 2) return meaning::VariableClass{sort_at(1)};
  if (k == "numeral") {
    meaning::NumeralClass c;
    for (std::size_t i = 1; i < s.items.size(); ++i) {
      const std::string& a = atom(s.items[i], "a sort or nonzero");
      if (a == "nonzero") {
        c.nonzero = true;
      } else if (!c.sort && i == 1) {
        c.sort = Sort{a};
      } else {
        fail_at(Errc::SyntaxError, s.items[i], "unexpected " + a);
      }
    }
    return c;
  }
  if (k == "poly" && s.items.size() >= 2) {
    meaning::PolyTermClass c{sort_at(1), std::nullopt, {}};
    for (std::size_t i = 2; i < s.items.size(); ++i) {
      const Sexpr& x = s.items[i];
      if (x.head() == "ring") {
        if (x.items.size() != 6) fail_at(Errc::SyntaxError, x, "expected (ring plus times neg zero one)");
        c.ring = {atom(x.items[1], "a symbol"), atom(x.items[2], "a symbol"), atom(x.items[3], "a symbol"),
                  atom(x.items[4], "a symbol"), atom(x.items[5], "a symbol")};
        continue;
      }
      if (!c.vars) c.vars.emplace();
      c.vars->push_back(atom(x, "a variable"));
    }
    return c;
  }
  if (k == "language" && s.items.size() == 3) {
    const std::string& theory = atom(s.items[1], "a theory");
    auto lsig = lookup(theory);
    if (!lsig) fail_at(Errc::UnknownReference, s.items[1], "unknown theory " + theory);
    Sort sort = sort_at(2);
    if (!lsig->has_sort(sort)) fail_at(Errc::SortError, s.items[2], "theory " + theory + " has no sort " + sort.name);
    return meaning::LanguageClass{theory, sort, lsig};
  }
  if (k == "grammar" && s.items.size() >= 2) {
    meaning::GrammarClass g{sort_at(1), {}};
    for (std::size_t i = 2; i < s.items.size(); ++i) {
      const Sexpr& p = s.items[i];
      if (p.head() != "prod" || p.items.size() < 2) fail_at(Errc::SyntaxError, p, "expected (prod pattern holes...)");
      meaning::Production prod{Term::lit(0, kernel::kSyn), {}};
      for (std::size_t j = 2; j < p.items.size(); ++j) {
        const Sexpr& h = p.items[j];
        if (!h.is_list || h.items.size() != 2) fail_at(Errc::SyntaxError, h, "expected (hole kind)");
        const std::string& kind = atom(h.items[1], "self, lit or var");
        meaning::Production::Hole hole = meaning::Production::Hole::Self;
        if (kind == "lit") {
          hole = meaning::Production::Hole::Literal;
        } else if (kind == "var") {
          hole = meaning::Production::Hole::Variable;
        } else if (kind != "self") {
          fail_at(Errc::SyntaxError, h.items[1], "expected self, lit or var");
        }
        prod.holes.emplace_back(atom(h.items[0], "a hole"), hole);
      }
      TermScope scope{&sig, {}, true, g.sort};
      prod.pattern = parse_term(p.items[1], scope, g.sort);
      g.productions.push_back(std::move(prod));
    }
    return g;
  }
  fail_at(Errc::SyntaxError, s, "unknown syntactic class");
}

Sexpr class_sexpr(const meaning::SyntacticClass& c) {
  if (const auto* k = std::get_if<meaning::PolyTermClass>(&c)) {
    std::vector<Sexpr> items{atom_of("poly"), atom_of(k->sort.name)};
    if (k->vars) {
      for (const auto& v : *k->vars) items.push_back(atom_of(v));
    }
    if (k->ring != semantics::RingSymbols{}) {
      items.push_back(tagged("ring", {atom_of(k->ring.plus), atom_of(k->ring.times), atom_of(k->ring.neg),
                                      atom_of(k->ring.zero), atom_of(k->ring.one)}));
    }
    return Sexpr::list(std::move(items));
  }
  if (const auto* k = std::get_if<meaning::GrammarClass>(&c)) {
    std::vector<Sexpr> items{atom_of("grammar"), atom_of(k->sort.name)};
    for (const auto& p : k->productions) {
      std::vector<Sexpr> prod{atom_of("prod"), term_sexpr(p.pattern)};
      for (const auto& [n, h] : p.holes) prod.push_back(pair_of(n, hole_text(h)));
      items.push_back(Sexpr::list(std::move(prod)));
    }
    return Sexpr::list(std::move(items));
  }
  return read_sexprs(meaning::to_string(c)).front();
}

semantics::Domain parse_domain(const Sexpr& s) {
  if (s.is_atom("int")) return semantics::IntDomain{};
  if (s.is_atom("syn")) return semantics::SynDomain{};
  if (s.head() == "zp" && s.items.size() == 2) return semantics::ZpDomain{parse_integer(s.items[1])};
  if (s.head() == "poly") {
    semantics::PolyDomain p;
    for (std::size_t i = 1; i < s.items.size(); ++i) p.vars.push_back(atom(s.items[i], "a variable"));
    return p;
  }
  fail_at(Errc::SyntaxError, s, "expected int, syn, (zp p) or (poly vars...)");
}

Sexpr domain_sexpr(const semantics::Domain& d) { return read_sexprs(semantics::to_string(d)).front(); }

namespace {

struct MeaningReader {
  const kernel::Signature& sig;
  const std::vector<std::pair<std::string, meaning::SyntacticClass>>& vars;

  meaning::Expr expr(const Sexpr& s) const {
    using meaning::Expr;
    if (s.is_atom()) {
      for (const auto& [n, c] : vars) {
        if (n == s.atom) return Expr::meta(s.atom);
      }
      fail_at(Errc::UnknownReference, s, "unbound syntax variable " + s.atom);
    }
    const std::string& h = atom(item(s, 0, "an expression"), "an expression head");
    if (h == "term") {
      if (s.items.size() != 2) fail_at(Errc::SyntaxError, s, "expected (term t)");
      TermScope scope{&sig, {}, true, {}};
      if (const Sort* n = sig.numeral_sort()) {
        scope.default_sort = *n;
      } else if (!sig.sorts().empty()) {
        scope.default_sort = sig.sorts().front();
      }
      return Expr::object(parse_term(s.items[1], scope));
    }
    if (h == "translate") {
      if (s.items.size() < 2) fail_at(Errc::SyntaxError, s, "expected (translate clauses... e)");
      kernel::Renaming r;
      for (std::size_t i = 1; i + 1 < s.items.size(); ++i) parse_renaming_clause(s.items[i], r);
      return Expr::translate(std::move(r), expr(s.items.back()));
    }
    std::vector<Expr> args;
    for (std::size_t i = 1; i < s.items.size(); ++i) args.push_back(expr(s.items[i]));
    return Expr::call(h, std::move(args));
  }

  meaning::SemExpr sem(const Sexpr& s) const {
    using meaning::SemExpr;
    const std::string& h = atom(item(s, 0, "a semantic expression"), "a semantic operator");
    if (h == "den") {
      if (s.items.size() != 3) fail_at(Errc::SyntaxError, s, "expected (den model e)");
      const std::string& m = atom(s.items[1], "a model");
      auto dot = m.find('.');
      meaning::ModelRef ref = dot == std::string::npos ? meaning::ModelRef{"", m}
                                                       : meaning::ModelRef{m.substr(0, dot), m.substr(dot + 1)};
      return SemExpr::den(std::move(ref), expr(s.items[2]));
    }
    if (h == "numeral") {
      if (s.items.size() != 2) fail_at(Errc::SyntaxError, s, "expected (numeral e)");
      return SemExpr::numeral(expr(s.items[1]));
    }
    const auto& ops = meaning::semantic_operators();
    if (std::find(ops.begin(), ops.end(), h) == ops.end()) {
      fail_at(Errc::UnknownReference, s.items[0], "unknown semantic operator " + h);
    }
    std::vector<std::string> params;
    std::vector<SemExpr> args;
    for (std::size_t i = 1; i < s.items.size(); ++i) {
      if (s.items[i].is_atom()) {
        if (!args.empty()) fail_at(Errc::SyntaxError, s.items[i], "parameters come before arguments");
        params.push_back(s.items[i].atom);
      } else {
        args.push_back(sem(s.items[i]));
      }
    }
    return SemExpr::apply(h, std::move(params), std::move(args));
  }

  meaning::Claim claim(const Sexpr& s) const {
    using meaning::Claim;
    const std::string_view h = s.head();
    if (h == "=" && s.items.size() == 3) return Claim::equal(sem(s.items[1]), sem(s.items[2]));
    if (h == "and") {
      std::vector<Claim> parts;
      for (std::size_t i = 1; i < s.items.size(); ++i) parts.push_back(claim(s.items[i]));
      return Claim::all(std::move(parts));
    }
    if (h == "holds" && s.items.size() == 3) return Claim::holds(atom(s.items[1], "a predicate"), expr(s.items[2]));
    fail_at(Errc::SyntaxError, s, "expected (= a b), (and ...) or (holds p e)");
  }
};

Sexpr expr_sexpr(const meaning::Expr& e) {
  using meaning::Expr;
  switch (e.kind) {
    case Expr::Kind::Meta: return atom_of(e.name);
    case Expr::Kind::Object: return tagged("term", {term_sexpr(e.term)});
    case Expr::Kind::Call: {
      std::vector<Sexpr> items{atom_of(e.name)};
      for (const auto& a : e.args) items.push_back(expr_sexpr(a));
      return Sexpr::list(std::move(items));
    }
    case Expr::Kind::Translate: {
      std::vector<Sexpr> items = renaming_clauses(*e.renaming);
      items.push_back(expr_sexpr(e.args.at(0)));
      return tagged("translate", std::move(items));
    }
  }
  return {};
}

Sexpr sem_sexpr(const meaning::SemExpr& s) {
  using meaning::SemExpr;
  switch (s.kind) {
    case SemExpr::Kind::Den: {
      std::string m = s.model.theory.empty() ? s.model.model : s.model.theory + "." + s.model.model;
      return tagged("den", {atom_of(m), expr_sexpr(s.expr)});
    }
    case SemExpr::Kind::Numeral: return tagged("numeral", {expr_sexpr(s.expr)});
    case SemExpr::Kind::Apply: {
      std::vector<Sexpr> items;
      for (const auto& p : s.params) items.push_back(atom_of(p));
      for (const auto& a : s.args) items.push_back(sem_sexpr(a));
      return tagged(s.op, std::move(items));
    }
  }
  return {};
}

Sexpr claim_sexpr(const meaning::Claim& c) {
  using meaning::Claim;
  switch (c.kind) {
    case Claim::Kind::Equal: return tagged("=", {sem_sexpr(c.lhs), sem_sexpr(c.rhs)});
    case Claim::Kind::And: {
      std::vector<Sexpr> parts;
      for (const auto& p : c.parts) parts.push_back(claim_sexpr(p));
      return tagged("and", std::move(parts));
    }
    case Claim::Kind::Holds: return tagged("holds", {atom_of(c.predicate), expr_sexpr(c.subject)});
  }
  return {};
}

}  // namespace

meaning::MeaningFormula parse_meaning(const Sexpr& s, const kernel::Signature& sig, const SignatureLookup& lookup) {
  if (!s.is_list || s.items.size() != 4 || !s.items[2].is_list) {
    fail_at(Errc::SyntaxError, s, "expected (name transformer ((var class)...) claim)");
  }
  meaning::MeaningFormula mf;
  mf.name = atom(s.items[0], "a formula name");
  mf.transformer = atom(s.items[1], "a transformer name");
  for (const auto& v : s.items[2].items) {
    if (!v.is_list || v.items.size() != 2) fail_at(Errc::SyntaxError, v, "expected (var class)");
    mf.vars.emplace_back(atom(v.items[0], "a variable"), parse_class(v.items[1], sig, lookup));
  }
  mf.claim = MeaningReader{sig, mf.vars}.claim(s.items[3]);
  located(s, [&] { meaning::check_shape(mf); });
  return mf;
}

Sexpr meaning_sexpr(const meaning::MeaningFormula& mf) {
  std::vector<Sexpr> vars;
  for (const auto& [n, c] : mf.vars) vars.push_back(Sexpr::list({atom_of(n), class_sexpr(c)}));
  return Sexpr::list({atom_of(mf.name), atom_of(mf.transformer), Sexpr::list(std::move(vars)), claim_sexpr(mf.claim)});
}

namespace {

transformers::PatternVar parse_pattern_var(const Sexpr& s) {
  using transformers::Guard;
  using transformers::PatternVar;
  if (!s.is_list || s.items.size() < 2) fail_at(Errc::SyntaxError, s, "expected (var sort [lit|var] guards...)");
  PatternVar v{atom(s.items[0], "a variable"), Sort{atom(s.items[1], "a sort")}, PatternVar::Kind::Any, {}};
  for (std::size_t i = 2; i < s.items.size(); ++i) {
    const std::string& a = atom(s.items[i], "a kind or guard");
    if (a == "lit") {
      v.kind = PatternVar::Kind::Literal;
    } else if (a == "var") {
      v.kind = PatternVar::Kind::Variable;
    } else if (a == "even") {
      v.guards.push_back(Guard::Even);
    } else if (a == "odd") {
      v.guards.push_back(Guard::Odd);
    } else if (a == "positive") {
      v.guards.push_back(Guard::Positive);
    } else {
      fail_at(Errc::SyntaxError, s.items[i], "unknown qualifier " + a);
    }
  }
  return v;
}

}  // namespace

transformers::RuleSet parse_ruleset(const std::vector<Sexpr>& clauses, const kernel::Signature& base) {
  transformers::RuleSet rs;
  bool has_head = false;
  for (const auto& c : clauses) {
    if (c.head() == "head") {
      rs.head = parse_decl(Sexpr::list({c.items.begin() + 1, c.items.end()}));
      has_head = true;
    } else if (c.head() == "aux") {
      rs.aux.push_back(parse_decl(Sexpr::list({c.items.begin() + 1, c.items.end()})));
    } else if (c.head() == "fuel" && c.items.size() == 2) {
      Integer fuel = parse_integer(c.items[1]);
      if (fuel < 1) fail_at(Errc::SyntaxError, c, "fuel must be positive");
      rs.fuel = static_cast<std::size_t>(fuel);
    }
  }
  if (!has_head) throw Error(Errc::SyntaxError, "rules need a (head ...) clause", clauses.empty() ? SourceLoc{} : clauses.front().loc);
  const kernel::Signature sig = transformers::rewriting_signature(base, rs);
  for (const auto& c : clauses) {
    if (c.head() != "rule") continue;
    if (c.items.size() != 4 || !c.items[1].is_list) fail_at(Errc::SyntaxError, c, "expected (rule (vars) lhs rhs)");
    std::vector<transformers::PatternVar> vars;
    TermScope scope{&sig, {}, true, {}};
    for (const auto& v : c.items[1].items) {
      vars.push_back(parse_pattern_var(v));
      scope.bound.emplace(vars.back().name, vars.back().sort);
    }
    Term lhs = parse_term(c.items[2], scope);
    std::optional<Sort> sort;
    try {
      sort = kernel::well_sorted(sig, lhs);
    } catch (const Error&) {
      sort = infer_sort(c.items[2], scope);
    }
    Term rhs = parse_term(c.items[3], scope, sort);
    rs.rules.push_back({std::move(vars), std::move(lhs), std::move(rhs)});
  }
  return rs;
}

std::vector<Sexpr> ruleset_clauses(const transformers::RuleSet& rs) {
  std::vector<Sexpr> out;
  Sexpr head = decl_sexpr(rs.head);
  head.items.insert(head.items.begin(), atom_of("head"));
  out.push_back(std::move(head));
  for (const auto& a : rs.aux) {
    Sexpr aux = decl_sexpr(a);
    aux.items.insert(aux.items.begin(), atom_of("aux"));
    out.push_back(std::move(aux));
  }
  if (rs.fuel != transformers::RuleSet{}.fuel) out.push_back(tagged("fuel", {atom_of(std::to_string(rs.fuel))}));
  for (const auto& r : rs.rules) {
    std::vector<Sexpr> vars;
    for (const auto& v : r.vars) {
      std::vector<Sexpr> items{atom_of(v.name), atom_of(v.sort.name)};
      if (v.kind != transformers::PatternVar::Kind::Any) items.push_back(atom_of(std::string(to_string(v.kind))));
      for (auto g : v.guards) items.push_back(atom_of(std::string(to_string(g))));
      vars.push_back(Sexpr::list(std::move(items)));
    }
    out.push_back(tagged("rule", {Sexpr::list(std::move(vars)), term_sexpr(r.lhs), term_sexpr(r.rhs)}));
  }
  return out;
}

}  // namespace btg::text
