#include "btg/meaning/meaning_formula.hpp"

#include <algorithm>
#include <set>

#include "btg/error.hpp"

namespace btg::meaning {

Expr Expr::meta(std::string name) {
  Expr e;
  e.kind = Kind::Meta;
  e.name = std::move(name);
  return e;
}

Expr Expr::object(Term t) {
  Expr e;
  e.kind = Kind::Object;
  e.term = std::move(t);
  return e;
}

Expr Expr::call(std::string transformer, std::vector<Expr> args) {
  Expr e;
  e.kind = Kind::Call;
  e.name = std::move(transformer);
  e.args = std::move(args);
  return e;
}

Expr Expr::translate(kernel::Renaming r, Expr inner) {
  Expr e;
  e.kind = Kind::Translate;
  e.renaming = std::make_shared<const kernel::Renaming>(std::move(r));
  e.args.push_back(std::move(inner));
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.name != b.name || a.term != b.term || a.args != b.args) return false;
  if (static_cast<bool>(a.renaming) != static_cast<bool>(b.renaming)) return false;
  return !a.renaming || *a.renaming == *b.renaming;
}

SemExpr SemExpr::den(ModelRef m, Expr e) {
  SemExpr s;
  s.kind = Kind::Den;
  s.model = std::move(m);
  s.expr = std::move(e);
  return s;
}

SemExpr SemExpr::numeral(Expr e) {
  SemExpr s;
  s.kind = Kind::Numeral;
  s.expr = std::move(e);
  return s;
}

SemExpr SemExpr::apply(std::string op, std::vector<std::string> params, std::vector<SemExpr> args) {
  SemExpr s;
  s.kind = Kind::Apply;
  s.op = std::move(op);
  s.params = std::move(params);
  s.args = std::move(args);
  return s;
}

const std::vector<std::string>& semantic_operators() {
  static const std::vector<std::string> ops{"pderiv", "add", "mul", "neg"};
  return ops;
}

Claim Claim::equal(SemExpr l, SemExpr r) {
  Claim c;
  c.kind = Kind::Equal;
  c.lhs = std::move(l);
  c.rhs = std::move(r);
  return c;
}

Claim Claim::all(std::vector<Claim> parts) {
  Claim c;
  c.kind = Kind::And;
  c.parts = std::move(parts);
  return c;
}

Claim Claim::holds(std::string predicate, Expr subject) {
  Claim c;
  c.kind = Kind::Holds;
  c.predicate = std::move(predicate);
  c.subject = std::move(subject);
  return c;
}

const std::vector<std::string>& predicates() {
  static const std::vector<std::string> preds{"factorization-canonical", "closed", "literal"};
  return preds;
}

namespace {

template <typename Fn>
void walk_expr(const Expr& e, Fn&& fn) {
  fn(e);
  for (const auto& a : e.args) walk_expr(a, fn);
}

template <typename ExprFn, typename SemFn>
void walk_sem(const SemExpr& s, ExprFn&& on_expr, SemFn&& on_sem) {
  on_sem(s);
  if (s.kind != SemExpr::Kind::Apply) walk_expr(s.expr, on_expr);
  for (const auto& a : s.args) walk_sem(a, on_expr, on_sem);
}

template <typename ExprFn, typename SemFn>
void walk_claim(const Claim& c, ExprFn&& on_expr, SemFn&& on_sem) {
  switch (c.kind) {
    case Claim::Kind::Equal:
      walk_sem(c.lhs, on_expr, on_sem);
      walk_sem(c.rhs, on_expr, on_sem);
      break;
    case Claim::Kind::And:
      for (const auto& p : c.parts) walk_claim(p, on_expr, on_sem);
      break;
    case Claim::Kind::Holds: walk_expr(c.subject, on_expr); break;
  }
}

Expr translate_expr(const kernel::Renaming& r, const std::map<std::string, std::string>& tmap, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Meta: return e;
    case Expr::Kind::Object: return Expr::object(kernel::translate(r, e.term));
    case Expr::Kind::Call: {
      std::vector<Expr> args;
      for (const auto& a : e.args) args.push_back(translate_expr(r, tmap, a));
      auto it = tmap.find(e.name);
      return Expr::call(it == tmap.end() ? e.name : it->second, std::move(args));
    }
    case Expr::Kind::Translate:
      raise(Errc::NonTransportable, "meaning formulas with explicit translations cannot be transported");
  }
  return e;
}

SemExpr translate_sem(const kernel::Renaming& r, const std::map<std::string, std::string>& tmap, const SemExpr& s) {
  SemExpr out = s;
  if (s.kind != SemExpr::Kind::Apply) out.expr = translate_expr(r, tmap, s.expr);
  out.args.clear();
  for (const auto& a : s.args) out.args.push_back(translate_sem(r, tmap, a));
  return out;
}

Claim translate_claim(const kernel::Renaming& r, const std::map<std::string, std::string>& tmap, const Claim& c) {
  Claim out = c;
  switch (c.kind) {
    case Claim::Kind::Equal:
      out.lhs = translate_sem(r, tmap, c.lhs);
      out.rhs = translate_sem(r, tmap, c.rhs);
      break;
    case Claim::Kind::And:
      out.parts.clear();
      for (const auto& p : c.parts) out.parts.push_back(translate_claim(r, tmap, p));
      break;
    case Claim::Kind::Holds: out.subject = translate_expr(r, tmap, c.subject); break;
  }
  return out;
}

std::string renaming_text(const kernel::Renaming& r) {
  std::string out = "(sorts";
  for (const auto& [a, b] : r.sorts) out += " (" + a + " " + b + ")";
  out += ") (ops";
  for (const auto& [a, b] : r.symbols) out += " (" + a + " " + b + ")";
  return out + ")";
}

}  // namespace

std::vector<std::string> called_transformers(const MeaningFormula& mf) {
  std::vector<std::string> out;
  walk_claim(
      mf.claim,
      [&](const Expr& e) {
        if (e.kind == Expr::Kind::Call && std::find(out.begin(), out.end(), e.name) == out.end()) {
          out.push_back(e.name);
        }
      },
      [](const SemExpr&) {});
  return out;
}

std::vector<ModelRef> model_refs(const MeaningFormula& mf) {
  std::vector<ModelRef> out;
  walk_claim(
      mf.claim, [](const Expr&) {},
      [&](const SemExpr& s) {
        if (s.kind == SemExpr::Kind::Den && std::find(out.begin(), out.end(), s.model) == out.end()) {
          out.push_back(s.model);
        }
      });
  return out;
}

void check_shape(const MeaningFormula& mf) {
  auto calls = called_transformers(mf);
  if (std::find(calls.begin(), calls.end(), mf.transformer) == calls.end()) {
    raise(Errc::UnknownReference, "meaning formula " + mf.name + " never applies " + mf.transformer);
  }
  std::set<std::string> bound;
  for (const auto& [name, cls] : mf.vars) {
    if (!bound.insert(name).second) raise(Errc::NameClash, "syntax variable " + name + " bound twice in " + mf.name);
  }
  const auto& ops = semantic_operators();
  const auto& preds = predicates();
  walk_claim(
      mf.claim,
      [&](const Expr& e) {
        if (e.kind == Expr::Kind::Meta && !bound.count(e.name)) {
          raise(Errc::UnknownReference, "unbound syntax variable " + e.name + " in " + mf.name);
        }
      },
      [&](const SemExpr& s) {
        if (s.kind == SemExpr::Kind::Apply && std::find(ops.begin(), ops.end(), s.op) == ops.end()) {
          raise(Errc::UnknownReference, "unknown semantic operator " + s.op + " in " + mf.name);
        }
      });
  std::vector<const Claim*> stack{&mf.claim};
  while (!stack.empty()) {
    const Claim* c = stack.back();
    stack.pop_back();
    if (c->kind == Claim::Kind::Holds && std::find(preds.begin(), preds.end(), c->predicate) == preds.end()) {
      raise(Errc::UnknownReference, "unknown predicate " + c->predicate + " in " + mf.name);
    }
    for (const auto& p : c->parts) stack.push_back(&p);
  }
}

MeaningFormula translate_meaning(const kernel::Renaming& r, const std::map<std::string, std::string>& transformers,
                                 const MeaningFormula& mf) {
  MeaningFormula out;
  out.name = mf.name;
  auto it = transformers.find(mf.transformer);
  out.transformer = it == transformers.end() ? mf.transformer : it->second;
  for (const auto& [name, cls] : mf.vars) out.vars.emplace_back(name, translate_class(r, cls));
  out.claim = translate_claim(r, transformers, mf.claim);
  return out;
}

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Meta: return e.name;
    case Expr::Kind::Object: return "(term " + kernel::to_string(e.term) + ")";
    case Expr::Kind::Call: {
      std::string out = "(" + e.name;
      for (const auto& a : e.args) out += " " + to_string(a);
      return out + ")";
    }
    case Expr::Kind::Translate: return "(translate " + renaming_text(*e.renaming) + " " + to_string(e.args.at(0)) + ")";
  }
  return {};
}

std::string to_string(const SemExpr& s) {
  switch (s.kind) {
    case SemExpr::Kind::Den: {
      std::string m = s.model.theory.empty() ? s.model.model : s.model.theory + "." + s.model.model;
      return "(den " + m + " " + to_string(s.expr) + ")";
    }
    case SemExpr::Kind::Numeral: return "(numeral " + to_string(s.expr) + ")";
    case SemExpr::Kind::Apply: {
      std::string out = "(" + s.op;
      for (const auto& p : s.params) out += " " + p;
      for (const auto& a : s.args) out += " " + to_string(a);
      return out + ")";
    }
  }
  return {};
}

std::string to_string(const Claim& c) {
  switch (c.kind) {
    case Claim::Kind::Equal: return "(= " + to_string(c.lhs) + " " + to_string(c.rhs) + ")";
    case Claim::Kind::And: {
      std::string out = "(and";
      for (const auto& p : c.parts) out += " " + to_string(p);
      return out + ")";
    }
    case Claim::Kind::Holds: return "(holds " + c.predicate + " " + to_string(c.subject) + ")";
  }
  return {};
}

std::string to_string(const MeaningFormula& mf) {
  std::string out = "(" + mf.name + " " + mf.transformer + " (";
  for (std::size_t i = 0; i < mf.vars.size(); ++i) {
    if (i > 0) out += " ";
    out += "(" + mf.vars[i].first + " " + to_string(mf.vars[i].second) + ")";
  }
  return out + ") " + to_string(mf.claim) + ")";
}

}  // namespace btg::meaning
