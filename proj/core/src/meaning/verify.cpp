#include "btg/meaning/verify.hpp"

#include <algorithm>

#include "btg/error.hpp"
#include "btg/semantics/denote.hpp"
#include "btg/transformers/builtins.hpp"

namespace btg::meaning {

namespace {

using semantics::Value;
using Assignment = std::vector<std::pair<std::string, Term>>;

struct Evaluator {
  const VerifyContext& ctx;
  const Assignment& assignment;

  Term expr(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::Meta:
        for (const auto& [n, t] : assignment) {
          if (n == e.name) return t;
        }
        raise(Errc::UnknownReference, "unbound syntax variable " + e.name);
      case Expr::Kind::Object: return e.term;
      case Expr::Kind::Call: {
        std::vector<Term> args;
        for (const auto& a : e.args) args.push_back(expr(a));
        return transformers::apply_transformer(*ctx.signature, *ctx.transformers, e.name, args);
      }
      case Expr::Kind::Translate: return kernel::translate(*e.renaming, expr(e.args.at(0)));
    }
    raise(Errc::UnknownReference, "malformed expression");
  }

  Value sem(const SemExpr& s) const {
    switch (s.kind) {
      case SemExpr::Kind::Den: {
        const semantics::Model* m = ctx.resolve(s.model);
        if (m == nullptr) raise(Errc::UnknownReference, "no designated model " + s.model.model);
        return semantics::denote(*m, expr(s.expr));
      }
      case SemExpr::Kind::Numeral: {
        Term t = expr(s.expr);
        if (!t.is_lit()) raise(Errc::HostError, "expected a literal, got " + kernel::to_string(t));
        return t.value();
      }
      case SemExpr::Kind::Apply: {
        std::vector<Value> args;
        for (const auto& a : s.args) args.push_back(sem(a));
        return apply_op(s.op, s.params, args);
      }
    }
    raise(Errc::UnknownReference, "malformed semantic expression");
  }

  static Value apply_op(const std::string& op, const std::vector<std::string>& params, const std::vector<Value>& a) {
    auto need = [&](std::size_t n) {
      if (a.size() != n) raise(Errc::ArityMismatch, op + " takes " + std::to_string(n) + " arguments");
    };
    if (op == "pderiv") {
      need(1);
      if (params.size() != 1) raise(Errc::ArityMismatch, "pderiv takes one variable");
      const auto* p = std::get_if<semantics::Poly>(&a[0]);
      if (p == nullptr) raise(Errc::InvalidModel, "pderiv needs a polynomial value");
      return p->derivative(params[0]);
    }
    if (op == "neg") {
      need(1);
      return std::visit(
          [](const auto& v) -> Value {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, semantics::Poly>) {
              return -v;
            } else if constexpr (std::is_same_v<T, semantics::Residue>) {
              return semantics::Residue{mod_floor(-v.value, v.modulus), v.modulus};
            } else {
              raise(Errc::InvalidModel, "neg on syntax");
            }
          },
          a[0]);
    }
    need(2);
    const bool add = op == "add";
    if (!add && op != "mul") raise(Errc::UnknownReference, "unknown semantic operator " + op);
    if (a[0].index() != a[1].index()) raise(Errc::InvalidModel, op + " on values of different carriers");
    if (const auto* x = std::get_if<Integer>(&a[0])) {
      const auto& y = std::get<Integer>(a[1]);
      return add ? Integer(*x + y) : Integer(*x * y);
    }
    if (const auto* x = std::get_if<semantics::Poly>(&a[0])) {
      const auto& y = std::get<semantics::Poly>(a[1]);
      return add ? *x + y : *x * y;
    }
    if (const auto* x = std::get_if<semantics::Residue>(&a[0])) {
      const auto& y = std::get<semantics::Residue>(a[1]);
      if (x->modulus != y.modulus) raise(Errc::InvalidModel, op + " on different moduli");
      return semantics::Residue{mod_floor(add ? Integer(x->value + y.value) : Integer(x->value * y.value), x->modulus),
                                x->modulus};
    }
    raise(Errc::InvalidModel, op + " on syntax");
  }

  // Empty string when the claim holds; otherwise why not.
  std::string claim(const Claim& c) const {
    switch (c.kind) {
      case Claim::Kind::Equal: {
        Value l = sem(c.lhs);
        Value r = sem(c.rhs);
        if (l == r) return {};
        return to_string(c.lhs) + " is " + semantics::to_string(l) + " but " + to_string(c.rhs) + " is " +
               semantics::to_string(r);
      }
      case Claim::Kind::And:
        for (const auto& p : c.parts) {
          if (auto why = claim(p); !why.empty()) return why;
        }
        return {};
      case Claim::Kind::Holds: {
        Term t = expr(c.subject);
        if (predicate(c.predicate, t)) return {};
        return c.predicate + " fails on " + kernel::to_string(t);
      }
    }
    return "malformed claim";
  }

  static bool prime_by_trial_division(const Integer& n) {
    if (n < 2) return false;
    for (Integer d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }

  static bool predicate(const std::string& name, const Term& t) {
    if (name == "closed") return kernel::is_closed(t);
    if (name == "literal") return t.is_lit();
    if (name == "factorization-canonical") {
      auto f = transformers::read_factorization(t);
      if (!f || (f->unit != 1 && f->unit != -1)) return false;
      for (std::size_t i = 0; i < f->factors.size(); ++i) {
        const auto& [p, m] = f->factors[i];
        if (m < 1 || !prime_by_trial_division(p)) return false;
        if (i > 0 && !(f->factors[i - 1].first < p)) return false;
      }
      return true;
    }
    raise(Errc::UnknownReference, "unknown predicate " + name);
  }
};

std::vector<std::vector<Term>> enumerate_vars(const VerifyContext& ctx, const MeaningFormula& mf,
                                              const semantics::ExhaustiveTerms& s) {
  std::vector<std::vector<Term>> out;
  for (const auto& [name, cls] : mf.vars) {
    out.push_back(enumerate_class(cls, *ctx.signature, s.max_depth, s.pool));
    if (out.back().empty()) {
      raise(Errc::GeneratorEmpty, "class " + to_string(cls) + " of " + name + " has no member up to depth " +
                                      std::to_string(s.max_depth));
    }
  }
  return out;
}

Assignment shrink(const VerifyContext& ctx, const MeaningFormula& mf, Assignment current) {
  // Greedy descent; each accepted step strictly shrinks one term, so this
  // terminates, and the bound only caps pathological classes.
  for (int step = 0; step < 500; ++step) {
    bool moved = false;
    for (std::size_t i = 0; i < current.size() && !moved; ++i) {
      for (const auto& cand : shrink_candidates(current[i].second, mf.vars[i].second, *ctx.signature)) {
        Assignment trial = current;
        trial[i].second = cand;
        if (!evaluate_case(ctx, mf, trial).holds) {
          current = std::move(trial);
          moved = true;
          break;
        }
      }
    }
    if (!moved) break;
  }
  return current;
}

std::string assignment_text(const Assignment& a) {
  std::string out;
  for (const auto& [n, t] : a) {
    if (!out.empty()) out += ", ";
    out += n + " = " + kernel::to_string(t);
  }
  return out;
}

}  // namespace

CaseOutcome evaluate_case(const VerifyContext& ctx, const MeaningFormula& mf, const Assignment& assignment) {
  Evaluator ev{ctx, assignment};
  try {
    std::string why = ev.claim(mf.claim);
    return {why.empty(), why};
  } catch (const Error& e) {
    return {false, e.what()};
  }
}

VerificationReport verify_meaning(const VerifyContext& ctx, const MeaningFormula& mf,
                                  const semantics::CheckStrategy& strategy) {
  VerificationReport out;
  out.theory = ctx.theory;
  out.formula = mf.name;
  out.transformer = mf.transformer;
  if (const auto* t = ctx.transformers->find(mf.transformer)) out.provenance = std::string(transformers::provenance(*t));
  for (const auto& [n, c] : mf.vars) out.classes.emplace_back(n, to_string(c));
  out.report.strategy = strategy;

  for (const auto& ref : model_refs(mf)) {
    if (ctx.resolve(ref) == nullptr) {
      out.report.status = semantics::Status::Indeterminate;
      out.report.note = "no designated model " + (ref.theory.empty() ? ref.model : ref.theory + "." + ref.model);
      return out;
    }
  }

  auto fail = [&](std::size_t index, const Assignment& original, bool shrunk) {
    out.report.status = semantics::Status::Fail;
    out.report.cases = index + 1;
    semantics::Counterexample cex;
    cex.case_index = index;
    Assignment witness = shrunk ? shrink(ctx, mf, original) : original;
    cex.terms = witness;
    cex.note = evaluate_case(ctx, mf, witness).note;
    if (witness != original) cex.note += " (shrunk from " + assignment_text(original) + ")";
    out.report.counterexample = std::move(cex);
  };

  if (const auto* ex = std::get_if<semantics::ExhaustiveTerms>(&strategy)) {
    auto domains = enumerate_vars(ctx, mf, *ex);
    std::vector<std::size_t> idx(domains.size(), 0);
    std::size_t index = 0;
    while (true) {
      Assignment a;
      for (std::size_t i = 0; i < domains.size(); ++i) a.emplace_back(mf.vars[i].first, domains[i][idx[i]]);
      CaseOutcome r = evaluate_case(ctx, mf, a);
      if (!r.holds) {
        fail(index, a, false);
        return out;
      }
      ++index;
      std::size_t pos = idx.size();
      while (pos > 0 && ++idx[pos - 1] == domains[pos - 1].size()) idx[--pos] = 0;
      if (pos == 0) break;
    }
    out.report.status = semantics::Status::Pass;
    out.report.cases = index;
    return out;
  }
  if (const auto* rs = std::get_if<semantics::RandomSamples>(&strategy)) {
    Rng rng(rs->seed);
    for (std::size_t index = 0; index < rs->samples; ++index) {
      Assignment a;
      for (const auto& [name, cls] : mf.vars) {
        auto t = random_member(cls, *ctx.signature, rng, rs->max_depth);
        if (!t) raise(Errc::GeneratorEmpty, "class " + to_string(cls) + " of " + name + " has no member");
        a.emplace_back(name, *t);
      }
      CaseOutcome r = evaluate_case(ctx, mf, a);
      if (!r.holds) {
        fail(index, a, true);
        return out;
      }
    }
    out.report.status = semantics::Status::Pass;
    out.report.cases = rs->samples;
    return out;
  }
  raise(Errc::GeneratorEmpty, "exhaustive-domain enumeration does not apply to syntax variables");
}

bool replays(const VerifyContext& ctx, const MeaningFormula& mf, const semantics::Counterexample& cex) {
  return !evaluate_case(ctx, mf, cex.terms).holds;
}

}  // namespace btg::meaning
