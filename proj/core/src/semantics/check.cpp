#include "btg/semantics/check.hpp"

#include "btg/error.hpp"
#include "btg/kernel/operations.hpp"
#include "btg/semantics/denote.hpp"

namespace btg::semantics {

std::string to_string(const CheckStrategy& s) {
  struct Visitor {
    std::string operator()(const ExhaustiveDomain&) const { return "exhaustive-domain"; }
    std::string operator()(const ExhaustiveTerms& e) const {
      std::string out = "exhaustive-terms(depth=" + std::to_string(e.max_depth) + ", pool={";
      for (std::size_t i = 0; i < e.pool.size(); ++i) out += (i ? "," : "") + e.pool[i].str();
      return out + "})";
    }
    std::string operator()(const RandomSamples& r) const {
      return "random(samples=" + std::to_string(r.samples) + ", seed=" + std::to_string(r.seed) +
             ", depth=" + std::to_string(r.max_depth) + ")";
    }
  };
  return std::visit(Visitor{}, s);
}

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

Value random_value(const Domain& d, Rng& rng) {
  if (std::holds_alternative<IntDomain>(d)) return Integer(rng.range(-kRandomIntBound, kRandomIntBound));
  if (const auto* z = std::get_if<ZpDomain>(&d)) {
    return Residue{Integer(rng.below(static_cast<std::uint64_t>(z->p))), z->p};
  }
  if (const auto* pd = std::get_if<PolyDomain>(&d)) {
    Poly p;
    const std::size_t monomials = rng.below(4);
    for (std::size_t i = 0; i < monomials; ++i) {
      Poly m = Poly::constant(rng.range(-9, 9));
      for (const auto& v : pd->vars) {
        for (std::uint64_t e = rng.below(3); e > 0; --e) m = m * Poly::variable(v);
      }
      p = p + m;
    }
    return p;
  }
  raise(Errc::InfiniteCarrier, "cannot sample the Syn carrier");
}

namespace {

std::vector<Value> domain_elements(const Domain& d) {
  const auto* z = std::get_if<ZpDomain>(&d);
  if (z == nullptr) raise(Errc::InfiniteCarrier, "carrier " + to_string(d) + " is infinite");
  std::vector<Value> out;
  for (Integer i = 0; i < z->p; ++i) out.push_back(Residue{i, z->p});
  return out;
}

struct Runner {
  const Model& m;
  const kernel::Formula& f;
  CheckReport report;

  // Returns false once a failing case is recorded.
  bool run(Env env, std::vector<std::pair<std::string, kernel::Term>> terms = {}) {
    const std::size_t index = report.cases++;
    if (holds(m, f, env)) return true;
    Counterexample cex;
    cex.case_index = index;
    for (const auto& b : f.binders) cex.assignment.emplace_back(b.name, env.at(b.name));
    cex.terms = std::move(terms);
    report.status = Status::Fail;
    report.counterexample = std::move(cex);
    return false;
  }
};

const Domain& binder_carrier(const Model& m, const kernel::Binder& b) {
  const Domain* d = m.carrier(b.sort);
  if (d == nullptr) raise(Errc::InvalidModel, "model " + m.name() + " has no carrier for " + b.sort.name);
  return *d;
}

}  // namespace

CheckReport check_formula(const Model& m, const kernel::Formula& f, const CheckStrategy& strategy) {
  Runner r{m, f, CheckReport{Status::Pass, 0, std::nullopt, strategy, {}}};
  const auto& binders = f.binders;

  if (std::holds_alternative<ExhaustiveDomain>(strategy)) {
    std::vector<std::vector<Value>> pools;
    for (const auto& b : binders) pools.push_back(domain_elements(binder_carrier(m, b)));
    std::vector<std::size_t> idx(binders.size(), 0);
    while (true) {
      Env env;
      for (std::size_t i = 0; i < binders.size(); ++i) env.emplace(binders[i].name, pools[i][idx[i]]);
      if (!r.run(std::move(env))) break;
      std::size_t pos = idx.size();
      while (pos > 0 && ++idx[pos - 1] == pools[pos - 1].size()) idx[--pos] = 0;
      if (pos == 0) break;
    }
  } else if (const auto* et = std::get_if<ExhaustiveTerms>(&strategy)) {
    std::vector<std::vector<kernel::Term>> pools;
    for (const auto& b : binders) {
      pools.push_back(kernel::enumerate_terms(m.signature(), b.sort, et->max_depth, et->pool));
      if (pools.back().empty()) {
        r.report.status = Status::Indeterminate;
        r.report.note = "no closed terms of sort " + b.sort.name;
        return r.report;
      }
    }
    std::vector<std::vector<Value>> values;
    for (const auto& pool : pools) {
      values.emplace_back();
      for (const auto& t : pool) values.back().push_back(denote(m, t));
    }
    std::vector<std::size_t> idx(binders.size(), 0);
    while (true) {
      Env env;
      std::vector<std::pair<std::string, kernel::Term>> terms;
      for (std::size_t i = 0; i < binders.size(); ++i) {
        env.emplace(binders[i].name, values[i][idx[i]]);
        terms.emplace_back(binders[i].name, pools[i][idx[i]]);
      }
      if (!r.run(std::move(env), std::move(terms))) break;
      std::size_t pos = idx.size();
      while (pos > 0 && ++idx[pos - 1] == pools[pos - 1].size()) idx[--pos] = 0;
      if (pos == 0) break;
    }
  } else {
    const auto& rs = std::get<RandomSamples>(strategy);
    std::vector<const Domain*> doms;
    for (const auto& b : binders) {
      doms.push_back(&binder_carrier(m, b));
      if (std::holds_alternative<SynDomain>(*doms.back())) {
        r.report.status = Status::Indeterminate;
        r.report.note = "cannot sample the Syn carrier";
        return r.report;
      }
    }
    Rng rng(rs.seed);
    const std::size_t samples = binders.empty() ? std::min<std::size_t>(rs.samples, 1) : rs.samples;
    for (std::size_t s = 0; s < samples; ++s) {
      Env env;
      for (std::size_t i = 0; i < binders.size(); ++i) env.emplace(binders[i].name, random_value(*doms[i], rng));
      if (!r.run(std::move(env))) break;
    }
  }
  return r.report;
}

bool refails(const Model& m, const kernel::Formula& f, const Counterexample& cex) {
  Env env;
  for (const auto& [name, value] : cex.assignment) env.emplace(name, value);
  for (const auto& b : f.binders) {
    if (!env.count(b.name)) return false;
  }
  return !holds(m, f, env);
}

}  // namespace btg::semantics
