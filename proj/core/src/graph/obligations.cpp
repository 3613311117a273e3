#include "btg/graph/obligations.hpp"

#include "btg/error.hpp"
#include "btg/kernel/random.hpp"
#include "btg/semantics/denote.hpp"
#include "btg/transformers/builtins.hpp"

namespace btg::graph {

namespace {

using semantics::CheckReport;
using semantics::Status;

constexpr std::size_t kExhaustiveCaseLimit = 1'000'000;

bool has_normalizer(const BiformTheory& t) {
  for (const auto& tr : t.transformers.all()) {
    if (const auto* op = std::get_if<transformers::OpaqueBody>(&tr.body); op && op->host_id == "normalize_poly") {
      return true;
    }
  }
  return false;
}

std::optional<kernel::Formula> normalized(const BiformTheory& t, const kernel::Formula& f) {
  try {
    kernel::Sort sort = transformers::ring_sort(t.signature);
    return kernel::map_terms(f, [&](const kernel::Term& x) { return transformers::normalize_poly(x, sort); });
  } catch (const Error&) {
    return std::nullopt;
  }
}

Obligation axiom_obligation(const BiformTheory& tgt, const NamedFormula& ax, const kernel::Formula& tf,
                            const CheckOptions& opts) {
  Obligation ob;
  ob.kind = "axiom";
  ob.origin = ax.name;
  ob.translated = kernel::to_string(tf);
  try {
    kernel::check_formula(tgt.signature, tf);
  } catch (const Error& e) {
    ob.status = ObligationStatus::Failed;
    CheckReport r;
    r.status = Status::Fail;
    r.note = std::string("translation is ill-formed in target: ") + e.what();
    ob.report = r;
    return ob;
  }
  for (const auto& t : tgt.axioms) {
    if (kernel::alpha_equivalent(t.formula, tf)) {
      ob.status = ObligationStatus::MatchedAxiom;
      ob.discharged_by = t.name;
      return ob;
    }
  }
  if (has_normalizer(tgt)) {
    if (auto nf = normalized(tgt, tf)) {
      for (const auto& t : tgt.axioms) {
        auto nt = normalized(tgt, t.formula);
        if (nt && kernel::alpha_equivalent(*nt, *nf)) {
          ob.status = ObligationStatus::MatchedAxiom;
          ob.discharged_by = t.name + " (after normalize_poly)";
          return ob;
        }
      }
    }
  }
  auto models = evidence_models(tgt, opts.zp);
  std::size_t cases = 0;
  std::string names;
  std::optional<CheckReport> first;
  for (const auto& m : models) {
    CheckReport r = check_in_model(m, tf, opts.evidence);
    if (r.status == Status::Fail) {
      ob.status = ObligationStatus::Failed;
      ob.discharged_by = m.name();
      ob.report = r;
      return ob;
    }
    if (r.status != Status::Pass) continue;
    cases += r.cases;
    names += (names.empty() ? "" : ", ") + m.name();
    if (!first) first = r;
  }
  if (!first) {
    ob.status = ObligationStatus::Open;
    CheckReport r;
    r.strategy = opts.evidence;
    r.note = models.empty() ? "no designated model" : "no model gave evidence";
    ob.report = r;
    return ob;
  }
  ob.status = ObligationStatus::ModelEvidence;
  ob.discharged_by = names;
  first->cases = cases;
  ob.report = first;
  return ob;
}

Obligation meaning_obligation(const TheoryGraph& g, const Morphism& m, const BiformTheory& tgt,
                              const meaning::MeaningFormula& mf, const CheckOptions& opts) {
  Obligation ob;
  ob.kind = "meaning";
  ob.origin = mf.name;
  meaning::MeaningFormula tmf;
  try {
    tmf = meaning::translate_meaning(m.renaming, m.transformer_map, mf);
  } catch (const Error& e) {
    ob.status = ObligationStatus::Open;
    CheckReport r;
    r.note = e.what();
    ob.report = r;
    return ob;
  }
  ob.translated = meaning::to_string(tmf);
  for (const auto& t : tgt.meanings) {
    if (t == tmf) {
      ob.status = ObligationStatus::MatchedAxiom;
      ob.discharged_by = t.name;
      return ob;
    }
  }
  for (const auto& name : meaning::called_transformers(tmf)) {
    if (tgt.transformers.find(name) == nullptr) {
      ob.status = ObligationStatus::Failed;
      CheckReport r;
      r.status = Status::Fail;
      r.note = "target has no transformer " + name;
      ob.report = r;
      return ob;
    }
  }
  try {
    auto vr = meaning::verify_meaning(g.context(tgt), tmf, opts.evidence);
    ob.report = vr.report;
    switch (vr.report.status) {
      case Status::Pass: ob.status = ObligationStatus::ModelEvidence; break;
      case Status::Fail: ob.status = ObligationStatus::Failed; break;
      case Status::Indeterminate: ob.status = ObligationStatus::Open; break;
    }
    ob.discharged_by = tgt.name;
  } catch (const Error& e) {
    ob.status = ObligationStatus::Open;
    CheckReport r;
    r.note = e.what();
    ob.report = r;
  }
  return ob;
}

bool compatible(const Morphism& m, const BiformTheory& src, const semantics::Model& ms, const semantics::Model& mt) {
  for (const auto& s : src.signature.sorts()) {
    const auto* a = ms.carrier(s);
    const auto* b = mt.carrier(m.renaming.sort(s));
    if (a == nullptr || b == nullptr || !(*a == *b)) return false;
  }
  return true;
}

std::vector<kernel::Term> preservation_terms(const BiformTheory& src, const kernel::Sort& sort,
                                             const semantics::CheckStrategy& s) {
  if (const auto* ex = std::get_if<semantics::ExhaustiveTerms>(&s)) {
    return kernel::enumerate_terms(src.signature, sort, ex->max_depth, ex->pool);
  }
  if (const auto* rs = std::get_if<semantics::RandomSamples>(&s)) {
    std::vector<kernel::Term> out;
    Rng rng(rs->seed);
    for (std::size_t i = 0; i < rs->samples; ++i) {
      auto t = kernel::random_closed_term(src.signature, sort, rng, {rs->max_depth, -9, 9, 35});
      if (!t) break;
      out.push_back(*t);
    }
    return out;
  }
  return kernel::enumerate_terms(src.signature, sort, 2, {0, 1, 2});
}

Obligation preservation_obligation(const Morphism& m, const BiformTheory& src, const semantics::Model& ms,
                                   const semantics::Model& mt, const CheckOptions& opts) {
  Obligation ob;
  ob.kind = "preservation";
  ob.origin = ms.name() + " -> " + mt.name();
  ob.translated = "den_" + ms.name() + "(t) = den_" + mt.name() + "(" + m.name + "(t))";
  ob.discharged_by = mt.name();
  CheckReport r;
  r.strategy = opts.preservation;
  std::size_t index = 0;
  for (const auto& sort : src.signature.sorts()) {
    for (const auto& t : preservation_terms(src, sort, opts.preservation)) {
      kernel::Term image = translate(m, t);
      semantics::Value a = semantics::denote(ms, t);
      semantics::Value b = semantics::denote(mt, image);
      if (!(a == b)) {
        r.status = Status::Fail;
        r.cases = index + 1;
        semantics::Counterexample cex;
        cex.case_index = index;
        cex.terms = {{"t", t}, {"image", image}};
        cex.assignment = {{"source", a}, {"target", b}};
        cex.note = kernel::to_string(t) + " denotes " + semantics::to_string(a) + " in " + ms.name() + " but " +
                   kernel::to_string(image) + " denotes " + semantics::to_string(b) + " in " + mt.name();
        r.counterexample = std::move(cex);
        ob.status = ObligationStatus::Failed;
        ob.report = std::move(r);
        return ob;
      }
      ++index;
    }
  }
  r.status = index == 0 ? Status::Indeterminate : Status::Pass;
  r.cases = index;
  ob.status = index == 0 ? ObligationStatus::Open : ObligationStatus::ModelEvidence;
  ob.report = std::move(r);
  return ob;
}

}  // namespace

std::string_view to_string(ObligationStatus s) noexcept {
  switch (s) {
    case ObligationStatus::MatchedAxiom: return "matched-axiom";
    case ObligationStatus::ModelEvidence: return "model-evidence";
    case ObligationStatus::Failed: return "failed";
    case ObligationStatus::Open: return "open";
  }
  return "open";
}

bool MorphismCheck::ok() const noexcept {
  for (const auto& o : obligations) {
    if (o.status == ObligationStatus::Failed) return false;
  }
  return true;
}

std::vector<semantics::Model> evidence_models(const BiformTheory& t, const std::optional<Integer>& zp) {
  std::vector<semantics::Model> out = t.models;
  if (!zp) return out;
  for (const auto& m : t.models) {
    std::map<kernel::Sort, semantics::Domain> carriers;
    bool integral = true;
    for (const auto& [sort, d] : m.carriers()) {
      if (sort == kernel::kSyn) continue;
      if (!std::holds_alternative<semantics::IntDomain>(d)) integral = false;
      carriers.emplace(sort, semantics::ZpDomain{*zp});
    }
    if (!integral) continue;
    try {
      out.emplace_back(m.name() + "@zp" + btg::to_string(*zp), t.name, t.signature, std::move(carriers), m.interp_names());
    } catch (const Error&) {
      // The model uses a primitive without a modular counterpart.
    }
  }
  return out;
}

CheckReport check_in_model(const semantics::Model& m, const kernel::Formula& f,
                           const semantics::CheckStrategy& fallback) {
  std::size_t cases = 1;
  bool finite = true;
  for (const auto& b : f.binders) {
    const auto* d = m.carrier(b.sort);
    const auto* zp = d ? std::get_if<semantics::ZpDomain>(d) : nullptr;
    if (zp == nullptr || zp->p > kExhaustiveCaseLimit) {
      finite = false;
      break;
    }
    cases *= static_cast<std::size_t>(zp->p);
    if (cases > kExhaustiveCaseLimit) {
      finite = false;
      break;
    }
  }
  if (finite) return semantics::check_formula(m, f, semantics::ExhaustiveDomain{});
  return semantics::check_formula(m, f, fallback);
}

MorphismCheck check_morphism(const TheoryGraph& g, const Morphism& m, const CheckOptions& opts) {
  const BiformTheory& src = g.theory(m.source);
  const BiformTheory& tgt = g.theory(m.target);
  check_signature(m, src, tgt);
  MorphismCheck out;
  out.morphism = m.name;
  for (const auto& ax : src.axioms) out.obligations.push_back(axiom_obligation(tgt, ax, translate(m, ax.formula), opts));
  for (const auto& mf : src.meanings) out.obligations.push_back(meaning_obligation(g, m, tgt, mf, opts));
  if (m.model_preserving) {
    std::vector<std::pair<const semantics::Model*, const semantics::Model*>> pairs;
    for (const auto& ms : src.models) {
      const semantics::Model* pick = nullptr;
      for (const auto& mt : tgt.models) {
        if (!compatible(m, src, ms, mt)) continue;
        if (pick == nullptr || mt.name() == ms.name()) pick = &mt;
        if (mt.name() == ms.name()) break;
      }
      if (pick != nullptr) pairs.emplace_back(&ms, pick);
    }
    if (pairs.empty()) {
      raise(Errc::IncompatibleModels, "morphism " + m.name + ": no pair of compatible designated models in " +
                                          src.name + " and " + tgt.name);
    }
    for (const auto& [ms, mt] : pairs) out.obligations.push_back(preservation_obligation(m, src, *ms, *mt, opts));
  }
  return out;
}

MorphismCheck check_morphism(const TheoryGraph& g, const Morphism& m, const semantics::CheckStrategy& strategy) {
  CheckOptions opts;
  opts.evidence = strategy;
  opts.preservation = strategy;
  return check_morphism(g, m, opts);
}

std::vector<meaning::VerificationReport> verify_all(const TheoryGraph& g, const BiformTheory& t,
                                                    const CheckOptions& opts) {
  std::vector<meaning::VerificationReport> out;
  auto models = evidence_models(t, opts.zp);
  for (const auto& ax : t.axioms) {
    if (models.empty()) {
      meaning::VerificationReport r;
      r.theory = t.name;
      r.kind = "axiom";
      r.formula = ax.name;
      r.report.strategy = opts.evidence;
      r.report.note = "no designated model";
      out.push_back(std::move(r));
      continue;
    }
    for (const auto& m : models) {
      meaning::VerificationReport r;
      r.theory = t.name;
      r.kind = "axiom";
      r.formula = ax.name;
      r.model = m.name();
      r.report = check_in_model(m, ax.formula, opts.evidence);
      out.push_back(std::move(r));
    }
  }
  auto ctx = g.context(t);
  for (const auto& mf : t.meanings) {
    try {
      out.push_back(meaning::verify_meaning(ctx, mf, opts.evidence));
    } catch (const Error& e) {
      meaning::VerificationReport r;
      r.theory = t.name;
      r.formula = mf.name;
      r.transformer = mf.transformer;
      r.report.strategy = opts.evidence;
      r.report.note = e.what();
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<meaning::VerificationReport> verify_all(const TheoryGraph& g, const BiformTheory& t,
                                                    const semantics::CheckStrategy& strategy) {
  CheckOptions opts;
  opts.evidence = strategy;
  return verify_all(g, t, opts);
}

}  // namespace btg::graph
