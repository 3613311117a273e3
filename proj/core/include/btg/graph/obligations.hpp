#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "btg/graph/theory_graph.hpp"
#include "btg/meaning/verify.hpp"
#include "btg/semantics/check.hpp"

namespace btg::graph {

/// How an obligation was discharged. `Open` means no evidence either way,
/// e.g. the target has no designated model.
enum class ObligationStatus { MatchedAxiom, ModelEvidence, Failed, Open };

std::string_view to_string(ObligationStatus s) noexcept;

struct Obligation {
  /// "axiom", "meaning" or "preservation".
  std::string kind;
  /// Name of the source axiom or meaning formula, or the model pair.
  std::string origin;
  /// Translated statement in target syntax.
  std::string translated;
  ObligationStatus status = ObligationStatus::Open;
  /// Matching target axiom, or the models the evidence comes from.
  std::string discharged_by;
  std::optional<semantics::CheckReport> report;
};

struct MorphismCheck {
  std::string morphism;
  std::vector<Obligation> obligations;

  bool ok() const noexcept;
};

struct CheckOptions {
  /// Instantiation strategy for axioms and meaning formulas.
  semantics::CheckStrategy evidence = semantics::RandomSamples{200, 42, 3};
  /// Closed terms compared for model preservation.
  semantics::CheckStrategy preservation = semantics::ExhaustiveTerms{2, {0, 1, 2}};
  /// When set, integer models are also checked as Z_p copies.
  std::optional<Integer> zp;
};

/// Designated models of `t`, followed by Z_p copies of its integer models
/// when `zp` is set (copies the primitives do not support are skipped).
std::vector<semantics::Model> evidence_models(const BiformTheory& t, const std::optional<Integer>& zp);

/// Exhaustive over finite carriers when small enough, otherwise `fallback`.
semantics::CheckReport check_in_model(const semantics::Model& m, const kernel::Formula& f,
                                      const semantics::CheckStrategy& fallback);

/// One obligation per source axiom and meaning formula, discharged by a
/// matching target axiom (directly or after polynomial normalization when the
/// target has normalize_poly) or else by evidence in the target models. A
/// model-preserving morphism adds one preservation obligation per compatible
/// model pair. Throws IncompatibleModels.
MorphismCheck check_morphism(const TheoryGraph& g, const Morphism& m, const CheckOptions& opts);
MorphismCheck check_morphism(const TheoryGraph& g, const Morphism& m, const semantics::CheckStrategy& strategy);

/// Every axiom in every evidence model, then every meaning formula. A theory
/// without models yields Indeterminate entries.
std::vector<meaning::VerificationReport> verify_all(const TheoryGraph& g, const BiformTheory& t,
                                                    const CheckOptions& opts);
std::vector<meaning::VerificationReport> verify_all(const TheoryGraph& g, const BiformTheory& t,
                                                    const semantics::CheckStrategy& strategy);

}  // namespace btg::graph
