#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "btg/kernel/signature.hpp"
#include "btg/meaning/meaning_formula.hpp"
#include "btg/semantics/check.hpp"
#include "btg/semantics/model.hpp"
#include "btg/transformers/transformer.hpp"

namespace btg::meaning {

/// What a verification run needs from the owning theory.
struct VerifyContext {
  std::string theory;
  const kernel::Signature* signature = nullptr;
  const transformers::Registry* transformers = nullptr;
  /// nullptr when the reference does not name a designated model.
  std::function<const semantics::Model*(const ModelRef&)> resolve;
};

struct VerificationReport {
  std::string theory;
  /// "meaning" or "axiom".
  std::string kind = "meaning";
  std::string formula;
  /// Model an axiom was checked in; empty for meaning formulas.
  std::string model;
  std::string transformer;
  /// "opaque", "rules" or "generic"; opaque transformers are trusted host code.
  std::string provenance;
  std::vector<std::pair<std::string, std::string>> classes;
  semantics::CheckReport report;
};

/// Outcome of the claim on one assignment of syntax variables.
struct CaseOutcome {
  bool holds = false;
  std::string note;
};

CaseOutcome evaluate_case(const VerifyContext& ctx, const MeaningFormula& mf,
                          const std::vector<std::pair<std::string, Term>>& assignment);

/// Generates members of the variable classes as the strategy prescribes,
/// evaluates the claim on each and stops at the first failure. Random
/// failures are shrunk greedily to a smaller failing assignment. Cases whose
/// transformer or denotation raises count as failures. Unresolvable model
/// references give an Indeterminate report. Throws GeneratorEmpty.
VerificationReport verify_meaning(const VerifyContext& ctx, const MeaningFormula& mf,
                                  const semantics::CheckStrategy& strategy);

/// True when the recorded counterexample still falsifies the formula.
bool replays(const VerifyContext& ctx, const MeaningFormula& mf, const semantics::Counterexample& cex);

}  // namespace btg::meaning
