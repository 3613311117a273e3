#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "btg/graph/obligations.hpp"
#include "btg/graph/theory_graph.hpp"
#include "btg/meaning/verify.hpp"

namespace btg::text {

inline constexpr std::string_view kReportSchema = "btg-report/1";

struct VerifyOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 42;
  /// Depth of random terms and of the exhaustive preservation enumeration.
  std::size_t depth = 2;
  std::optional<Integer> zp;
  /// Restricts verification to these theories; empty means all.
  std::vector<std::string> theories;
  /// Adds wall-clock milliseconds per check to the report.
  bool timings = false;
};

graph::CheckOptions check_options(const VerifyOptions& o);

struct TheoryResult {
  std::string theory;
  std::vector<meaning::VerificationReport> entries;
  double millis = 0;
};

struct MorphismResult {
  graph::Morphism morphism;
  graph::MorphismCheck check;
  double millis = 0;
};

struct VerifyRun {
  std::vector<TheoryResult> theories;
  std::vector<MorphismResult> morphisms;
};

/// Checks every morphism of the graph.
std::vector<MorphismResult> run_checks(const graph::TheoryGraph& g, const VerifyOptions& o);
/// Morphism checks plus verification of the selected theories.
VerifyRun run_verify(const graph::TheoryGraph& g, const VerifyOptions& o);

bool has_failure(const VerifyRun& run);

/// "ok" when every obligation matched an axiom, "failed" when one failed,
/// "evidence" otherwise.
std::string_view morphism_status(const graph::MorphismCheck& c);

/// JSON report with a fixed field order, newline-terminated.
std::string report_json(const VerifyRun& run, const VerifyOptions& o, std::string_view command);

std::string export_dot(const graph::TheoryGraph& g, const std::vector<MorphismResult>& checks);

/// `(pair unit ((p m)...))` for factorization terms, plain syntax otherwise.
std::string display_term(const kernel::Term& t);

}  // namespace btg::text
