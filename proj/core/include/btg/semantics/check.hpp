#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "btg/integer.hpp"
#include "btg/kernel/formula.hpp"
#include "btg/rng.hpp"
#include "btg/semantics/model.hpp"
#include "btg/semantics/value.hpp"

namespace btg::semantics {

/// Every tuple of carrier elements; finite carriers only.
struct ExhaustiveDomain {
  friend bool operator==(const ExhaustiveDomain&, const ExhaustiveDomain&) = default;
};

/// Every tuple of closed terms up to a depth, literals from a fixed pool.
struct ExhaustiveTerms {
  std::size_t max_depth = 2;
  std::vector<Integer> pool{0, 1, 2};
  friend bool operator==(const ExhaustiveTerms&, const ExhaustiveTerms&) = default;
};

/// Seeded sampling. Integers are drawn uniformly from [-2^16, 2^16]; terms
/// (for syntactic classes) are generated up to `max_depth`.
struct RandomSamples {
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  std::size_t max_depth = 4;
  friend bool operator==(const RandomSamples&, const RandomSamples&) = default;
};

using CheckStrategy = std::variant<ExhaustiveDomain, ExhaustiveTerms, RandomSamples>;

std::string to_string(const CheckStrategy& s);

enum class Status { Pass, Fail, Indeterminate };

std::string_view to_string(Status s) noexcept;

struct Counterexample {
  std::size_t case_index = 0;
  std::vector<std::pair<std::string, Value>> assignment;
  /// Syntactic witnesses, when cases range over terms.
  std::vector<std::pair<std::string, kernel::Term>> terms;
  std::string note;
};

struct CheckReport {
  Status status = Status::Indeterminate;
  std::size_t cases = 0;
  std::optional<Counterexample> counterexample;
  CheckStrategy strategy;
  std::string note;
};

inline constexpr std::int64_t kRandomIntBound = std::int64_t{1} << 16;

Value random_value(const Domain& d, Rng& rng);

/// Runs the formula on the instantiations the strategy prescribes, in a fixed
/// case order; the first failing case is the counterexample.
/// Throws InfiniteCarrier for ExhaustiveDomain over an infinite carrier.
CheckReport check_formula(const Model& m, const kernel::Formula& f, const CheckStrategy& strategy);

/// True when the counterexample still falsifies the formula on its own.
bool refails(const Model& m, const kernel::Formula& f, const Counterexample& cex);

}  // namespace btg::semantics
