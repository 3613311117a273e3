#pragma once

#include <cstdint>
#include <optional>

#include "btg/kernel/signature.hpp"
#include "btg/kernel/term.hpp"
#include "btg/rng.hpp"

namespace btg::kernel {

struct RandomTermOptions {
  std::size_t max_depth = 4;
  std::int64_t literal_min = -9;
  std::int64_t literal_max = 9;
  /// Probability (percent) of stopping at a leaf when an application is possible.
  std::uint32_t leaf_percent = 35;
};

/// Random closed well-sorted term of `sort`; nullopt when the sort has no
/// closed term within the depth bound.
std::optional<Term> random_closed_term(const Signature& sig, const Sort& sort, Rng& rng,
                                       const RandomTermOptions& opts = {});

}  // namespace btg::kernel
