// Brute-force pair enumeration. Quadratic, but exact: this is the oracle the
// sampling and clustering approximations are checked against.

#pragma once

#include <span>

#include "concord/types.hpp"

namespace concord {

// Enumerates every cross-group pair admitted by the spec and returns
// concordant / comparable as the estimate. Prediction-tied pairs are tallied
// separately and excluded from the denominator. Throws NoComparablePairs
// when nothing is admissible (empty group, exposure-rejected, or all tied).
ConcordanceEstimate exact_concordance(std::span<const FrequencyRecord> records,
                                      const FrequencySpec& spec);

// Same over all strictly size-ordered claim pairs with gap >= spec.min_gap.
ConcordanceEstimate exact_concordance(std::span<const SeverityRecord> records,
                                      const SeveritySpec& spec);

// Raw tallies without the estimate envelope (used by curves and tests).
PairCounts exact_pair_counts(std::span<const FrequencyRecord> records, const FrequencySpec& spec);
PairCounts exact_pair_counts(std::span<const SeverityRecord> records, const SeveritySpec& spec);

}  // namespace concord
