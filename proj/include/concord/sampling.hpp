// Sampling estimator: draw S observations without replacement, count each
// one's concordant/comparable pairs against the not-yet-removed remainder,
// and form the ratio of the per-draw sums. An analytic confidence interval
// comes from the concordant/discordant co-occurrence probabilities.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "concord/types.hpp"

namespace concord {

struct SamplingConfig {
    std::uint64_t sample_size = 20000;  // S; clamped to n when larger
    std::uint64_t seed = 0;
    double alpha = 0.05;  // CI level
};

// Per-draw concordant/comparable pair counts, in draw order. Draws whose
// comparable count is zero stay in the tally with zero entries.
struct SampleTally {
    struct Entry {
        std::uint64_t concordant = 0;
        std::uint64_t comparable = 0;
    };
    std::vector<Entry> per_observation;
    std::uint64_t total_concordant = 0;
    std::uint64_t total_comparable = 0;  // n*_{t,S}
    std::uint64_t total_tied = 0;
    std::uint64_t population_size = 0;
    bool sample_size_clamped = false;
};

// The probability components feeding the variance estimate. Under the
// tie-exclusion convention pi_c + pi_d == 1.
struct VarianceComponents {
    double pi_c = 0.0;
    double pi_d = 0.0;
    double pi_cc = 0.0;
    double pi_dd = 0.0;
    double pi_cd = 0.0;

    double variance() const {
        const double s = pi_c + pi_d;
        return 4.0 * (pi_d * pi_d * pi_cc - 2.0 * pi_c * pi_d * pi_cd + pi_c * pi_c * pi_dd) /
               (s * s);
    }
};

SampleTally sample_tally(std::span<const FrequencyRecord> records, const FrequencySpec& spec,
                         const SamplingConfig& config);
SampleTally sample_tally(std::span<const SeverityRecord> records, const SeveritySpec& spec,
                         const SamplingConfig& config);

// Point estimate from a tally: sum(concordant_i) / sum(comparable_i).
// Throws NoComparablePairs when the denominator is zero.
ConcordanceEstimate estimate_from_tally(const SampleTally& tally);

// Component estimators; draws with zero comparable pairs contribute nothing.
VarianceComponents variance_components(const SampleTally& tally);

// C-hat +/- z_{alpha/2} * sqrt(var / S), clamped to [0, 1]. S is the number
// of tally entries. Throws DegenerateVariance with fewer than two
// contributing draws, NoComparablePairs when the tally is empty of pairs.
ConfidenceInterval confidence_interval(const SampleTally& tally, double alpha);

// Convenience: tally + estimate + CI in one call. The CI is omitted (with a
// meta note) when the tally is degenerate.
ConcordanceEstimate sampled_concordance(std::span<const FrequencyRecord> records,
                                        const FrequencySpec& spec, const SamplingConfig& config);
ConcordanceEstimate sampled_concordance(std::span<const SeverityRecord> records,
                                        const SeveritySpec& spec, const SamplingConfig& config);

}  // namespace concord
