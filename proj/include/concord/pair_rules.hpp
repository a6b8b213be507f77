// Pair admissibility and ordering rules behind every concordance definition.

#pragma once

#include "concord/types.hpp"

namespace concord {

// Group membership for a frequency contrast. A is the low-count group whose
// predictions should sit below group B's.
constexpr bool in_group_a(FrequencyContrast contrast, std::uint32_t claim_count) {
    switch (contrast) {
        case FrequencyContrast::ZeroVsOnePlus:
        case FrequencyContrast::ZeroVsTwoPlus:
            return claim_count == 0;
        case FrequencyContrast::OneVsTwoPlus:
            return claim_count == 1;
    }
    return false;
}

constexpr bool in_group_b(FrequencyContrast contrast, std::uint32_t claim_count) {
    switch (contrast) {
        case FrequencyContrast::ZeroVsOnePlus:
            return claim_count >= 1;
        case FrequencyContrast::ZeroVsTwoPlus:
        case FrequencyContrast::OneVsTwoPlus:
            return claim_count >= 2;
    }
    return false;
}

// Evaluates (a, b) with a as the group-A candidate and b as the group-B
// candidate. The pair is comparable only when both memberships hold and the
// exposures differ by at most exposure_tol; it is then concordant when b's
// prediction exceeds a's. Prediction ties are classified separately, by
// exact floating equality.
PairClass classify_frequency_pair(const FrequencyRecord& a, const FrequencyRecord& b,
                                  FrequencyContrast contrast, double exposure_tol);

// Evaluates (a, b) with a as the smaller-claim candidate. Comparable only
// when a.claim_size < b.claim_size and the gap is at least min_gap.
PairClass classify_severity_pair(const SeverityRecord& a, const SeverityRecord& b, double min_gap);

// Prediction ordering shared by both rules once a pair is admissible.
constexpr PairClass order_predictions(double prediction_a, double prediction_b) {
    if (prediction_b > prediction_a) return PairClass::Concordant;
    if (prediction_b < prediction_a) return PairClass::Discordant;
    return PairClass::TiedPrediction;
}

}  // namespace concord
