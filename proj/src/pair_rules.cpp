#include "concord/pair_rules.hpp"

#include <cmath>

namespace concord {

std::string to_string(FrequencyContrast contrast) {
    switch (contrast) {
        case FrequencyContrast::ZeroVsOnePlus:
            return "01+";
        case FrequencyContrast::ZeroVsTwoPlus:
            return "02+";
        case FrequencyContrast::OneVsTwoPlus:
            return "12+";
    }
    return "?";
}

std::optional<FrequencyContrast> parse_contrast(const std::string& text) {
    if (text == "01+") return FrequencyContrast::ZeroVsOnePlus;
    if (text == "02+") return FrequencyContrast::ZeroVsTwoPlus;
    if (text == "12+") return FrequencyContrast::OneVsTwoPlus;
    return std::nullopt;
}

std::string to_string(Method method) {
    switch (method) {
        case Method::Exact:
            return "exact";
        case Method::Sampled:
            return "sampled";
        case Method::Clustered:
            return "clustered";
    }
    return "?";
}

PairClass classify_frequency_pair(const FrequencyRecord& a, const FrequencyRecord& b,
                                  FrequencyContrast contrast, double exposure_tol) {
    if (!in_group_a(contrast, a.claim_count) || !in_group_b(contrast, b.claim_count))
        return PairClass::NotComparable;
    if (std::abs(a.exposure - b.exposure) > exposure_tol) return PairClass::NotComparable;
    return order_predictions(a.prediction, b.prediction);
}

PairClass classify_severity_pair(const SeverityRecord& a, const SeverityRecord& b, double min_gap) {
    if (!(a.claim_size < b.claim_size)) return PairClass::NotComparable;
    if (b.claim_size - a.claim_size < min_gap) return PairClass::NotComparable;
    return order_predictions(a.prediction, b.prediction);
}

}  // namespace concord
