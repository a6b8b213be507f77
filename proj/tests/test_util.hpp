// Shared test helpers: an independent brute-force oracle and random dataset
// generators. The oracle deliberately re-derives group membership and pair
// rules from scratch instead of calling the library's classifiers.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "concord/rng.hpp"
#include "concord/types.hpp"

namespace testutil {

struct OracleCounts {
    std::uint64_t concordant = 0;
    std::uint64_t discordant = 0;
    std::uint64_t tied = 0;

    std::uint64_t comparable() const { return concordant + discordant; }
    double value() const {
        return static_cast<double>(concordant) / static_cast<double>(comparable());
    }
};

// Exhaustive enumeration over all ordered (a in A, b in B) pairs.
inline OracleCounts oracle_frequency(const std::vector<concord::FrequencyRecord>& records,
                                     concord::FrequencyContrast contrast, double tol) {
    OracleCounts counts;
    for (const auto& a : records) {
        bool a_in_a = false;
        switch (contrast) {
            case concord::FrequencyContrast::ZeroVsOnePlus:
            case concord::FrequencyContrast::ZeroVsTwoPlus:
                a_in_a = a.claim_count == 0;
                break;
            case concord::FrequencyContrast::OneVsTwoPlus:
                a_in_a = a.claim_count == 1;
                break;
        }
        if (!a_in_a) continue;
        for (const auto& b : records) {
            bool b_in_b = false;
            switch (contrast) {
                case concord::FrequencyContrast::ZeroVsOnePlus:
                    b_in_b = b.claim_count >= 1;
                    break;
                case concord::FrequencyContrast::ZeroVsTwoPlus:
                case concord::FrequencyContrast::OneVsTwoPlus:
                    b_in_b = b.claim_count >= 2;
                    break;
            }
            if (!b_in_b) continue;
            if (std::abs(a.exposure - b.exposure) > tol) continue;
            if (b.prediction > a.prediction)
                ++counts.concordant;
            else if (b.prediction < a.prediction)
                ++counts.discordant;
            else
                ++counts.tied;
        }
    }
    return counts;
}

// Exhaustive enumeration over all unordered claim pairs, oriented smaller-first.
inline OracleCounts oracle_severity(const std::vector<concord::SeverityRecord>& records,
                                    double v) {
    OracleCounts counts;
    for (std::size_t i = 0; i < records.size(); ++i) {
        for (std::size_t j = 0; j < records.size(); ++j) {
            if (i == j) continue;
            const auto& a = records[i];
            const auto& b = records[j];
            if (!(a.claim_size < b.claim_size)) continue;  // also skips equal sizes
            if (b.claim_size - a.claim_size < v) continue;
            if (b.prediction > a.prediction)
                ++counts.concordant;
            else if (b.prediction < a.prediction)
                ++counts.discordant;
            else
                ++counts.tied;
        }
    }
    return counts;
}

// Small random frequency portfolio. Claim counts are drawn so that every
// contrast usually has both groups populated; predictions are continuous so
// ties do not occur unless forced.
inline std::vector<concord::FrequencyRecord> random_frequency(std::size_t n, std::uint64_t seed,
                                                              bool uniform_exposure = false) {
    concord::Rng rng(seed);
    std::vector<concord::FrequencyRecord> records;
    records.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        concord::FrequencyRecord r;
        const double u = rng.uniform_double();
        r.claim_count = u < 0.70 ? 0 : (u < 0.90 ? 1 : (u < 0.97 ? 2 : 3));
        r.exposure = uniform_exposure ? 1.0 : rng.uniform_double(0.05, 1.0);
        r.prediction = std::exp(0.7 * rng.normal() + 0.15 * static_cast<double>(r.claim_count)) * 0.2;
        records.push_back(r);
    }
    return records;
}

inline std::vector<concord::SeverityRecord> random_severity(std::size_t n, std::uint64_t seed) {
    concord::Rng rng(seed);
    std::vector<concord::SeverityRecord> records;
    records.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        concord::SeverityRecord r;
        const double mean = std::exp(7.0 + 0.5 * rng.normal());
        r.prediction = mean;
        r.claim_size = rng.gamma(1.5, mean / 1.5);
        records.push_back(r);
    }
    return records;
}

}  // namespace testutil
