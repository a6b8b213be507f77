#include "concord/severity.hpp"

#include <algorithm>
#include <cmath>

#include "concord/math.hpp"
#include "concord/rng.hpp"

namespace concord {

std::vector<double> default_severity_grid(std::span<const SeverityRecord> records,
                                          std::uint64_t seed) {
    std::vector<double> grid{0.0};
    if (records.size() < 2) return grid;

    constexpr std::size_t kPairSample = 10000;
    Rng rng(derive_seed(seed, 0x76677269ULL));
    std::vector<double> gaps;
    gaps.reserve(kPairSample);
    for (std::size_t s = 0; s < kPairSample; ++s) {
        const std::size_t i = rng.uniform_u64(records.size());
        std::size_t j = rng.uniform_u64(records.size() - 1);
        if (j >= i) ++j;
        gaps.push_back(std::abs(records[i].claim_size - records[j].claim_size));
    }
    std::sort(gaps.begin(), gaps.end());
    for (int decile = 1; decile <= 9; ++decile) {
        const double q = gaps[gaps.size() * static_cast<std::size_t>(decile) / 10];
        if (q > grid.back()) grid.push_back(q);
    }
    return grid;
}

ConcordanceEstimate severity_concordance(std::span<const SeverityRecord> records, double v,
                                         const Engine& engine) {
    return estimate_concordance(records, SeveritySpec{v}, engine);
}

std::vector<CurvePoint> severity_curve(std::span<const SeverityRecord> records,
                                       const SeverityCurveConfig& config) {
    for (std::size_t i = 1; i < config.v_grid.size(); ++i)
        if (!(config.v_grid[i] > config.v_grid[i - 1]))
            throw Error("v grid must be strictly ascending");
    if (!config.v_grid.empty() && config.v_grid.front() < 0.0)
        throw Error("v thresholds must be non-negative");

    std::vector<CurvePoint> curve;
    curve.reserve(config.v_grid.size());
    for (std::size_t g = 0; g < config.v_grid.size(); ++g) {
        const double v = config.v_grid[g];
        CurvePoint point;
        point.x = v;
        try {
            ConcordanceEstimate est = estimate_concordance(records, SeveritySpec{v},
                                                           with_derived_seed(config.engine, g));
            point.comparable_pairs = est.comparable_count();
            point.status = CurvePointStatus::Ok;
            point.estimate = std::move(est);
        } catch (const NoComparablePairs&) {
            point.status = CurvePointStatus::NoComparablePairs;
        }
        curve.push_back(std::move(point));
    }
    return curve;
}

}  // namespace concord
