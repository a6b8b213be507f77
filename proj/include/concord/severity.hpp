// Severity concordance C(v): pairs of claims whose observed sizes differ by
// at least v, and the (v, C(v)) curve over a threshold grid.

#pragma once

#include <span>
#include <vector>

#include "concord/engine.hpp"
#include "concord/types.hpp"

namespace concord {

struct SeverityCurveConfig {
    std::vector<double> v_grid;  // ascending, non-negative
    Engine engine = ExactEngine{};
};

// Default grid: 0 plus the 10%..90% deciles of claim-size gaps observed on
// a 10,000-pair random sample, so the grid adapts to the currency scale.
std::vector<double> default_severity_grid(std::span<const SeverityRecord> records,
                                          std::uint64_t seed);

ConcordanceEstimate severity_concordance(std::span<const SeverityRecord> records, double v,
                                         const Engine& engine);

// One point per grid v; sampled points carry their pointwise CI. Grid points
// with no admissible pairs carry the NoComparablePairs marker. Engine seeds
// are derived per grid point.
std::vector<CurvePoint> severity_curve(std::span<const SeverityRecord> records,
                                       const SeverityCurveConfig& config);

}  // namespace concord
