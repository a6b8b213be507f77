// Exposure-matched frequency concordances: the global estimate per contrast
// and the local (lambda, C(lambda)) curve over the exposure axis.

#pragma once

#include <span>
#include <vector>

#include "concord/engine.hpp"
#include "concord/types.hpp"

namespace concord {

struct LocalCurveConfig {
    std::vector<double> lambda_grid;  // strictly ascending, in (0, 1]
    double window = 0.05;             // half-width of the exposure window per grid point
    std::uint64_t min_pairs = 100;    // below this the point is marked insufficient-pairs
};

// Twenty equally spaced grid points 0.05, 0.10, ..., 1.00.
std::vector<double> default_lambda_grid();

// Global exposure-matched concordance for the contrast, via the chosen engine.
ConcordanceEstimate global_frequency_concordance(std::span<const FrequencyRecord> records,
                                                 FrequencyContrast contrast, double exposure_tol,
                                                 const Engine& engine);

// Local concordance per grid point: both pair members must have exposure in
// [lambda - window, lambda + window]; no further exposure constraint applies
// inside the window. Points with fewer comparable pairs than min_pairs carry
// the InsufficientPairs marker instead of an estimate. Engine seeds are
// derived per grid point.
std::vector<CurvePoint> local_frequency_curve(std::span<const FrequencyRecord> records,
                                              FrequencyContrast contrast,
                                              const LocalCurveConfig& config,
                                              const Engine& engine);

}  // namespace concord
