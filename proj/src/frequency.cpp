#include "concord/frequency.hpp"

#include <cmath>
#include <limits>

#include "concord/math.hpp"

namespace concord {

std::vector<double> default_lambda_grid() {
    std::vector<double> grid;
    grid.reserve(20);
    for (int i = 1; i <= 20; ++i) grid.push_back(static_cast<double>(i) / 20.0);
    return grid;
}

ConcordanceEstimate global_frequency_concordance(std::span<const FrequencyRecord> records,
                                                 FrequencyContrast contrast, double exposure_tol,
                                                 const Engine& engine) {
    return estimate_concordance(records, FrequencySpec{contrast, exposure_tol}, engine);
}

std::vector<CurvePoint> local_frequency_curve(std::span<const FrequencyRecord> records,
                                              FrequencyContrast contrast,
                                              const LocalCurveConfig& config,
                                              const Engine& engine) {
    for (std::size_t i = 1; i < config.lambda_grid.size(); ++i)
        if (!(config.lambda_grid[i] > config.lambda_grid[i - 1]))
            throw Error("lambda grid must be strictly ascending");
    if (!(config.window > 0.0)) throw Error("curve window must be positive");

    std::vector<CurvePoint> curve;
    curve.reserve(config.lambda_grid.size());

    // the window realizes the lambda_i ~ lambda_j ~ lambda condition on its own
    const FrequencySpec window_spec{contrast, std::numeric_limits<double>::infinity()};

    for (std::size_t g = 0; g < config.lambda_grid.size(); ++g) {
        const double lambda = config.lambda_grid[g];
        CurvePoint point;
        point.x = lambda;

        std::vector<FrequencyRecord> windowed;
        for (const FrequencyRecord& r : records)
            if (std::abs(r.exposure - lambda) <= config.window) windowed.push_back(r);

        try {
            ConcordanceEstimate est =
                estimate_concordance(windowed, window_spec, with_derived_seed(engine, g));
            point.comparable_pairs = est.comparable_count();
            if (point.comparable_pairs < config.min_pairs) {
                point.status = CurvePointStatus::InsufficientPairs;
            } else {
                point.status = CurvePointStatus::Ok;
                est.meta["lambda"] = format_double(lambda);
                est.meta["window"] = format_double(config.window);
                point.estimate = std::move(est);
            }
        } catch (const Error&) {
            point.status = CurvePointStatus::InsufficientPairs;
            point.comparable_pairs = 0;
        }
        curve.push_back(std::move(point));
    }
    return curve;
}

}  // namespace concord
