// Centroid approximation: cluster each group's predictions, then compare
// cluster centroids pairwise, weighting each comparison by the product of
// cluster weights. Turns O(n*m) pair counting into O(k^2) indicator sums.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "concord/types.hpp"

namespace concord {

struct KMeansConfig {
    std::uint32_t k = 50;             // clusters per group (clamped to distinct values)
    std::uint32_t exposure_bins = 1;  // splits of the exposure distribution; 1 = no split
    std::uint32_t reruns = 5;         // Lloyd restarts; best within-cluster SSE wins
    std::uint32_t max_iter = 100;
    double tol = 1e-9;  // centroid-shift convergence threshold
    std::uint64_t seed = 0;
    bool half_credit_ties = false;  // count centroid ties as 0.5 instead of 0
    bool exact_dp = false;          // exact 1-D dynamic-programming solver, no reruns
    bool quantile_bins = true;      // equal-frequency bins; false = equal-width
};

struct WeightedCentroid {
    double centroid = 0.0;
    double weight = 0.0;
};

// Clusters of each group's predictions for one exposure bin. Weights within
// a group sum to 1; centroids are sorted ascending.
struct ClusterSummary {
    std::vector<WeightedCentroid> group_a;
    std::vector<WeightedCentroid> group_b;
};

// Lloyd iterations over scalar values with k-means++ seeding, rerun
// config.reruns times with derived seeds; the run with the lowest
// within-cluster sum of squares wins (ties broken by lowest rerun index).
// With config.exact_dp the globally optimal clustering is computed instead.
// Empty clusters are dropped; at most min(k, distinct values) come back.
std::vector<WeightedCentroid> kmeans_1d(std::span<const double> values, std::uint32_t k,
                                        const KMeansConfig& config);

// Sum over all cluster pairs of I(centroid_b > centroid_a) * w_b * w_a.
double concordant_mass(const ClusterSummary& summary, bool half_credit_ties = false);

// Clustered estimate of an exposure-matched frequency concordance. The
// pooled exposure distribution is split into config.exposure_bins bins;
// within a bin every cross-group pair counts as exposure-admissible. Bin
// masses combine with weights proportional to the bin's cross-pair count.
ConcordanceEstimate clustered_concordance(std::span<const FrequencyRecord> records,
                                          const FrequencySpec& spec, const KMeansConfig& config);

}  // namespace concord
