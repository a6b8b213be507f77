#include "concord/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "concord/math.hpp"
#include "concord/pair_rules.hpp"
#include "concord/parallel.hpp"
#include "concord/rng.hpp"

namespace concord {

namespace {

struct PrefixSums {
    std::vector<double> sum;   // sum[i] = x_0 + ... + x_{i-1}
    std::vector<double> sum2;  // squares

    explicit PrefixSums(const std::vector<double>& xs) {
        sum.resize(xs.size() + 1, 0.0);
        sum2.resize(xs.size() + 1, 0.0);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sum[i + 1] = sum[i] + xs[i];
            sum2[i + 1] = sum2[i] + xs[i] * xs[i];
        }
    }

    double segment_mean(std::size_t begin, std::size_t end) const {
        return (sum[end] - sum[begin]) / static_cast<double>(end - begin);
    }

    double segment_sse(std::size_t begin, std::size_t end) const {
        if (end <= begin) return 0.0;
        const double s = sum[end] - sum[begin];
        const double s2 = sum2[end] - sum2[begin];
        return std::max(0.0, s2 - s * s / static_cast<double>(end - begin));
    }
};

// k-means++ over sorted values: D^2-weighted picks, distinct by construction.
// Stops early when every value coincides with a centroid.
std::vector<double> seed_centroids(const std::vector<double>& xs, std::uint32_t k, Rng& rng) {
    const std::size_t n = xs.size();
    std::vector<double> centroids;
    centroids.reserve(k);
    centroids.push_back(xs[rng.uniform_u64(n)]);

    std::vector<double> d2(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = xs[i] - centroids[0];
        d2[i] = d * d;
    }
    while (centroids.size() < k) {
        const double total = std::accumulate(d2.begin(), d2.end(), 0.0);
        if (!(total > 0.0)) break;
        const double u = rng.uniform_double() * total;
        double cum = 0.0;
        std::size_t pick = n - 1;
        for (std::size_t i = 0; i < n; ++i) {
            cum += d2[i];
            if (cum > u) {
                pick = i;
                break;
            }
        }
        const double c = xs[pick];
        centroids.push_back(c);
        for (std::size_t i = 0; i < n; ++i) {
            const double d = xs[i] - c;
            d2[i] = std::min(d2[i], d * d);
        }
    }
    std::sort(centroids.begin(), centroids.end());
    centroids.erase(std::unique(centroids.begin(), centroids.end()), centroids.end());
    return centroids;
}

struct LloydResult {
    std::vector<std::size_t> boundaries;  // segment ends into the sorted values
    std::vector<double> centroids;
    double wcss = 0.0;
};

// Lloyd iterations on sorted values. In one dimension every cluster is a
// contiguous run of the sorted order, so assignment reduces to locating the
// midpoints between adjacent centroids. Strictly sorted centroids stay
// strictly sorted across updates; an empty segment keeps its old centroid.
LloydResult lloyd(const std::vector<double>& xs, const PrefixSums& ps,
                  std::vector<double> centroids, std::uint32_t max_iter, double tol) {
    const std::size_t n = xs.size();
    const std::size_t k = centroids.size();
    std::vector<std::size_t> ends(k);

    for (std::uint32_t iter = 0; iter < max_iter; ++iter) {
        for (std::size_t l = 0; l + 1 < k; ++l) {
            const double boundary = 0.5 * (centroids[l] + centroids[l + 1]);
            ends[l] = static_cast<std::size_t>(
                std::upper_bound(xs.begin(), xs.end(), boundary) - xs.begin());
        }
        ends[k - 1] = n;

        double shift = 0.0;
        std::size_t begin = 0;
        for (std::size_t l = 0; l < k; ++l) {
            const std::size_t end = ends[l];
            if (end > begin) {
                const double updated = ps.segment_mean(begin, end);
                shift = std::max(shift, std::abs(updated - centroids[l]));
                centroids[l] = updated;
            }
            begin = end;
        }
        if (shift <= tol) break;
    }

    // final assignment with the converged centroids
    for (std::size_t l = 0; l + 1 < k; ++l) {
        const double boundary = 0.5 * (centroids[l] + centroids[l + 1]);
        ends[l] =
            static_cast<std::size_t>(std::upper_bound(xs.begin(), xs.end(), boundary) - xs.begin());
    }
    ends[k - 1] = n;

    LloydResult result;
    result.centroids = std::move(centroids);
    result.boundaries = ends;
    std::size_t begin = 0;
    for (std::size_t l = 0; l < k; ++l) {
        result.wcss += ps.segment_sse(begin, ends[l]);
        begin = ends[l];
    }
    return result;
}

// Exact 1-D k-means on weighted distinct values by divide-and-conquer DP
// (the segment-cost matrix satisfies the monotone-argmin condition).
struct DpSolver {
    std::vector<double> values;   // distinct, ascending
    std::vector<double> wsum;     // weighted prefix sums
    std::vector<double> wsum2;
    std::vector<double> wcount;
    std::vector<double> prev;     // dp layer j-1
    std::vector<double> cur;      // dp layer j
    std::vector<std::vector<std::uint32_t>> arg;  // split points for backtracking

    double cost(std::size_t begin, std::size_t end) const {
        if (end <= begin) return 0.0;
        const double w = wcount[end] - wcount[begin];
        const double s = wsum[end] - wsum[begin];
        const double s2 = wsum2[end] - wsum2[begin];
        return std::max(0.0, s2 - s * s / w);
    }

    void layer(std::size_t j, std::size_t lo, std::size_t hi, std::size_t opt_lo,
               std::size_t opt_hi) {
        if (lo > hi) return;
        const std::size_t mid = (lo + hi) / 2;
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_split = opt_lo;
        const std::size_t split_hi = std::min(opt_hi, mid > 0 ? mid - 1 : 0);
        for (std::size_t s = opt_lo; s <= split_hi; ++s) {
            const double c = prev[s] + cost(s, mid);
            if (c < best) {
                best = c;
                best_split = s;
            }
        }
        cur[mid] = best;
        arg[j][mid] = static_cast<std::uint32_t>(best_split);
        if (mid > lo) layer(j, lo, mid - 1, opt_lo, best_split);
        if (mid < hi) layer(j, mid + 1, hi, best_split, opt_hi);
    }
};

std::vector<WeightedCentroid> kmeans_dp(const std::vector<double>& xs, std::uint32_t k) {
    // collapse to distinct weighted values
    DpSolver dp;
    std::vector<double> counts;
    for (std::size_t i = 0; i < xs.size();) {
        std::size_t j = i;
        while (j < xs.size() && xs[j] == xs[i]) ++j;
        dp.values.push_back(xs[i]);
        counts.push_back(static_cast<double>(j - i));
        i = j;
    }
    const std::size_t m = dp.values.size();
    const std::uint32_t kk = std::min<std::uint32_t>(k, static_cast<std::uint32_t>(m));

    dp.wsum.assign(m + 1, 0.0);
    dp.wsum2.assign(m + 1, 0.0);
    dp.wcount.assign(m + 1, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        dp.wsum[i + 1] = dp.wsum[i] + counts[i] * dp.values[i];
        dp.wsum2[i + 1] = dp.wsum2[i] + counts[i] * dp.values[i] * dp.values[i];
        dp.wcount[i + 1] = dp.wcount[i] + counts[i];
    }

    dp.prev.assign(m + 1, 0.0);
    dp.cur.assign(m + 1, 0.0);
    dp.arg.assign(kk + 1, std::vector<std::uint32_t>(m + 1, 0));
    for (std::size_t i = 1; i <= m; ++i) dp.prev[i] = dp.cost(0, i);
    for (std::uint32_t j = 2; j <= kk; ++j) {
        dp.layer(j, j, m, j - 1, m - 1);
        std::swap(dp.prev, dp.cur);
    }

    // backtrack: arg[j][i] is the start of the last segment of the optimal
    // j-cluster partition of the first i values
    std::vector<std::size_t> ends;
    std::size_t end = m;
    for (std::uint32_t j = kk; j >= 2; --j) {
        ends.push_back(end);
        end = dp.arg[j][end];
    }
    ends.push_back(end);
    std::reverse(ends.begin(), ends.end());  // now ascending segment ends, last == m

    std::vector<WeightedCentroid> out;
    const double total = dp.wcount[m];
    std::size_t begin = 0;
    for (std::size_t e : ends) {
        if (e > begin) {
            const double w = dp.wcount[e] - dp.wcount[begin];
            const double s = dp.wsum[e] - dp.wsum[begin];
            out.push_back({s / w, w / total});
        }
        begin = e;
    }
    return out;
}

std::vector<WeightedCentroid> clusters_from_segments(const std::vector<double>& xs,
                                                     const PrefixSums& ps,
                                                     const std::vector<std::size_t>& ends) {
    std::vector<WeightedCentroid> out;
    const double n = static_cast<double>(xs.size());
    std::size_t begin = 0;
    for (std::size_t end : ends) {
        if (end > begin)
            out.push_back({ps.segment_mean(begin, end), static_cast<double>(end - begin) / n});
        begin = end;
    }
    return out;
}

}  // namespace

std::vector<WeightedCentroid> kmeans_1d(std::span<const double> values, std::uint32_t k,
                                        const KMeansConfig& config) {
    if (values.empty()) throw EmptyGroup("kmeans_1d: empty value sequence");
    if (k == 0) k = 1;

    std::vector<double> xs(values.begin(), values.end());
    std::sort(xs.begin(), xs.end());

    if (config.exact_dp) return kmeans_dp(xs, k);

    PrefixSums ps(xs);
    if (k == 1 || xs.front() == xs.back())
        return clusters_from_segments(xs, ps, {xs.size()});

    LloydResult best;
    best.wcss = std::numeric_limits<double>::infinity();
    const std::uint32_t reruns = std::max<std::uint32_t>(1, config.reruns);
    for (std::uint32_t run = 0; run < reruns; ++run) {
        Rng rng(derive_seed(config.seed, 0x6B6D65616E73ULL, run));
        std::vector<double> seeds = seed_centroids(xs, k, rng);
        LloydResult result = lloyd(xs, ps, std::move(seeds), config.max_iter, config.tol);
        if (result.wcss < best.wcss) best = std::move(result);
    }
    return clusters_from_segments(xs, ps, best.boundaries);
}

namespace {

struct MassSplit {
    double concordant = 0.0;  // strict I(centroid_b > centroid_a) mass
    double tied = 0.0;        // centroid-equality mass
};

MassSplit split_mass(const ClusterSummary& summary) {
    // group_a sorted ascending: prefix weights give the mass strictly below a centroid
    std::vector<double> prefix(summary.group_a.size() + 1, 0.0);
    for (std::size_t i = 0; i < summary.group_a.size(); ++i)
        prefix[i + 1] = prefix[i] + summary.group_a[i].weight;

    MassSplit mass;
    for (const auto& [cb, wb] : summary.group_b) {
        auto lo = std::lower_bound(summary.group_a.begin(), summary.group_a.end(), cb,
                                   [](const WeightedCentroid& wc, double v) { return wc.centroid < v; });
        auto hi = std::upper_bound(summary.group_a.begin(), summary.group_a.end(), cb,
                                   [](double v, const WeightedCentroid& wc) { return v < wc.centroid; });
        mass.concordant += wb * prefix[static_cast<std::size_t>(lo - summary.group_a.begin())];
        mass.tied += wb * (prefix[static_cast<std::size_t>(hi - summary.group_a.begin())] -
                           prefix[static_cast<std::size_t>(lo - summary.group_a.begin())]);
    }
    return mass;
}

}  // namespace

double concordant_mass(const ClusterSummary& summary, bool half_credit_ties) {
    const MassSplit mass = split_mass(summary);
    return half_credit_ties ? mass.concordant + 0.5 * mass.tied : mass.concordant;
}

namespace {

// Bin assignment: count of edges strictly below the exposure, so mass
// sitting exactly on an edge falls into the lower bin.
std::vector<double> bin_edges(std::vector<double> pooled, std::uint32_t bins, bool quantile) {
    std::vector<double> edges;
    if (bins <= 1 || pooled.empty()) return edges;
    if (quantile) {
        std::sort(pooled.begin(), pooled.end());
        for (std::uint32_t b = 1; b < bins; ++b)
            edges.push_back(pooled[pooled.size() * b / bins]);
    } else {
        const auto [lo_it, hi_it] = std::minmax_element(pooled.begin(), pooled.end());
        const double lo = *lo_it, hi = *hi_it;
        for (std::uint32_t b = 1; b < bins; ++b)
            edges.push_back(lo + (hi - lo) * static_cast<double>(b) / static_cast<double>(bins));
    }
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

}  // namespace

ConcordanceEstimate clustered_concordance(std::span<const FrequencyRecord> records,
                                          const FrequencySpec& spec, const KMeansConfig& config) {
    std::vector<std::uint32_t> group_a, group_b;
    for (std::uint32_t i = 0; i < records.size(); ++i) {
        if (in_group_a(spec.contrast, records[i].claim_count)) group_a.push_back(i);
        if (in_group_b(spec.contrast, records[i].claim_count)) group_b.push_back(i);
    }
    if (group_a.empty()) throw EmptyGroup("group A is empty under contrast " + to_string(spec.contrast));
    if (group_b.empty()) throw EmptyGroup("group B is empty under contrast " + to_string(spec.contrast));

    std::vector<double> pooled;
    pooled.reserve(group_a.size() + group_b.size());
    for (std::uint32_t i : group_a) pooled.push_back(records[i].exposure);
    for (std::uint32_t i : group_b) pooled.push_back(records[i].exposure);
    const std::vector<double> edges =
        bin_edges(std::move(pooled), config.exposure_bins, config.quantile_bins);
    const std::size_t n_bins = edges.size() + 1;

    const auto bin_of = [&](double exposure) {
        return static_cast<std::size_t>(
            std::lower_bound(edges.begin(), edges.end(), exposure) - edges.begin());
    };

    std::vector<std::vector<double>> preds_a(n_bins), preds_b(n_bins);
    for (std::uint32_t i : group_a) preds_a[bin_of(records[i].exposure)].push_back(records[i].prediction);
    for (std::uint32_t i : group_b) preds_b[bin_of(records[i].exposure)].push_back(records[i].prediction);

    // bins are independent work units with derived seeds
    std::vector<double> bin_mass(n_bins, 0.0);
    std::vector<double> bin_tied(n_bins, 0.0);
    std::vector<std::uint64_t> bin_pairs(n_bins, 0);
    parallel_for_chunks(n_bins, [&](std::size_t begin, std::size_t end) {
        for (std::size_t b = begin; b < end; ++b) {
            if (preds_a[b].empty() || preds_b[b].empty()) continue;
            KMeansConfig unit = config;
            unit.seed = derive_seed(config.seed, b, 0);
            ClusterSummary summary;
            summary.group_a = kmeans_1d(preds_a[b], config.k, unit);
            unit.seed = derive_seed(config.seed, b, 1);
            summary.group_b = kmeans_1d(preds_b[b], config.k, unit);
            const MassSplit mass = split_mass(summary);
            bin_mass[b] = config.half_credit_ties ? mass.concordant + 0.5 * mass.tied
                                                  : mass.concordant;
            bin_tied[b] = mass.tied;
            bin_pairs[b] = static_cast<std::uint64_t>(preds_a[b].size()) *
                           static_cast<std::uint64_t>(preds_b[b].size());
        }
    });

    std::uint64_t admissible = 0;
    double weighted = 0.0;
    double untied = 0.0;
    for (std::size_t b = 0; b < n_bins; ++b) {
        admissible += bin_pairs[b];
        weighted += bin_mass[b] * static_cast<double>(bin_pairs[b]);
        untied += (1.0 - bin_tied[b]) * static_cast<double>(bin_pairs[b]);
    }
    if (admissible == 0) throw NoComparablePairs("every exposure bin lacks one of the two groups");
    // with strict ties and zero untied mass no centroid comparison is informative
    if (!config.half_credit_ties && untied <= 0.0)
        throw NoComparablePairs("every centroid comparison is a prediction tie");

    ConcordanceEstimate est;
    est.value = weighted / static_cast<double>(admissible);
    est.method = Method::Clustered;
    est.counts = ClusterMass{est.value, admissible};
    est.meta = {{"contrast", to_string(spec.contrast)},
                {"exposure_tol", format_double(spec.exposure_tol)},
                {"k", std::to_string(config.k)},
                {"bins", std::to_string(config.exposure_bins)},
                {"reruns", std::to_string(config.reruns)},
                {"max_iter", std::to_string(config.max_iter)},
                {"tol", format_double(config.tol)},
                {"seed", std::to_string(config.seed)},
                {"binning", config.quantile_bins ? "quantile" : "equal-width"},
                {"solver", config.exact_dp ? "dp" : "lloyd"}};
    if (config.half_credit_ties) est.meta["tie_credit"] = "half";
    return est;
}

}  // namespace concord
