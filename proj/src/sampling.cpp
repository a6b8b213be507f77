#include "concord/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "concord/math.hpp"
#include "concord/pair_rules.hpp"
#include "concord/parallel.hpp"
#include "concord/rng.hpp"

namespace concord {

namespace {

constexpr std::uint32_t kNeverDrawn = 0xFFFFFFFFu;

// Draw order of S indices out of [0, n) by partial Fisher-Yates.
std::vector<std::uint32_t> draw_order(std::size_t n, std::uint64_t s, std::uint64_t seed) {
    std::vector<std::uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0u);
    Rng rng(seed);
    for (std::uint64_t t = 0; t < s; ++t) {
        const std::uint64_t j = t + rng.uniform_u64(n - t);
        std::swap(idx[t], idx[j]);
    }
    idx.resize(s);
    return idx;
}

struct DrawPlan {
    std::vector<std::uint32_t> order;      // t -> record index
    std::vector<std::uint32_t> drawn_pos;  // record index -> draw position (kNeverDrawn if none)
    std::uint64_t sample_size = 0;
    bool clamped = false;
};

DrawPlan make_plan(std::size_t n, const SamplingConfig& config) {
    if (n == 0) throw EmptyInput();
    DrawPlan plan;
    plan.sample_size = std::max<std::uint64_t>(1, config.sample_size);
    if (plan.sample_size > n) {
        plan.sample_size = n;
        plan.clamped = true;
    }
    plan.order = draw_order(n, plan.sample_size, config.seed);
    plan.drawn_pos.assign(n, kNeverDrawn);
    for (std::uint32_t t = 0; t < plan.order.size(); ++t) plan.drawn_pos[plan.order[t]] = t;
    return plan;
}

// Counts for draw t run against every record that is neither the draw itself
// nor removed by an earlier draw (drawn_pos < t). Each unordered pair is
// therefore counted at most once across the whole tally, which is what makes
// S = n reproduce the exact enumeration.
template <typename CountFn>
SampleTally run_tally(std::size_t n, const DrawPlan& plan, CountFn&& count_one) {
    SampleTally tally;
    tally.population_size = n;
    tally.sample_size_clamped = plan.clamped;
    tally.per_observation.resize(plan.sample_size);

    std::vector<std::uint64_t> tied(plan.sample_size, 0);
    parallel_for_chunks(plan.sample_size, [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
            PairCounts local = count_one(plan.order[t], static_cast<std::uint32_t>(t));
            tally.per_observation[t] = {local.concordant, local.comparable};
            tied[t] = local.tied;
        }
    });

    for (std::size_t t = 0; t < plan.sample_size; ++t) {
        tally.total_concordant += tally.per_observation[t].concordant;
        tally.total_comparable += tally.per_observation[t].comparable;
        tally.total_tied += tied[t];
    }
    return tally;
}

}  // namespace

SampleTally sample_tally(std::span<const FrequencyRecord> records, const FrequencySpec& spec,
                         const SamplingConfig& config) {
    const std::size_t n = records.size();
    DrawPlan plan = make_plan(n, config);

    // 0 = A, 1 = B, 2 = neither; disjoint for every contrast
    std::vector<std::uint8_t> side(n, 2);
    for (std::size_t i = 0; i < n; ++i) {
        if (in_group_a(spec.contrast, records[i].claim_count))
            side[i] = 0;
        else if (in_group_b(spec.contrast, records[i].claim_count))
            side[i] = 1;
    }

    return run_tally(n, plan, [&](std::uint32_t i, std::uint32_t t) {
        PairCounts local;
        if (side[i] == 2) return local;
        const FrequencyRecord& ri = records[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (plan.drawn_pos[j] <= t) continue;  // removed earlier or the draw itself
            if (side[i] + side[j] != 1) continue;  // need one A and one B
            const FrequencyRecord& rj = records[j];
            if (std::abs(ri.exposure - rj.exposure) > spec.exposure_tol) continue;
            local.add(side[i] == 0 ? order_predictions(ri.prediction, rj.prediction)
                                   : order_predictions(rj.prediction, ri.prediction));
        }
        return local;
    });
}

SampleTally sample_tally(std::span<const SeverityRecord> records, const SeveritySpec& spec,
                         const SamplingConfig& config) {
    const std::size_t n = records.size();
    DrawPlan plan = make_plan(n, config);

    return run_tally(n, plan, [&](std::uint32_t i, std::uint32_t t) {
        PairCounts local;
        const SeverityRecord& ri = records[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (plan.drawn_pos[j] <= t) continue;
            const SeverityRecord& rj = records[j];
            const bool i_smaller = ri.claim_size < rj.claim_size;
            const SeverityRecord& a = i_smaller ? ri : rj;
            const SeverityRecord& b = i_smaller ? rj : ri;
            local.add(classify_severity_pair(a, b, spec.min_gap));
        }
        return local;
    });
}

ConcordanceEstimate estimate_from_tally(const SampleTally& tally) {
    if (tally.total_comparable == 0) throw NoComparablePairs();
    ConcordanceEstimate est;
    est.value = static_cast<double>(tally.total_concordant) /
                static_cast<double>(tally.total_comparable);
    est.method = Method::Sampled;
    PairCounts counts;
    counts.concordant = tally.total_concordant;
    counts.discordant = tally.total_comparable - tally.total_concordant;
    counts.tied = tally.total_tied;
    counts.comparable = tally.total_comparable;
    est.counts = counts;
    est.meta["S"] = std::to_string(tally.per_observation.size());
    if (tally.sample_size_clamped) est.meta["S_clamped_to_n"] = "true";
    return est;
}

VarianceComponents variance_components(const SampleTally& tally) {
    if (tally.total_comparable == 0) throw NoComparablePairs();
    VarianceComponents vc;
    const double nts = static_cast<double>(tally.total_comparable);
    vc.pi_c = static_cast<double>(tally.total_concordant) / nts;
    vc.pi_d = 1.0 - vc.pi_c;
    for (const auto& [c_i, t_i] : tally.per_observation) {
        if (t_i == 0) continue;  // 0/0 := 0
        const double c = static_cast<double>(c_i);
        const double d = static_cast<double>(t_i - c_i);
        const double t = static_cast<double>(t_i);
        vc.pi_cc += c * c / t;
        vc.pi_dd += d * d / t;
        vc.pi_cd += c * d / t;
    }
    vc.pi_cc /= nts;
    vc.pi_dd /= nts;
    vc.pi_cd /= nts;
    return vc;
}

ConfidenceInterval confidence_interval(const SampleTally& tally, double alpha) {
    std::size_t contributing = 0;
    for (const auto& entry : tally.per_observation)
        if (entry.comparable > 0) ++contributing;
    if (contributing < 2) throw DegenerateVariance();

    const VarianceComponents vc = variance_components(tally);
    const double c_hat = vc.pi_c;
    const double z = normal_quantile(1.0 - alpha / 2.0);
    const double s = static_cast<double>(tally.per_observation.size());
    const double half = z * std::sqrt(std::max(0.0, vc.variance()) / s);

    ConfidenceInterval ci;
    ci.alpha = alpha;
    ci.lower = std::clamp(c_hat - half, 0.0, 1.0);
    ci.upper = std::clamp(c_hat + half, 0.0, 1.0);
    return ci;
}

namespace {

template <typename Records, typename Spec>
ConcordanceEstimate sampled_impl(Records records, const Spec& spec, const SamplingConfig& config,
                                 std::map<std::string, std::string> extra_meta) {
    SampleTally tally = sample_tally(records, spec, config);
    ConcordanceEstimate est = estimate_from_tally(tally);
    try {
        est.ci = confidence_interval(tally, config.alpha);
    } catch (const DegenerateVariance&) {
        est.meta["ci"] = "degenerate";
    }
    est.meta["seed"] = std::to_string(config.seed);
    est.meta["alpha"] = format_double(config.alpha);
    est.meta.merge(extra_meta);
    return est;
}

}  // namespace

ConcordanceEstimate sampled_concordance(std::span<const FrequencyRecord> records,
                                        const FrequencySpec& spec, const SamplingConfig& config) {
    return sampled_impl(records, spec, config,
                        {{"contrast", to_string(spec.contrast)},
                         {"exposure_tol", format_double(spec.exposure_tol)}});
}

ConcordanceEstimate sampled_concordance(std::span<const SeverityRecord> records,
                                        const SeveritySpec& spec, const SamplingConfig& config) {
    return sampled_impl(records, spec, config, {{"v", format_double(spec.min_gap)}});
}

}  // namespace concord
