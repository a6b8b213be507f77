// Acceptance suite. Each criterion prints one PASS/FAIL line; the process
// exits with the number of failures. An optional argument runs a single
// criterion: ./concord_acceptance 3

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "concord/exact.hpp"
#include "concord/kmeans.hpp"
#include "concord/sampling.hpp"
#include "concord/synthetic.hpp"
#include "test_util.hpp"

using namespace concord;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

struct Outcome {
    bool pass = false;
    std::string detail;
};

double mean(const std::vector<double>& values) {
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

template <typename... Args>
std::string fmt(const char* pattern, Args... args) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), pattern, args...);
    return buf;
}

// --------------------------------------------------------------------------
// 1. Exhaustive-sample identity: S = n reproduces the exact counts exactly.

Outcome criterion1() {
    Timer timer;
    constexpr int kDatasets = 50;
    for (int d = 0; d < kDatasets; ++d) {
        Rng rng(9000 + d);
        const std::size_t n = 100 + rng.uniform_u64(1901);  // up to 2000
        if (d % 2 == 0) {
            const Dataset dataset = generate_synthetic(n, Scenario::PoissonWorld, 100 + d);
            const FrequencySpec spec{FrequencyContrast::ZeroVsOnePlus, 0.05};
            const PairCounts exact = exact_pair_counts(dataset.frequency(), spec);
            if (exact.comparable == 0) continue;
            const SampleTally tally = sample_tally(dataset.frequency(), spec, {n, 7u + d, 0.05});
            const ConcordanceEstimate est = estimate_from_tally(tally);
            const ConcordanceEstimate ex = exact_concordance(dataset.frequency(), spec);
            if (tally.total_concordant != exact.concordant ||
                tally.total_comparable != exact.comparable || est.value != ex.value)
                return {false, fmt("dataset %d: tally (%llu/%llu) vs exact (%llu/%llu)", d,
                                   (unsigned long long)tally.total_concordant,
                                   (unsigned long long)tally.total_comparable,
                                   (unsigned long long)exact.concordant,
                                   (unsigned long long)exact.comparable)};
        } else {
            const Dataset dataset = generate_synthetic(n / 4 + 2, Scenario::GammaWorld, 100 + d);
            const SeveritySpec spec{500.0};
            const PairCounts exact = exact_pair_counts(dataset.severity(), spec);
            if (exact.comparable == 0) continue;
            const SampleTally tally =
                sample_tally(dataset.severity(), spec, {dataset.size(), 7u + d, 0.05});
            if (tally.total_concordant != exact.concordant ||
                tally.total_comparable != exact.comparable)
                return {false, fmt("severity dataset %d mismatch", d)};
        }
    }
    const double elapsed = timer.seconds();
    if (elapsed >= 10.0) return {false, fmt("ran %.1fs, budget 10s", elapsed)};
    return {true, fmt("%d datasets, integer identity, %.1fs", kDatasets, elapsed)};
}

// --------------------------------------------------------------------------
// 2. Exhaustive clustering (bins=1, k = distinct predictions) equals exact.

Outcome criterion2() {
    Timer timer;
    constexpr int kDatasets = 50;
    double worst = 0.0;
    for (int d = 0; d < kDatasets; ++d) {
        Rng rng(4000 + d);
        const std::size_t n = 100 + rng.uniform_u64(1901);
        Dataset dataset = generate_synthetic(n, Scenario::PoissonWorld, 300 + d);
        auto records = dataset.frequency();
        for (auto& r : records) r.exposure = 1.0;  // uniform exposure

        const FrequencySpec spec{FrequencyContrast::ZeroVsOnePlus, 1.0};
        KMeansConfig config;
        config.k = static_cast<std::uint32_t>(n);  // clamped to distinct per group
        config.exposure_bins = 1;
        config.reruns = 1;
        config.seed = 50 + d;
        try {
            const double clustered = clustered_concordance(records, spec, config).value;
            const double exact = exact_concordance(records, spec).value;
            worst = std::max(worst, std::abs(clustered - exact));
            if (std::abs(clustered - exact) > 1e-12)
                return {false, fmt("dataset %d: |%.17g - %.17g| > 1e-12", d, clustered, exact)};
        } catch (const Error& e) {
            return {false, fmt("dataset %d raised: %s", d, e.what())};
        }
    }
    return {true, fmt("%d datasets, max |diff| = %.2e, %.1fs", kDatasets, worst, timer.seconds())};
}

// --------------------------------------------------------------------------
// 3. CI coverage on poisson-world replicates.

Outcome criterion3() {
    Timer timer;
    constexpr int kReplicates = 500;
    const FrequencySpec spec{FrequencyContrast::ZeroVsOnePlus, 0.05};
    int covered = 0;
    for (int r = 0; r < kReplicates; ++r) {
        const Dataset dataset = generate_synthetic(5000, Scenario::PoissonWorld, 20000 + r);
        const double truth = exact_concordance(dataset.frequency(), spec).value;
        const SampleTally tally = sample_tally(dataset.frequency(), spec, {1000, 777u + r, 0.05});
        const ConfidenceInterval ci = confidence_interval(tally, 0.05);
        if (ci.lower <= truth && truth <= ci.upper) ++covered;
    }
    const double coverage = static_cast<double>(covered) / kReplicates;
    const double elapsed = timer.seconds();
    if (elapsed >= 300.0) return {false, fmt("ran %.0fs, budget 300s", elapsed)};
    if (coverage < 0.90 || coverage > 0.98)
        return {false, fmt("coverage %.3f outside [0.90, 0.98], %.0fs", coverage, elapsed)};
    return {true, fmt("coverage %.3f over %d replicates, %.0fs", coverage, kReplicates, elapsed)};
}

// --------------------------------------------------------------------------
// 4. CI width shrinks with S and reaches the practical band at S = 20000.

Outcome criterion4() {
    Timer timer;
    const FrequencySpec spec{FrequencyContrast::ZeroVsOnePlus, 0.05};

    const Dataset fixed = generate_synthetic(20000, Scenario::PoissonWorld, 4040);
    std::vector<double> widths;
    for (std::uint64_t s : {500u, 2000u, 8000u}) {
        std::vector<double> w;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const SampleTally tally =
                sample_tally(fixed.frequency(), spec, {s, 6000 + seed, 0.05});
            const ConfidenceInterval ci = confidence_interval(tally, 0.05);
            w.push_back(ci.upper - ci.lower);
        }
        widths.push_back(mean(w));
    }
    if (!(widths[0] > widths[1] && widths[1] > widths[2]))
        return {false, fmt("mean widths not strictly decreasing: %.4f, %.4f, %.4f", widths[0],
                           widths[1], widths[2])};

    const Dataset big = generate_synthetic(160000, Scenario::PoissonWorld, 7);
    const SampleTally tally = sample_tally(big.frequency(), spec, {20000, 11, 0.05});
    const ConfidenceInterval ci = confidence_interval(tally, 0.05);
    const double width = ci.upper - ci.lower;
    if (width > 0.02)
        return {false, fmt("width %.4f at S=20000 exceeds the 0.02 band", width)};
    return {true, fmt("widths %.4f > %.4f > %.4f; S=20000 width %.4f <= 0.02, %.0fs", widths[0],
                      widths[1], widths[2], width, timer.seconds())};
}

// --------------------------------------------------------------------------
// 5. Severity identities.

Outcome criterion5() {
    Timer timer;
    const std::vector<SeverityRecord> worked{{100, 120}, {150, 110}, {400, 300}};
    const double at0 = exact_concordance(worked, SeveritySpec{0.0}).value;
    const double at100 = exact_concordance(worked, SeveritySpec{100.0}).value;
    if (at0 != 2.0 / 3.0) return {false, fmt("worked example at v=0: %.17g != 2/3", at0)};
    if (at100 != 1.0) return {false, fmt("worked example at v=100: %.17g != 1", at100)};

    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const auto records = testutil::random_severity(120, seed);
        const auto oracle = testutil::oracle_severity(records, 0.0);
        const auto est = exact_concordance(records, SeveritySpec{0.0});
        if (est.value != oracle.value() ||
            std::get<PairCounts>(est.counts).comparable != oracle.comparable())
            return {false, fmt("C(0) mismatch on seed %llu", (unsigned long long)seed)};
    }
    return {true, fmt("worked example 2/3 and 1.0; C(0) identity on 25 datasets, %.1fs",
                      timer.seconds())};
}

// --------------------------------------------------------------------------
// 6. Sampled and clustered agree at scale; clustering is >10x faster.

Outcome criterion6() {
    const Dataset big = generate_synthetic(160000, Scenario::PoissonWorld, 7);
    const FrequencySpec spec{FrequencyContrast::ZeroVsOnePlus, 0.05};

    Timer sample_timer;
    const ConcordanceEstimate sampled =
        sampled_concordance(big.frequency(), spec, {20000, 1, 0.05});
    const double sampled_seconds = sample_timer.seconds();

    KMeansConfig config;
    config.k = 50;
    config.exposure_bins = 15;
    config.seed = 1;
    Timer cluster_timer;
    const ConcordanceEstimate clustered = clustered_concordance(big.frequency(), spec, config);
    const double clustered_seconds = cluster_timer.seconds();

    const double diff = std::abs(sampled.value - clustered.value);
    if (diff > 0.01)
        return {false, fmt("sampled %.4f vs clustered %.4f differ by %.4f > 0.01", sampled.value,
                           clustered.value, diff)};
    if (clustered_seconds >= 0.10 * sampled_seconds)
        return {false, fmt("clustered %.2fs not under 10%% of sampled %.2fs", clustered_seconds,
                           sampled_seconds)};
    return {true, fmt("sampled %.4f (%.2fs) vs clustered %.4f (%.2fs), diff %.4f", sampled.value,
                      sampled_seconds, clustered.value, clustered_seconds, diff)};
}

// --------------------------------------------------------------------------
// 7. Coarse clustering underestimates on average.

Outcome criterion7() {
    Timer timer;
    const Dataset big = generate_synthetic(160000, Scenario::PoissonWorld, 7);
    const FrequencySpec spec{FrequencyContrast::ZeroVsOnePlus, 0.05};

    auto mean_at = [&](std::uint32_t k) {
        std::vector<double> values;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            KMeansConfig config;
            config.k = k;
            config.exposure_bins = 15;
            config.reruns = 1;
            config.seed = seed;
            values.push_back(clustered_concordance(big.frequency(), spec, config).value);
        }
        return mean(values);
    };

    const double coarse = mean_at(10);
    const double fine = mean_at(50);
    if (!(coarse <= fine))
        return {false, fmt("mean at k=10 (%.4f) exceeds mean at k=50 (%.4f)", coarse, fine)};
    return {true, fmt("mean k=10 %.4f <= mean k=50 %.4f over 20 seeds, %.0fs", coarse, fine,
                      timer.seconds())};
}

// --------------------------------------------------------------------------
// 8. Invariant suite, >= 1000 randomized cases per invariant.

Outcome criterion8() {
    Timer timer;

    // rank invariance: replacing predictions by their ranks leaves counts alone
    for (int c = 0; c < 1000; ++c) {
        auto records = testutil::random_frequency(60, 80000 + c);
        std::vector<double> preds;
        for (const auto& r : records) preds.push_back(r.prediction);
        std::sort(preds.begin(), preds.end());
        preds.erase(std::unique(preds.begin(), preds.end()), preds.end());
        auto ranked = records;
        for (auto& r : ranked)
            r.prediction = static_cast<double>(
                1 + (std::lower_bound(preds.begin(), preds.end(), r.prediction) - preds.begin()));
        const FrequencySpec spec{FrequencyContrast::ZeroVsOnePlus, 0.1};
        const PairCounts a = exact_pair_counts(records, spec);
        const PairCounts b = exact_pair_counts(ranked, spec);
        if (a.concordant != b.concordant || a.discordant != b.discordant || a.tied != b.tied)
            return {false, fmt("rank invariance broke on case %d", c)};
    }

    // label-swap symmetry with tie-free integer predictions
    for (int c = 0; c < 1000; ++c) {
        auto records = testutil::random_frequency(50, 90000 + c);
        Rng rng(70000 + c);
        for (std::size_t i = 0; i < records.size(); ++i)
            records[i].prediction = static_cast<double>(i + 1);
        for (std::size_t i = records.size(); i > 1; --i)
            std::swap(records[i - 1].prediction, records[rng.uniform_u64(i)].prediction);
        const FrequencySpec spec{FrequencyContrast::ZeroVsOnePlus, 0.1};
        const PairCounts counts = exact_pair_counts(records, spec);
        if (counts.comparable == 0) continue;
        auto swapped = records;
        for (auto& r : swapped)
            r.prediction = static_cast<double>(records.size() + 1) - r.prediction;
        const PairCounts reversed = exact_pair_counts(swapped, spec);
        if (reversed.concordant != counts.discordant || reversed.discordant != counts.concordant)
            return {false, fmt("label-swap symmetry broke on case %d", c)};
    }

    // weight normalization within 1e-12
    for (int c = 0; c < 1000; ++c) {
        Rng rng(60000 + c);
        std::vector<double> values;
        const std::size_t n = 20 + rng.uniform_u64(180);
        for (std::size_t i = 0; i < n; ++i)
            values.push_back(rng.normal() + (i % 3 == 0 ? 2.0 : 0.0));
        KMeansConfig config;
        config.seed = c;
        config.reruns = 1;
        const auto clusters = kmeans_1d(values, 1 + static_cast<std::uint32_t>(rng.uniform_u64(12)),
                                        config);
        double total = 0.0;
        for (const auto& cl : clusters) total += cl.weight;
        if (std::abs(total - 1.0) > 1e-12)
            return {false, fmt("weights summed to %.17g on case %d", total, c)};
    }

    // seed determinism of the sampled estimator
    for (int c = 0; c < 1000; ++c) {
        const auto records = testutil::random_frequency(50, 50000 + c);
        const FrequencySpec spec{FrequencyContrast::ZeroVsOnePlus, 0.2};
        const SamplingConfig config{20, 1234u + c, 0.05};
        const SampleTally t1 = sample_tally(records, spec, config);
        const SampleTally t2 = sample_tally(records, spec, config);
        if (t1.total_concordant != t2.total_concordant ||
            t1.total_comparable != t2.total_comparable)
            return {false, fmt("seed determinism broke on case %d", c)};
    }

    // algebraic identity pi_cc + 2 pi_cd + pi_dd = sum(n_t_i) / n_t_S (= 1)
    for (int c = 0; c < 1000; ++c) {
        Rng rng(40000 + c);
        SampleTally tally;
        const std::size_t entries = 2 + rng.uniform_u64(40);
        for (std::size_t i = 0; i < entries; ++i) {
            const std::uint64_t t = rng.uniform_u64(30);  // zero-pair draws included
            const std::uint64_t conc = t == 0 ? 0 : rng.uniform_u64(t + 1);
            tally.per_observation.push_back({conc, t});
            tally.total_concordant += conc;
            tally.total_comparable += t;
        }
        if (tally.total_comparable == 0) continue;
        const VarianceComponents vc = variance_components(tally);
        const double lhs = vc.pi_cc + 2.0 * vc.pi_cd + vc.pi_dd;
        if (std::abs(lhs - 1.0) > 1e-12)
            return {false, fmt("quadratic identity broke on case %d: %.17g", c, lhs)};
        if (std::abs(vc.pi_c + vc.pi_d - 1.0) > 1e-15)
            return {false, fmt("pi_c + pi_d != 1 on case %d", c)};
    }

    return {true, fmt("5 invariants x 1000 cases, %.0fs", timer.seconds())};
}

using CriterionFn = Outcome (*)();

struct Criterion {
    int number;
    const char* name;
    CriterionFn run;
};

const Criterion kCriteria[] = {
    {1, "exhaustive-sample identity (S = n equals the exact oracle)", criterion1},
    {2, "exhaustive-cluster equivalence within 1e-12", criterion2},
    {3, "95% CI coverage within [90%, 98%]", criterion3},
    {4, "CI width decreasing in S and <= 0.02 at S = 20000", criterion4},
    {5, "severity identities: C(0) and the worked example", criterion5},
    {6, "sampled vs clustered agreement and speedup at 160k rows", criterion6},
    {7, "coarse clustering underestimates on average", criterion7},
    {8, "randomized invariant suite (1000 cases each)", criterion8},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    int failures = 0;
    for (const Criterion& criterion : kCriteria) {
        if (only != 0 && criterion.number != only) continue;
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] criterion %d: %s — %s\n", outcome.pass ? "PASS" : "FAIL",
                    criterion.number, criterion.name, outcome.detail.c_str());
        std::fflush(stdout);
        if (!outcome.pass) ++failures;
    }
    return failures;
}
