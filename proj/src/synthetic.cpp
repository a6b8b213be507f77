#include "concord/synthetic.hpp"

#include <cmath>

#include "concord/rng.hpp"

namespace concord {

namespace {

// Portfolio shape: 27.81% of policies run the full year, the rest are
// partial-year contracts. The rate constants solve
//   E[exp(-lambda r)] = 0.911 and E[lambda r exp(-lambda r)] = 0.0805
// for r = kMeanRate * exp(kRateSigma Z - kRateSigma^2/2), Z ~ N(0,1).
constexpr double kFullYearShare = 0.2781;
constexpr double kExposureMin = 0.05;
constexpr double kMeanRate = 0.15014234094017143;
constexpr double kRateSigma = 0.7816561903165568;

// Severity shape: lognormal mean claim cost around 1500 currency units,
// gamma-distributed actual cost with shape 1.5.
constexpr double kLogMeanClaim = 7.3132203870903236;  // log(1500)
constexpr double kClaimSigma = 0.6;
constexpr double kGammaShape = 1.5;

Dataset poisson_world(std::size_t n, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0x706F6973ULL));
    std::vector<FrequencyRecord> records;
    records.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        FrequencyRecord r;
        r.exposure =
            rng.uniform_double() < kFullYearShare ? 1.0 : rng.uniform_double(kExposureMin, 1.0);
        const double rate = kMeanRate * std::exp(kRateSigma * rng.normal() -
                                                 0.5 * kRateSigma * kRateSigma);
        r.prediction = rate;
        r.claim_count = rng.poisson(r.exposure * rate);
        records.push_back(r);
    }
    Dataset dataset;
    dataset.kind = DatasetKind::Frequency;
    dataset.records = std::move(records);
    dataset.input_rows = n;
    return dataset;
}

Dataset gamma_world(std::size_t n, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0x67616D6DULL));
    std::vector<SeverityRecord> records;
    records.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        SeverityRecord r;
        const double mean = std::exp(kLogMeanClaim + kClaimSigma * rng.normal());
        r.prediction = mean;
        r.claim_size = std::max(1e-6, rng.gamma(kGammaShape, mean / kGammaShape));
        records.push_back(r);
    }
    Dataset dataset;
    dataset.kind = DatasetKind::Severity;
    dataset.records = std::move(records);
    dataset.input_rows = n;
    return dataset;
}

// Claim counts cycle 0/1/2 and predictions rise with the count, so every
// contrast separates perfectly and exact C = 1.
Dataset separable(std::size_t n, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0x73657061ULL));
    std::vector<FrequencyRecord> records;
    records.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        FrequencyRecord r;
        r.claim_count = static_cast<std::uint32_t>(i % 3);
        r.exposure = 1.0;
        r.prediction = 0.1 + 0.2 * static_cast<double>(r.claim_count) + 0.09 * rng.uniform_double();
        records.push_back(r);
    }
    Dataset dataset;
    dataset.kind = DatasetKind::Frequency;
    dataset.records = std::move(records);
    dataset.input_rows = n;
    return dataset;
}

Dataset degenerate_ties(std::size_t n, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0x74696573ULL));
    std::vector<FrequencyRecord> records;
    records.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        FrequencyRecord r;
        r.claim_count = static_cast<std::uint32_t>(i % 3);
        r.exposure = rng.uniform_double(kExposureMin, 1.0);
        r.prediction = 0.25;
        records.push_back(r);
    }
    Dataset dataset;
    dataset.kind = DatasetKind::Frequency;
    dataset.records = std::move(records);
    dataset.input_rows = n;
    return dataset;
}

}  // namespace

std::string to_string(Scenario scenario) {
    switch (scenario) {
        case Scenario::PoissonWorld:
            return "poisson-world";
        case Scenario::GammaWorld:
            return "gamma-world";
        case Scenario::Separable:
            return "separable";
        case Scenario::DegenerateTies:
            return "degenerate-ties";
    }
    return "?";
}

std::optional<Scenario> parse_scenario(const std::string& text) {
    if (text == "poisson-world") return Scenario::PoissonWorld;
    if (text == "gamma-world") return Scenario::GammaWorld;
    if (text == "separable") return Scenario::Separable;
    if (text == "degenerate-ties") return Scenario::DegenerateTies;
    return std::nullopt;
}

Dataset generate_synthetic(std::size_t n, Scenario scenario, std::uint64_t seed) {
    switch (scenario) {
        case Scenario::PoissonWorld:
            return poisson_world(n, seed);
        case Scenario::GammaWorld:
            return gamma_world(n, seed);
        case Scenario::Separable:
            return separable(n, seed);
        case Scenario::DegenerateTies:
            return degenerate_ties(n, seed);
    }
    throw Error("unknown scenario");
}

}  // namespace concord
