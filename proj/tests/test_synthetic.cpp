#include <doctest.h>

#include "concord/exact.hpp"
#include "concord/sampling.hpp"
#include "concord/synthetic.hpp"

using namespace concord;

TEST_CASE("separable scenario has exact concordance 1 for every contrast") {
    const Dataset dataset = generate_synthetic(10, Scenario::Separable, 1);
    REQUIRE(dataset.kind == DatasetKind::Frequency);
    for (auto contrast : {FrequencyContrast::ZeroVsOnePlus, FrequencyContrast::ZeroVsTwoPlus,
                          FrequencyContrast::OneVsTwoPlus}) {
        const auto est = exact_concordance(dataset.frequency(), {contrast, 0.05});
        CHECK(est.value == 1.0);
    }
}

TEST_CASE("degenerate ties defeat every estimator") {
    const Dataset dataset = generate_synthetic(10, Scenario::DegenerateTies, 1);
    const FrequencySpec spec{FrequencyContrast::ZeroVsOnePlus, 1.0};
    CHECK_THROWS_AS(exact_concordance(dataset.frequency(), spec), NoComparablePairs);
    CHECK_THROWS_AS(
        estimate_from_tally(sample_tally(dataset.frequency(), spec, {10, 1, 0.05})),
        NoComparablePairs);
}

TEST_CASE("poisson world reproduces the calibrated outcome mix at scale") {
    const Dataset dataset = generate_synthetic(160000, Scenario::PoissonWorld, 7);
    std::size_t zero = 0, one = 0, two_plus = 0;
    for (const auto& r : dataset.frequency()) {
        if (r.claim_count == 0)
            ++zero;
        else if (r.claim_count == 1)
            ++one;
        else
            ++two_plus;
    }
    const double n = static_cast<double>(dataset.size());
    CHECK(std::abs(zero / n - 0.911) <= 0.02);
    CHECK(std::abs(one / n - 0.0805) <= 0.02);
    CHECK(std::abs(two_plus / n - 0.0085) <= 0.02);
}

TEST_CASE("generation is deterministic under the seed") {
    const Dataset a = generate_synthetic(500, Scenario::PoissonWorld, 42);
    const Dataset b = generate_synthetic(500, Scenario::PoissonWorld, 42);
    const Dataset c = generate_synthetic(500, Scenario::PoissonWorld, 43);
    CHECK(a.digest() == b.digest());
    CHECK(a.digest() != c.digest());
}

TEST_CASE("gamma world produces valid severity records") {
    const Dataset dataset = generate_synthetic(1000, Scenario::GammaWorld, 3);
    REQUIRE(dataset.kind == DatasetKind::Severity);
    for (const auto& r : dataset.severity()) CHECK(validate(r).empty());
}

TEST_CASE("poisson world records satisfy the invariants") {
    const Dataset dataset = generate_synthetic(1000, Scenario::PoissonWorld, 5);
    for (const auto& r : dataset.frequency()) CHECK(validate(r).empty());
}

TEST_CASE("scenario names round-trip") {
    for (auto s : {Scenario::PoissonWorld, Scenario::GammaWorld, Scenario::Separable,
                   Scenario::DegenerateTies})
        CHECK(parse_scenario(to_string(s)) == s);
    CHECK_FALSE(parse_scenario("weibull-world").has_value());
}
