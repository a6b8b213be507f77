#include "concord/engine.hpp"

#include "concord/exact.hpp"
#include "concord/rng.hpp"

namespace concord {

ConcordanceEstimate estimate_concordance(std::span<const FrequencyRecord> records,
                                         const FrequencySpec& spec, const Engine& engine) {
    return std::visit(
        [&](const auto& e) -> ConcordanceEstimate {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, ExactEngine>)
                return exact_concordance(records, spec);
            else if constexpr (std::is_same_v<T, SampledEngine>)
                return sampled_concordance(records, spec, e.config);
            else
                return clustered_concordance(records, spec, e.config);
        },
        engine);
}

ConcordanceEstimate estimate_concordance(std::span<const SeverityRecord> records,
                                         const SeveritySpec& spec, const Engine& engine) {
    return std::visit(
        [&](const auto& e) -> ConcordanceEstimate {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, ExactEngine>)
                return exact_concordance(records, spec);
            else if constexpr (std::is_same_v<T, SampledEngine>)
                return sampled_concordance(records, spec, e.config);
            else
                throw UnsupportedEngine(
                    "the clustered engine needs the two-group structure of the frequency "
                    "definitions; severity pairs are formed by claim-size ordering, not group "
                    "membership");
        },
        engine);
}

Engine with_derived_seed(const Engine& engine, std::uint64_t unit) {
    Engine derived = engine;
    if (auto* sampled = std::get_if<SampledEngine>(&derived))
        sampled->config.seed = derive_seed(sampled->config.seed, unit);
    else if (auto* clustered = std::get_if<ClusteredEngine>(&derived))
        clustered->config.seed = derive_seed(clustered->config.seed, unit);
    return derived;
}

}  // namespace concord
