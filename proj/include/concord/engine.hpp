// Estimator selection: every global concordance can be computed exactly, by
// the sampling estimator, or by the clustered approximation.

#pragma once

#include <span>
#include <variant>

#include "concord/kmeans.hpp"
#include "concord/sampling.hpp"
#include "concord/types.hpp"

namespace concord {

struct ExactEngine {};

struct SampledEngine {
    SamplingConfig config;
};

struct ClusteredEngine {
    KMeansConfig config;
};

using Engine = std::variant<ExactEngine, SampledEngine, ClusteredEngine>;

// Dispatch to the chosen estimator. The clustered engine requires the
// two-group structure of the frequency definitions and throws
// UnsupportedEngine for severity specs.
ConcordanceEstimate estimate_concordance(std::span<const FrequencyRecord> records,
                                         const FrequencySpec& spec, const Engine& engine);
ConcordanceEstimate estimate_concordance(std::span<const SeverityRecord> records,
                                         const SeveritySpec& spec, const Engine& engine);

// Copy of the engine with its seed replaced by a derived per-unit seed;
// exact engines pass through unchanged.
Engine with_derived_seed(const Engine& engine, std::uint64_t unit);

}  // namespace concord
