// Core domain types shared by every estimator: records, pair classification
// results, tallies, and the estimate envelope returned to callers.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace concord {

// One policy row of the frequency data set.
struct FrequencyRecord {
    std::uint32_t claim_count = 0;  // observed number of claims
    double exposure = 1.0;          // policy-years, in (0, 1]
    double prediction = 0.0;        // predicted claim frequency, > 0
};

// One claim row of the severity data set.
struct SeverityRecord {
    double claim_size = 0.0;  // observed claim cost, > 0
    double prediction = 0.0;  // predicted claim cost, > 0
};

// Which pair of claim-count groups a frequency concordance contrasts.
// Group A is the lower-count side, group B the higher-count side.
enum class FrequencyContrast {
    ZeroVsOnePlus,  // A: Y = 0, B: Y >= 1
    ZeroVsTwoPlus,  // A: Y = 0, B: Y >= 2
    OneVsTwoPlus,   // A: Y = 1, B: Y >= 2
};

std::string to_string(FrequencyContrast contrast);

// Parses "01+", "02+" or "12+". Returns nullopt on anything else.
std::optional<FrequencyContrast> parse_contrast(const std::string& text);

// Outcome of evaluating one ordered candidate pair (a = group A, b = group B).
enum class PairClass {
    NotComparable,
    Concordant,
    Discordant,
    TiedPrediction,
};

// Integer pair tallies. Prediction-tied pairs are counted in `tied` and
// excluded from `comparable`, so comparable == concordant + discordant.
struct PairCounts {
    std::uint64_t concordant = 0;
    std::uint64_t discordant = 0;
    std::uint64_t tied = 0;
    std::uint64_t comparable = 0;

    void add(PairClass cls) {
        switch (cls) {
            case PairClass::Concordant:
                ++concordant;
                ++comparable;
                break;
            case PairClass::Discordant:
                ++discordant;
                ++comparable;
                break;
            case PairClass::TiedPrediction:
                ++tied;
                break;
            case PairClass::NotComparable:
                break;
        }
    }

    void merge(const PairCounts& other) {
        concordant += other.concordant;
        discordant += other.discordant;
        tied += other.tied;
        comparable += other.comparable;
    }
};

// Centroid-comparison mass backing a clustered estimate. The concordant mass
// is already the estimate value; admissible_pairs counts the cross-group
// pairs the bins admit, which plays the role of a comparable-pair count.
struct ClusterMass {
    double concordant_mass = 0.0;
    std::uint64_t admissible_pairs = 0;
};

enum class Method { Exact, Sampled, Clustered };

std::string to_string(Method method);

struct ConfidenceInterval {
    double lower = 0.0;
    double upper = 1.0;
    double alpha = 0.05;
};

// Point estimate plus provenance. `meta` echoes every parameter that shaped
// the run so a report can be reproduced from it.
struct ConcordanceEstimate {
    double value = 0.0;
    Method method = Method::Exact;
    std::variant<PairCounts, ClusterMass> counts = PairCounts{};
    std::optional<ConfidenceInterval> ci;
    std::map<std::string, std::string> meta;

    std::uint64_t comparable_count() const {
        if (const auto* pc = std::get_if<PairCounts>(&counts)) return pc->comparable;
        return std::get<ClusterMass>(counts).admissible_pairs;
    }
};

// Admissibility predicate for a frequency concordance: the contrast plus the
// maximum absolute exposure gap between pair members.
struct FrequencySpec {
    FrequencyContrast contrast = FrequencyContrast::ZeroVsOnePlus;
    double exposure_tol = 0.05;
};

// Admissibility predicate for a severity concordance: the minimum claim-size
// gap v between pair members.
struct SeveritySpec {
    double min_gap = 0.0;
};

// One point of a (lambda, C(lambda)) or (v, C(v)) curve.
enum class CurvePointStatus { Ok, InsufficientPairs, NoComparablePairs };

struct CurvePoint {
    double x = 0.0;
    CurvePointStatus status = CurvePointStatus::Ok;
    std::optional<ConcordanceEstimate> estimate;
    std::uint64_t comparable_pairs = 0;
};

// ---------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoComparablePairs : Error {
    NoComparablePairs() : Error("no comparable pairs under the given definition") {}
    explicit NoComparablePairs(const std::string& what) : Error(what) {}
};

struct EmptyInput : Error {
    EmptyInput() : Error("input record sequence is empty") {}
};

struct EmptyGroup : Error {
    explicit EmptyGroup(const std::string& what) : Error(what) {}
};

struct DegenerateVariance : Error {
    DegenerateVariance() : Error("fewer than 2 observations with comparable pairs; variance undefined") {}
};

struct IngestError : Error {
    using Error::Error;
};

struct FileNotFound : IngestError {
    explicit FileNotFound(const std::string& path) : IngestError("cannot open file: " + path) {}
};

struct MissingColumn : IngestError {
    explicit MissingColumn(const std::string& column) : IngestError("missing required column: " + column) {}
};

struct AllRowsRejected : IngestError {
    AllRowsRejected() : IngestError("every data row failed validation") {}
};

struct UnsupportedEngine : Error {
    explicit UnsupportedEngine(const std::string& what) : Error(what) {}
};

}  // namespace concord
