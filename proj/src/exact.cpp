#include "concord/exact.hpp"

#include <cmath>
#include <vector>

#include "concord/math.hpp"
#include "concord/pair_rules.hpp"
#include "concord/parallel.hpp"

namespace concord {

namespace {

ConcordanceEstimate finish(PairCounts counts, std::map<std::string, std::string> meta) {
    if (counts.comparable == 0) throw NoComparablePairs();
    ConcordanceEstimate est;
    est.value = static_cast<double>(counts.concordant) / static_cast<double>(counts.comparable);
    est.method = Method::Exact;
    est.counts = counts;
    est.meta = std::move(meta);
    return est;
}

PairCounts merge_counts(PairCounts lhs, PairCounts rhs) {
    lhs.merge(rhs);
    return lhs;
}

}  // namespace

PairCounts exact_pair_counts(std::span<const FrequencyRecord> records, const FrequencySpec& spec) {
    std::vector<std::uint32_t> group_a, group_b;
    for (std::uint32_t i = 0; i < records.size(); ++i) {
        if (in_group_a(spec.contrast, records[i].claim_count)) group_a.push_back(i);
        if (in_group_b(spec.contrast, records[i].claim_count)) group_b.push_back(i);
    }

    return parallel_reduce(
        group_a.size(), PairCounts{},
        [&](std::size_t begin, std::size_t end) {
            PairCounts local;
            for (std::size_t ia = begin; ia < end; ++ia) {
                const FrequencyRecord& a = records[group_a[ia]];
                for (std::uint32_t ib : group_b) {
                    const FrequencyRecord& b = records[ib];
                    if (std::abs(a.exposure - b.exposure) > spec.exposure_tol) continue;
                    local.add(order_predictions(a.prediction, b.prediction));
                }
            }
            return local;
        },
        merge_counts);
}

PairCounts exact_pair_counts(std::span<const SeverityRecord> records, const SeveritySpec& spec) {
    const std::size_t n = records.size();
    if (n < 2) return {};
    return parallel_reduce(
        n - 1, PairCounts{},
        [&](std::size_t begin, std::size_t end) {
            PairCounts local;
            for (std::size_t i = begin; i < end; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    const SeverityRecord& x = records[i];
                    const SeverityRecord& y = records[j];
                    const bool x_smaller = x.claim_size < y.claim_size;
                    const SeverityRecord& a = x_smaller ? x : y;
                    const SeverityRecord& b = x_smaller ? y : x;
                    local.add(classify_severity_pair(a, b, spec.min_gap));
                }
            }
            return local;
        },
        merge_counts);
}

ConcordanceEstimate exact_concordance(std::span<const FrequencyRecord> records,
                                      const FrequencySpec& spec) {
    PairCounts counts = exact_pair_counts(records, spec);
    return finish(counts, {{"contrast", to_string(spec.contrast)},
                           {"exposure_tol", format_double(spec.exposure_tol)}});
}

ConcordanceEstimate exact_concordance(std::span<const SeverityRecord> records,
                                      const SeveritySpec& spec) {
    PairCounts counts = exact_pair_counts(records, spec);
    return finish(counts, {{"v", format_double(spec.min_gap)}});
}

}  // namespace concord
