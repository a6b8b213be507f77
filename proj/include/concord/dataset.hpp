// Dataset ingestion and serialization. CSV in, validated records out; rows
// that violate the record invariants are rejected and counted, not fatal.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "concord/types.hpp"

namespace concord {

enum class DatasetKind { Frequency, Severity };

std::string to_string(DatasetKind kind);

// Column names expected in the header row.
struct ColumnMap {
    std::string claim_count = "claim_count";
    std::string exposure = "exposure";
    std::string prediction = "prediction";
    std::string claim_size = "claim_size";
};

struct RejectedRow {
    std::size_t row_number = 0;  // 1-based data row index
    std::string reason;
};

struct Dataset {
    DatasetKind kind = DatasetKind::Frequency;
    std::variant<std::vector<FrequencyRecord>, std::vector<SeverityRecord>> records =
        std::vector<FrequencyRecord>{};
    std::string source_path;      // empty for synthetic data
    std::size_t input_rows = 0;   // data rows seen in the source
    std::vector<RejectedRow> rejected;

    const std::vector<FrequencyRecord>& frequency() const {
        return std::get<std::vector<FrequencyRecord>>(records);
    }
    const std::vector<SeverityRecord>& severity() const {
        return std::get<std::vector<SeverityRecord>>(records);
    }
    std::size_t size() const {
        return kind == DatasetKind::Frequency ? frequency().size() : severity().size();
    }

    // Content digest over the accepted records' bit patterns.
    std::uint64_t digest() const;
};

// Validation used at ingestion; returns an empty string when the record is
// acceptable, otherwise the rejection reason.
std::string validate(const FrequencyRecord& record);
std::string validate(const SeverityRecord& record);

// Parses a CSV file with a header row. Frequency needs claim_count,
// exposure, prediction; severity needs claim_size, prediction. Extra
// columns are ignored. Throws FileNotFound, MissingColumn, AllRowsRejected.
Dataset ingest_csv(const std::string& path, DatasetKind kind, const ColumnMap& columns = {});

// Writes a dataset back out in the same column layout with full round-trip
// precision.
void write_csv(const Dataset& dataset, const std::string& path, const ColumnMap& columns = {});

}  // namespace concord
