#include "concord/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "concord/math.hpp"

namespace concord {

std::string to_string(DatasetKind kind) {
    return kind == DatasetKind::Frequency ? "frequency" : "severity";
}

std::string validate(const FrequencyRecord& record) {
    if (!(record.exposure > 0.0)) return "exposure must be > 0";
    if (!(record.exposure <= 1.0)) return "exposure must be <= 1";
    if (!std::isfinite(record.prediction) || record.prediction <= 0.0)
        return "prediction must be finite and > 0";
    return {};
}

std::string validate(const SeverityRecord& record) {
    if (!std::isfinite(record.claim_size) || record.claim_size <= 0.0)
        return "claim_size must be finite and > 0";
    if (!std::isfinite(record.prediction) || record.prediction <= 0.0)
        return "prediction must be finite and > 0";
    return {};
}

std::uint64_t Dataset::digest() const {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    h = fnv1a64_append(h, static_cast<std::uint64_t>(kind));
    if (kind == DatasetKind::Frequency) {
        for (const FrequencyRecord& r : frequency()) {
            h = fnv1a64_append(h, static_cast<std::uint64_t>(r.claim_count));
            h = fnv1a64_append(h, r.exposure);
            h = fnv1a64_append(h, r.prediction);
        }
    } else {
        for (const SeverityRecord& r : severity()) {
            h = fnv1a64_append(h, r.claim_size);
            h = fnv1a64_append(h, r.prediction);
        }
    }
    return h;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        // trim surrounding whitespace
        const auto begin = field.find_first_not_of(" \t\r");
        const auto end = field.find_last_not_of(" \t\r");
        fields.push_back(begin == std::string::npos ? "" : field.substr(begin, end - begin + 1));
    }
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

bool parse_double(const std::string& text, double& out) {
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

bool parse_count(const std::string& text, std::uint32_t& out) {
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

std::size_t find_column(const std::vector<std::string>& header, const std::string& name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw MissingColumn(name);
    return static_cast<std::size_t>(it - header.begin());
}

}  // namespace

Dataset ingest_csv(const std::string& path, DatasetKind kind, const ColumnMap& columns) {
    std::ifstream input(path);
    if (!input) throw FileNotFound(path);

    std::string line;
    if (!std::getline(input, line)) throw MissingColumn("(empty file, no header row)");
    const std::vector<std::string> header = split_csv_line(line);

    Dataset dataset;
    dataset.kind = kind;
    dataset.source_path = path;

    std::size_t col_count = 0, col_exposure = 0, col_prediction = 0, col_size = 0;
    if (kind == DatasetKind::Frequency) {
        col_count = find_column(header, columns.claim_count);
        col_exposure = find_column(header, columns.exposure);
        col_prediction = find_column(header, columns.prediction);
        dataset.records = std::vector<FrequencyRecord>{};
    } else {
        col_size = find_column(header, columns.claim_size);
        col_prediction = find_column(header, columns.prediction);
        dataset.records = std::vector<SeverityRecord>{};
    }
    const std::size_t needed =
        1 + std::max({col_count, col_exposure, col_prediction, col_size});

    while (std::getline(input, line)) {
        if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
        ++dataset.input_rows;
        const std::size_t row = dataset.input_rows;
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() < needed) {
            dataset.rejected.push_back({row, "too few fields"});
            continue;
        }

        if (kind == DatasetKind::Frequency) {
            FrequencyRecord record;
            if (!parse_count(fields[col_count], record.claim_count)) {
                dataset.rejected.push_back({row, "claim_count must be a non-negative integer"});
                continue;
            }
            if (!parse_double(fields[col_exposure], record.exposure) ||
                !parse_double(fields[col_prediction], record.prediction)) {
                dataset.rejected.push_back({row, "numeric parse failure"});
                continue;
            }
            if (std::string reason = validate(record); !reason.empty()) {
                dataset.rejected.push_back({row, std::move(reason)});
                continue;
            }
            std::get<std::vector<FrequencyRecord>>(dataset.records).push_back(record);
        } else {
            SeverityRecord record;
            if (!parse_double(fields[col_size], record.claim_size) ||
                !parse_double(fields[col_prediction], record.prediction)) {
                dataset.rejected.push_back({row, "numeric parse failure"});
                continue;
            }
            if (std::string reason = validate(record); !reason.empty()) {
                dataset.rejected.push_back({row, std::move(reason)});
                continue;
            }
            std::get<std::vector<SeverityRecord>>(dataset.records).push_back(record);
        }
    }

    if (dataset.input_rows > 0 && dataset.size() == 0) throw AllRowsRejected();
    return dataset;
}

void write_csv(const Dataset& dataset, const std::string& path, const ColumnMap& columns) {
    std::ofstream out(path);
    if (!out) throw IngestError("cannot open file for writing: " + path);

    if (dataset.kind == DatasetKind::Frequency) {
        out << columns.claim_count << ',' << columns.exposure << ',' << columns.prediction << '\n';
        for (const FrequencyRecord& r : dataset.frequency())
            out << r.claim_count << ',' << format_double(r.exposure) << ','
                << format_double(r.prediction) << '\n';
    } else {
        out << columns.claim_size << ',' << columns.prediction << '\n';
        for (const SeverityRecord& r : dataset.severity())
            out << format_double(r.claim_size) << ',' << format_double(r.prediction) << '\n';
    }
}

}  // namespace concord
