#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace somkit {

/// An in-memory matrix of samples. `labels`, when non-empty, aligns 1:1 with
/// `rows` and never takes part in any numeric computation. `column_names` is
/// empty when the source had no header.
struct Dataset {
    std::vector<std::vector<double>> rows;
    std::vector<std::string> labels;
    std::vector<std::string> column_names;

    std::size_t size() const { return rows.size(); }
    std::size_t dim() const { return rows.empty() ? 0 : rows.front().size(); }
    bool has_labels() const { return !labels.empty(); }
};

struct CsvOptions {
    bool has_header = false;
    /// Column to extract as labels: a header name, or a 0-based column index
    /// given as an integer string. Empty means no label column.
    std::string label_column;
    char delimiter = ',';
};

/// Parse a CSV of finite numbers ('.' decimal point, no locale). Errors name
/// the offending 1-based row and column. Quoted fields are not supported.
Dataset load_csv(const std::filesystem::path& path, const CsvOptions& options = {});

struct FeatureSummary {
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    double stddev = 0.0;  // population (divide by N)
};

/// Per-feature summary statistics. Throws DataError on an empty dataset.
std::vector<FeatureSummary> summarize(const Dataset& ds);

}  // namespace somkit
