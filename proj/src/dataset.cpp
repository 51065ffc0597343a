#include "somkit/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "somkit/errors.hpp"

namespace somkit {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string> split_fields(std::string_view line, char delimiter) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delimiter, start);
        if (pos == std::string_view::npos) {
            fields.emplace_back(trim(line.substr(start)));
            break;
        }
        fields.emplace_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
    return fields;
}

/// Strict numeric parse: the whole token must be consumed and the value finite.
bool parse_number(std::string_view token, double& out) {
    if (token.empty()) return false;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (*first == '+') ++first;  // std::from_chars rejects a leading '+'
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last && std::isfinite(out);
}

/// Resolve the label column against the header (by name) or as a 0-based index.
std::size_t resolve_label_column(const std::string& label_column,
                                 const std::vector<std::string>& header,
                                 std::size_t field_count, bool has_header) {
    if (has_header) {
        const auto it = std::find(header.begin(), header.end(), label_column);
        if (it != header.end()) {
            return static_cast<std::size_t>(it - header.begin());
        }
    }
    std::size_t index = 0;
    const auto [ptr, ec] =
        std::from_chars(label_column.data(), label_column.data() + label_column.size(), index);
    if (ec != std::errc{} || ptr != label_column.data() + label_column.size()) {
        if (has_header) {
            throw DataError("label column '" + label_column + "' not found in header");
        }
        throw DataError("label column '" + label_column +
                        "' must be a 0-based column index when the file has no header");
    }
    if (index >= field_count) {
        throw DataError("label column index " + std::to_string(index) +
                        " out of range for " + std::to_string(field_count) + " columns");
    }
    return index;
}

}  // namespace

Dataset load_csv(const std::filesystem::path& path, const CsvOptions& options) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string content = buf.str();

    Dataset ds;
    std::size_t label_index = std::string::npos;
    std::size_t field_count = 0;

    std::size_t line_no = 0;
    std::size_t start = 0;
    bool saw_header = false;
    while (start <= content.size()) {
        std::size_t end = content.find('\n', start);
        if (end == std::string::npos) end = content.size();
        const std::string_view line(content.data() + start, end - start);
        start = end + 1;
        if (trim(line).empty()) continue;
        ++line_no;

        auto fields = split_fields(line, options.delimiter);
        if (options.has_header && !saw_header) {
            saw_header = true;
            ds.column_names.assign(fields.begin(), fields.end());
            continue;
        }

        if (field_count == 0) {
            field_count = fields.size();
            if (!ds.column_names.empty() && ds.column_names.size() != field_count) {
                throw DataError("header has " + std::to_string(ds.column_names.size()) +
                                " fields but row " + std::to_string(line_no) + " has " +
                                std::to_string(field_count));
            }
            if (!options.label_column.empty()) {
                label_index = resolve_label_column(options.label_column, ds.column_names,
                                                   field_count, options.has_header);
            }
        } else if (fields.size() != field_count) {
            throw DataError("ragged row " + std::to_string(line_no) + ": expected " +
                            std::to_string(field_count) + " fields, found " +
                            std::to_string(fields.size()));
        }

        std::vector<double> row;
        row.reserve(field_count - (label_index != std::string::npos ? 1 : 0));
        for (std::size_t c = 0; c < fields.size(); ++c) {
            if (c == label_index) {
                ds.labels.push_back(fields[c]);
                continue;
            }
            double value = 0.0;
            if (!parse_number(fields[c], value)) {
                throw DataError("non-numeric value '" + fields[c] + "' at row " +
                                std::to_string(line_no) + ", column " + std::to_string(c + 1));
            }
            row.push_back(value);
        }
        ds.rows.push_back(std::move(row));
    }

    if (ds.rows.empty()) {
        throw DataError("'" + path.string() + "' contains no data rows");
    }
    if (label_index != std::string::npos && !ds.column_names.empty()) {
        ds.column_names.erase(ds.column_names.begin() + static_cast<std::ptrdiff_t>(label_index));
    }
    if (ds.dim() == 0) {
        throw DataError("'" + path.string() + "' has no feature columns");
    }
    return ds;
}

std::vector<FeatureSummary> summarize(const Dataset& ds) {
    if (ds.rows.empty()) {
        throw DataError("summarize: empty dataset");
    }
    const std::size_t n = ds.dim();
    const double count = static_cast<double>(ds.size());
    std::vector<FeatureSummary> out(n);

    for (std::size_t c = 0; c < n; ++c) {
        double lo = ds.rows[0][c];
        double hi = ds.rows[0][c];
        double sum = 0.0;
        for (const auto& row : ds.rows) {
            lo = std::min(lo, row[c]);
            hi = std::max(hi, row[c]);
            sum += row[c];
        }
        const double mean = sum / count;
        double sq = 0.0;
        for (const auto& row : ds.rows) {
            const double d = row[c] - mean;
            sq += d * d;
        }
        out[c] = {lo, hi, mean, std::sqrt(sq / count)};
    }
    return out;
}

}  // namespace somkit
