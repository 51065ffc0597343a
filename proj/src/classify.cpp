#include "somkit/classify.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "somkit/detail/format.hpp"
#include "somkit/errors.hpp"
#include "somkit/normalize.hpp"

namespace somkit {

using detail::format_double;

Assignments classify(const SomModel& model, const Dataset& ds) {
    if (ds.rows.empty()) {
        throw DataError("classify: empty dataset");
    }
    if (ds.dim() != model.dim()) {
        throw DataError("classify: dataset dimension " + std::to_string(ds.dim()) +
                        " does not match model dimension " + std::to_string(model.dim()));
    }

    Assignments out;
    out.side = model.side();
    out.activation_counts.assign(model.side() * model.side(), 0);
    out.items.reserve(ds.size());
    for (std::size_t i = 0; i < ds.rows.size(); ++i) {
        const auto normalized = normalize_vector(ds.rows[i], model.normalization());
        const BmuResult bmu = find_bmu(normalized, model.weights());
        out.items.push_back({i, bmu.position, bmu.distance,
                             ds.has_labels() ? ds.labels[i] : std::string{}});
        ++out.activation_counts[to_flat_index(bmu.position, out.side)];
    }
    return out;
}

std::map<std::uint64_t, std::size_t> activation_histogram(const Assignments& a) {
    std::map<std::uint64_t, std::size_t> hist;
    for (const std::uint64_t count : a.activation_counts) {
        ++hist[count];
    }
    return hist;
}

void write_assignments_csv(const Assignments& a, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw DataError("cannot open '" + path.string() + "' for writing");
    }
    out << "sample_index,row,col,flat_index,bmu_distance,label\n";
    for (const auto& item : a.items) {
        out << item.sample_index << ',' << item.position.row << ',' << item.position.col << ','
            << to_flat_index(item.position, a.side) << ',' << format_double(item.bmu_distance)
            << ',' << item.label << '\n';
    }
    if (!out.flush()) {
        throw DataError("failed writing '" + path.string() + "'");
    }
}

namespace {

std::uint64_t parse_u64_field(const std::string& field, std::size_t line_no, const char* name) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw DataError("assignments: bad " + std::string(name) + " '" + field + "' at row " +
                        std::to_string(line_no));
    }
    return value;
}

}  // namespace

Assignments read_assignments_csv(const std::filesystem::path& path, std::size_t side) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open '" + path.string() + "' for reading");
    }
    Assignments out;
    out.side = side;
    out.activation_counts.assign(side * side, 0);

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        ++line_no;
        if (line_no == 1) {
            if (line != "sample_index,row,col,flat_index,bmu_distance,label") {
                throw DataError("assignments: unexpected header in '" + path.string() + "'");
            }
            continue;
        }
        if (line.empty()) continue;

        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t pos = line.find(',', start);
            if (pos == std::string::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, pos - start));
            start = pos + 1;
        }
        if (fields.size() != 6) {
            throw DataError("assignments: row " + std::to_string(line_no) + " has " +
                            std::to_string(fields.size()) + " fields, expected 6");
        }

        SampleAssignment item;
        item.sample_index = parse_u64_field(fields[0], line_no, "sample_index");
        item.position.row = parse_u64_field(fields[1], line_no, "row");
        item.position.col = parse_u64_field(fields[2], line_no, "col");
        const std::uint64_t flat = parse_u64_field(fields[3], line_no, "flat_index");
        double distance = 0.0;
        const auto [ptr, ec] =
            std::from_chars(fields[4].data(), fields[4].data() + fields[4].size(), distance);
        if (ec != std::errc{} || ptr != fields[4].data() + fields[4].size() ||
            !std::isfinite(distance) || distance < 0.0) {
            throw DataError("assignments: bad bmu_distance '" + fields[4] + "' at row " +
                            std::to_string(line_no));
        }
        item.bmu_distance = distance;
        item.label = fields[5];

        if (item.position.row >= side || item.position.col >= side) {
            throw DataError("assignments: position (" + std::to_string(item.position.row) +
                            ", " + std::to_string(item.position.col) + ") at row " +
                            std::to_string(line_no) + " is outside a side-" +
                            std::to_string(side) + " map");
        }
        if (flat != to_flat_index(item.position, side)) {
            throw DataError("assignments: flat_index " + std::to_string(flat) + " at row " +
                            std::to_string(line_no) + " does not match (row, col)");
        }
        ++out.activation_counts[flat];
        out.items.push_back(std::move(item));
    }
    if (out.items.empty()) {
        throw DataError("assignments: '" + path.string() + "' contains no rows");
    }
    return out;
}

}  // namespace somkit
