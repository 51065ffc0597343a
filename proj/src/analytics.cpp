#include "somkit/analytics.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

#include "somkit/errors.hpp"
#include "somkit/normalize.hpp"

namespace somkit {

namespace {

std::vector<std::vector<double>> normalized_rows(const SomModel& model, const Dataset& ds) {
    if (ds.rows.empty()) {
        throw DataError("empty dataset");
    }
    if (ds.dim() != model.dim()) {
        throw DataError("dataset dimension " + std::to_string(ds.dim()) +
                        " does not match model dimension " + std::to_string(model.dim()));
    }
    std::vector<std::vector<double>> rows;
    rows.reserve(ds.size());
    for (const auto& row : ds.rows) {
        rows.push_back(normalize_vector(row, model.normalization()));
    }
    return rows;
}

}  // namespace

double quantization_error(const SomModel& model, const Dataset& ds) {
    return mean_bmu_distance(model.weights(), normalized_rows(model, ds));
}

double topographic_error(const SomModel& model, const Dataset& ds) {
    if (model.weights().neuron_count() < 2) {
        throw DataError("topographic_error: needs at least 2 neurons");
    }
    const auto rows = normalized_rows(model, ds);
    std::size_t violations = 0;
    for (const auto& row : rows) {
        const auto [first, second] = find_two_bmus(row, model.weights());
        if (!grid_adjacent(first, second)) {
            ++violations;
        }
    }
    return static_cast<double>(violations) / static_cast<double>(rows.size());
}

double activation_density(const Assignments& a) {
    if (a.activation_counts.empty()) return 0.0;
    std::size_t active = 0;
    for (const auto count : a.activation_counts) {
        if (count >= 1) ++active;
    }
    return static_cast<double>(active) / static_cast<double>(a.activation_counts.size());
}

std::vector<double> u_matrix(const SomModel& model) {
    const WeightMatrix& wm = model.weights();
    const std::size_t side = wm.side();
    std::vector<double> out(wm.neuron_count(), 0.0);
    for (std::size_t j = 0; j < wm.neuron_count(); ++j) {
        const GridPosition p = from_flat_index(j, side);
        double acc = 0.0;
        std::size_t neighbours = 0;
        for (int dr = -1; dr <= 1; ++dr) {
            for (int dc = -1; dc <= 1; ++dc) {
                if (dr == 0 && dc == 0) continue;
                const auto r = static_cast<std::ptrdiff_t>(p.row) + dr;
                const auto c = static_cast<std::ptrdiff_t>(p.col) + dc;
                if (r < 0 || c < 0 || r >= static_cast<std::ptrdiff_t>(side) ||
                    c >= static_cast<std::ptrdiff_t>(side)) {
                    continue;
                }
                const GridPosition q{static_cast<std::size_t>(r), static_cast<std::size_t>(c)};
                acc += euclidean_distance(wm.at(p), wm.at(q));
                ++neighbours;
            }
        }
        out[j] = neighbours == 0 ? 0.0 : acc / static_cast<double>(neighbours);
    }
    return out;
}

MapReport build_report(const SomModel& model, const Assignments& a, const Dataset& ds) {
    if (a.sample_count() != ds.size()) {
        throw DataError("build_report: assignments cover " + std::to_string(a.sample_count()) +
                        " samples but the dataset has " + std::to_string(ds.size()));
    }
    if (a.side != model.side()) {
        throw DataError("build_report: assignments are for a side-" + std::to_string(a.side) +
                        " map, model side is " + std::to_string(model.side()));
    }

    MapReport report;
    report.side = model.side();
    report.quantization_error = quantization_error(model, ds);
    report.topographic_error = topographic_error(model, ds);
    report.activation_density = activation_density(a);

    const std::size_t neurons = model.weights().neuron_count();
    std::vector<double> distance_sum(neurons, 0.0);
    std::vector<std::map<std::string, std::uint64_t>> label_counts(neurons);
    for (const auto& item : a.items) {
        const std::size_t flat = to_flat_index(item.position, a.side);
        distance_sum[flat] += item.bmu_distance;
        if (!item.label.empty()) {
            ++label_counts[flat][item.label];
        }
    }

    report.per_neuron.reserve(neurons);
    for (std::size_t j = 0; j < neurons; ++j) {
        NeuronReport nr;
        nr.position = from_flat_index(j, a.side);
        nr.activation_count = a.activation_counts[j];
        nr.mean_bmu_distance = nr.activation_count == 0
                                   ? 0.0
                                   : distance_sum[j] / static_cast<double>(nr.activation_count);
        std::vector<double> w(model.weights().row(j).begin(), model.weights().row(j).end());
        nr.weights = denormalize(w, model.normalization());
        if (!label_counts[j].empty()) {
            // std::map iterates labels in lexicographic order, so keeping a
            // strictly-greater comparison makes ties resolve to the smallest.
            auto best = label_counts[j].begin();
            for (auto it = label_counts[j].begin(); it != label_counts[j].end(); ++it) {
                if (it->second > best->second) best = it;
            }
            nr.majority_label = best->first;
            nr.purity = static_cast<double>(best->second) /
                        static_cast<double>(nr.activation_count);
        }
        report.per_neuron.push_back(std::move(nr));
    }
    return report;
}

std::string report_to_json(const MapReport& report) {
    nlohmann::ordered_json doc;
    doc["metrics"] = {{"quantization_error", report.quantization_error},
                      {"topographic_error", report.topographic_error},
                      {"activation_density", report.activation_density}};
    auto& per_neuron = doc["per_neuron"] = nlohmann::ordered_json::array();
    for (const auto& nr : report.per_neuron) {
        nlohmann::ordered_json entry;
        entry["row"] = nr.position.row;
        entry["col"] = nr.position.col;
        entry["flat_index"] = to_flat_index(nr.position, report.side);
        entry["activation_count"] = nr.activation_count;
        entry["mean_bmu_distance"] = nr.mean_bmu_distance;
        entry["weights"] = nr.weights;
        entry["majority_label"] =
            nr.majority_label ? nlohmann::ordered_json(*nr.majority_label) : nullptr;
        entry["purity"] = nr.purity ? nlohmann::ordered_json(*nr.purity) : nullptr;
        per_neuron.push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

std::string report_to_text(const MapReport& report) {
    std::ostringstream out;
    out << "quantization error : " << report.quantization_error << '\n'
        << "topographic error  : " << report.topographic_error << '\n'
        << "activation density : " << report.activation_density << '\n'
        << '\n'
        << std::left << std::setw(6) << "flat" << std::setw(10) << "(row,col)" << std::right
        << std::setw(8) << "count" << std::setw(14) << "mean dist" << "  " << std::left
        << std::setw(14) << "majority" << "purity" << '\n';
    std::size_t flat = 0;
    for (const auto& nr : report.per_neuron) {
        std::ostringstream pos;
        pos << '(' << nr.position.row << ',' << nr.position.col << ')';
        out << std::left << std::setw(6) << flat++ << std::setw(10) << pos.str() << std::right
            << std::setw(8) << nr.activation_count << std::setw(14) << std::setprecision(6)
            << nr.mean_bmu_distance << "  " << std::left << std::setw(14)
            << (nr.majority_label ? *nr.majority_label : std::string("-"));
        if (nr.purity) {
            out << std::setprecision(4) << *nr.purity;
        } else {
            out << '-';
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace somkit
