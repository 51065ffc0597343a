#include "somkit/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>

#include <json.hpp>

#include "somkit/errors.hpp"

namespace somkit {

using nlohmann::ordered_json;

namespace {

void require_finite(double v, const std::string& field) {
    if (!std::isfinite(v)) {
        throw DataError("model document: non-finite number in '" + field + "'");
    }
}

const ordered_json& require_field(const ordered_json& obj, const char* name) {
    const auto it = obj.find(name);
    if (it == obj.end()) {
        throw DataError("model document: missing field '" + std::string(name) + "'");
    }
    return *it;
}

std::uint64_t read_uint(const ordered_json& obj, const char* name) {
    const auto& v = require_field(obj, name);
    if (!v.is_number_unsigned()) {
        throw DataError("model document: '" + std::string(name) +
                        "' must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

double read_double(const ordered_json& obj, const char* name) {
    const auto& v = require_field(obj, name);
    if (!v.is_number()) {
        throw DataError("model document: '" + std::string(name) + "' must be a number");
    }
    const double d = v.get<double>();
    require_finite(d, name);
    return d;
}

std::vector<double> read_double_array(const ordered_json& value, std::size_t expected,
                                      const std::string& field) {
    if (!value.is_array() || value.size() != expected) {
        throw DataError("model document: '" + field + "' must be an array of " +
                        std::to_string(expected) + " numbers");
    }
    std::vector<double> out;
    out.reserve(expected);
    for (const auto& v : value) {
        if (!v.is_number()) {
            throw DataError("model document: '" + field + "' must contain only numbers");
        }
        const double d = v.get<double>();
        require_finite(d, field);
        out.push_back(d);
    }
    return out;
}

}  // namespace

std::string model_to_json(const SomModel& model) {
    for (const double v : model.weights().data()) {
        require_finite(v, "weights");
    }
    for (std::size_t c = 0; c < model.normalization().dim(); ++c) {
        require_finite(model.normalization().mins[c], "normalization.mins");
        require_finite(model.normalization().maxs[c], "normalization.maxs");
    }
    const TrainingConfig& cfg = model.meta().config;
    require_finite(cfg.initial_learning_rate, "training_meta.initial_learning_rate");
    require_finite(cfg.initial_radius, "training_meta.initial_radius");

    ordered_json doc;
    doc["format_version"] = kModelFormatVersion;
    doc["side"] = model.side();
    doc["dim"] = model.dim();
    auto& weights = doc["weights"] = ordered_json::array();
    for (std::size_t j = 0; j < model.weights().neuron_count(); ++j) {
        const auto row = model.weights().row(j);
        weights.push_back(std::vector<double>(row.begin(), row.end()));
    }
    doc["normalization"] = {{"mins", model.normalization().mins},
                            {"maxs", model.normalization().maxs},
                            {"degenerate_flags", model.normalization().degenerate}};
    doc["training_meta"] = {{"presentations", cfg.presentations},
                            {"initial_learning_rate", cfg.initial_learning_rate},
                            {"initial_radius", cfg.initial_radius},
                            {"seed", cfg.seed},
                            {"sampling", to_string(cfg.sampling)}};
    return doc.dump() + "\n";
}

SomModel model_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError("model document: malformed JSON: " + std::string(e.what()));
    }
    if (!doc.is_object()) {
        throw DataError("model document: top level must be an object");
    }

    const std::uint64_t version = read_uint(doc, "format_version");
    if (version != static_cast<std::uint64_t>(kModelFormatVersion)) {
        throw DataError("model document: unsupported format_version " +
                        std::to_string(version) + " (expected " +
                        std::to_string(kModelFormatVersion) + ")");
    }

    const std::uint64_t side = read_uint(doc, "side");
    const std::uint64_t dim = read_uint(doc, "dim");
    if (side < 1 || dim < 1) {
        throw DataError("model document: 'side' and 'dim' must be >= 1");
    }

    const auto& weights_json = require_field(doc, "weights");
    if (!weights_json.is_array() || weights_json.size() != side * side) {
        throw DataError("model document: 'weights' must be an array of " +
                        std::to_string(side * side) + " vectors");
    }
    WeightMatrix wm(side, dim);
    for (std::size_t j = 0; j < weights_json.size(); ++j) {
        const auto row =
            read_double_array(weights_json[j], dim, "weights[" + std::to_string(j) + "]");
        std::copy(row.begin(), row.end(), wm.row(j).begin());
    }

    const auto& norm_json = require_field(doc, "normalization");
    if (!norm_json.is_object()) {
        throw DataError("model document: 'normalization' must be an object");
    }
    NormalizationParams norm;
    norm.mins = read_double_array(require_field(norm_json, "mins"), dim, "normalization.mins");
    norm.maxs = read_double_array(require_field(norm_json, "maxs"), dim, "normalization.maxs");
    const auto& flags = require_field(norm_json, "degenerate_flags");
    if (!flags.is_array() || flags.size() != dim) {
        throw DataError("model document: 'normalization.degenerate_flags' must be an array of " +
                        std::to_string(dim) + " booleans");
    }
    norm.degenerate.resize(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        if (!flags[c].is_boolean()) {
            throw DataError("model document: 'normalization.degenerate_flags' must contain "
                            "only booleans");
        }
        norm.degenerate[c] = flags[c].get<bool>();
    }
    for (std::size_t c = 0; c < dim; ++c) {
        if (norm.mins[c] > norm.maxs[c]) {
            throw DataError("model document: normalization.mins[" + std::to_string(c) +
                            "] exceeds maxs[" + std::to_string(c) + "]");
        }
        if (norm.degenerate[c] != (norm.mins[c] == norm.maxs[c])) {
            throw DataError("model document: normalization.degenerate_flags[" +
                            std::to_string(c) + "] inconsistent with mins/maxs");
        }
    }

    const auto& meta_json = require_field(doc, "training_meta");
    if (!meta_json.is_object()) {
        throw DataError("model document: 'training_meta' must be an object");
    }
    TrainingConfig cfg;
    cfg.side = side;
    cfg.presentations = read_uint(meta_json, "presentations");
    cfg.initial_learning_rate = read_double(meta_json, "initial_learning_rate");
    cfg.initial_radius = read_double(meta_json, "initial_radius");
    cfg.seed = read_uint(meta_json, "seed");
    const auto& sampling = require_field(meta_json, "sampling");
    if (!sampling.is_string()) {
        throw DataError("model document: 'training_meta.sampling' must be a string");
    }
    try {
        cfg.sampling = sampling_mode_from_string(sampling.get<std::string>());
        cfg.validate();
    } catch (const ConfigError& e) {
        throw DataError("model document: invalid training_meta: " + std::string(e.what()));
    }

    return SomModel(std::move(wm), std::move(norm), TrainingMeta{cfg, cfg.presentations});
}

void save_model(const SomModel& model, const std::filesystem::path& path) {
    const std::string text = model_to_json(model);
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) {
            throw DataError("cannot open '" + tmp.string() + "' for writing");
        }
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        if (!out.flush()) {
            throw DataError("failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        throw DataError("cannot move '" + tmp.string() + "' to '" + path.string() +
                        "': " + ec.message());
    }
}

SomModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot open '" + path.string() + "' for reading");
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return model_from_json(text);
}

}  // namespace somkit
