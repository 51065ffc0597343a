#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "somkit/somkit.hpp"

namespace py = pybind11;
using namespace somkit;

namespace {

Dataset dataset_from_array(const py::array_t<double, py::array::c_style | py::array::forcecast>& array,
                           const std::vector<std::string>& labels) {
    if (array.ndim() != 2) {
        throw py::value_error("expected a 2-D array of shape (samples, features)");
    }
    const auto n_rows = static_cast<std::size_t>(array.shape(0));
    const auto n_cols = static_cast<std::size_t>(array.shape(1));
    if (!labels.empty() && labels.size() != n_rows) {
        throw py::value_error("labels length must match the number of rows");
    }
    Dataset ds;
    ds.labels = labels;
    ds.rows.reserve(n_rows);
    const double* data = array.data();
    for (std::size_t i = 0; i < n_rows; ++i) {
        ds.rows.emplace_back(data + i * n_cols, data + (i + 1) * n_cols);
    }
    return ds;
}

py::array_t<double> rows_to_array(const std::vector<std::vector<double>>& rows) {
    const std::size_t n_rows = rows.size();
    const std::size_t n_cols = rows.empty() ? 0 : rows.front().size();
    py::array_t<double> out({n_rows, n_cols});
    auto view = out.mutable_unchecked<2>();
    for (std::size_t i = 0; i < n_rows; ++i) {
        for (std::size_t j = 0; j < n_cols; ++j) {
            view(i, j) = rows[i][j];
        }
    }
    return out;
}

py::array_t<double> weights_to_array(const WeightMatrix& wm) {
    py::array_t<double> out({wm.neuron_count(), wm.dim()});
    std::copy(wm.data().begin(), wm.data().end(), out.mutable_data());
    return out;
}

std::vector<double> grid_from_array(
    const py::array_t<double, py::array::c_style | py::array::forcecast>& array,
    std::size_t& side_out) {
    if (array.ndim() != 2 || array.shape(0) != array.shape(1)) {
        throw py::value_error("expected a square 2-D grid");
    }
    side_out = static_cast<std::size_t>(array.shape(0));
    return {array.data(), array.data() + side_out * side_out};
}

TrainingConfig make_config(std::size_t side, std::uint64_t presentations, double learning_rate,
                           std::optional<double> radius, std::uint64_t seed,
                           const std::string& sampling) {
    TrainingConfig cfg;
    cfg.side = side;
    cfg.presentations = presentations;
    cfg.initial_learning_rate = learning_rate;
    cfg.initial_radius = radius.value_or(default_radius(side));
    cfg.seed = seed;
    cfg.sampling = sampling_mode_from_string(sampling);
    cfg.validate();
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Self-organizing map toolkit (C++ core)";

    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<Dataset>(m, "Dataset")
        .def(py::init(&dataset_from_array), py::arg("rows"),
             py::arg("labels") = std::vector<std::string>{})
        .def_property_readonly("rows", [](const Dataset& ds) { return rows_to_array(ds.rows); })
        .def_readonly("labels", &Dataset::labels)
        .def_readonly("column_names", &Dataset::column_names)
        .def_property_readonly("dim", &Dataset::dim)
        .def("__len__", &Dataset::size);

    m.def(
        "load_csv",
        [](const std::filesystem::path& path, bool has_header, const std::string& label_column,
           const std::string& delimiter) {
            if (delimiter.size() != 1) throw py::value_error("delimiter must be one character");
            return load_csv(path, CsvOptions{has_header, label_column, delimiter[0]});
        },
        py::arg("path"), py::arg("has_header") = false, py::arg("label_column") = "",
        py::arg("delimiter") = ",");

    m.def("summarize", [](const Dataset& ds) {
        py::list out;
        for (const auto& s : summarize(ds)) {
            out.append(py::dict(py::arg("min") = s.min, py::arg("max") = s.max,
                                py::arg("mean") = s.mean, py::arg("std") = s.stddev));
        }
        return out;
    });

    py::class_<NormalizationParams>(m, "NormalizationParams")
        .def_readonly("mins", &NormalizationParams::mins)
        .def_readonly("maxs", &NormalizationParams::maxs)
        .def_readonly("degenerate", &NormalizationParams::degenerate)
        .def_property_readonly("dim", &NormalizationParams::dim);

    m.def("fit_normalization", &fit_normalization);
    m.def("normalize", &normalize, py::arg("dataset"), py::arg("params"));
    m.def("denormalize", &denormalize, py::arg("vector"), py::arg("params"));

    py::class_<TrainingConfig>(m, "TrainingConfig")
        .def(py::init(&make_config), py::arg("side"), py::arg("presentations"),
             py::arg("learning_rate") = 0.1, py::arg("radius") = std::nullopt,
             py::arg("seed") = 0, py::arg("sampling") = "random")
        .def_readonly("side", &TrainingConfig::side)
        .def_readonly("presentations", &TrainingConfig::presentations)
        .def_readonly("learning_rate", &TrainingConfig::initial_learning_rate)
        .def_readonly("radius", &TrainingConfig::initial_radius)
        .def_readonly("seed", &TrainingConfig::seed)
        .def_property_readonly(
            "sampling", [](const TrainingConfig& cfg) { return to_string(cfg.sampling); });

    py::class_<SomModel>(m, "SomModel")
        .def_property_readonly("side", &SomModel::side)
        .def_property_readonly("dim", &SomModel::dim)
        .def_property_readonly(
            "weights", [](const SomModel& model) { return weights_to_array(model.weights()); })
        .def_property_readonly("normalization", &SomModel::normalization)
        .def("save", [](const SomModel& model, const std::filesystem::path& path) {
            save_model(model, path);
        })
        .def("to_json", [](const SomModel& model) { return model_to_json(model); });

    m.def("load_model", &load_model, py::arg("path"));
    m.def("model_from_json", &model_from_json, py::arg("text"));

    m.def(
        "train",
        [](const Dataset& normalized, const NormalizationParams& norm,
           const TrainingConfig& cfg) {
            auto result = train(normalized, norm, cfg);
            py::list trace;
            for (const auto& cp : result.trace.checkpoints) {
                trace.append(py::make_tuple(cp.t, cp.alpha, cp.sigma, cp.quantization_error));
            }
            return py::make_tuple(std::move(result.model), std::move(trace));
        },
        py::arg("normalized"), py::arg("params"), py::arg("config"),
        "Train a map; returns (model, trace) where trace rows are "
        "(t, alpha, sigma, quantization_error).");

    py::class_<Assignments>(m, "Assignments")
        .def_property_readonly("side", [](const Assignments& a) { return a.side; })
        .def_property_readonly("positions",
                               [](const Assignments& a) {
                                   py::array_t<std::size_t> out(
                                       {a.items.size(), std::size_t(2)});
                                   auto view = out.mutable_unchecked<2>();
                                   for (std::size_t i = 0; i < a.items.size(); ++i) {
                                       view(i, 0) = a.items[i].position.row;
                                       view(i, 1) = a.items[i].position.col;
                                   }
                                   return out;
                               })
        .def_property_readonly("distances",
                               [](const Assignments& a) {
                                   py::array_t<double> out(a.items.size());
                                   auto view = out.mutable_unchecked<1>();
                                   for (std::size_t i = 0; i < a.items.size(); ++i) {
                                       view(i) = a.items[i].bmu_distance;
                                   }
                                   return out;
                               })
        .def_property_readonly("labels",
                               [](const Assignments& a) {
                                   std::vector<std::string> out;
                                   out.reserve(a.items.size());
                                   for (const auto& item : a.items) out.push_back(item.label);
                                   return out;
                               })
        .def_property_readonly("activation_counts",
                               [](const Assignments& a) {
                                   py::array_t<std::uint64_t> out({a.side, a.side});
                                   std::copy(a.activation_counts.begin(),
                                             a.activation_counts.end(), out.mutable_data());
                                   return out;
                               })
        .def("__len__", &Assignments::sample_count);

    m.def("classify", &classify, py::arg("model"), py::arg("dataset"));
    m.def("activation_histogram",
          [](const Assignments& a) { return activation_histogram(a); });
    m.def("write_assignments_csv", &write_assignments_csv, py::arg("assignments"),
          py::arg("path"));
    m.def("read_assignments_csv", &read_assignments_csv, py::arg("path"), py::arg("side"));

    m.def("quantization_error", &quantization_error, py::arg("model"), py::arg("dataset"));
    m.def("topographic_error", &topographic_error, py::arg("model"), py::arg("dataset"));
    m.def("activation_density", &activation_density, py::arg("assignments"));
    m.def("u_matrix", [](const SomModel& model) {
        const auto values = u_matrix(model);
        py::array_t<double> out({model.side(), model.side()});
        std::copy(values.begin(), values.end(), out.mutable_data());
        return out;
    });
    m.def(
        "report_json",
        [](const SomModel& model, const Assignments& a, const Dataset& ds) {
            return report_to_json(build_report(model, a, ds));
        },
        py::arg("model"), py::arg("assignments"), py::arg("dataset"));

    m.def(
        "render_heatmap",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& grid,
           const std::string& scale, int cell_size) {
            PlotSpec spec;
            spec.color_scale = color_scale_from_string(scale);
            spec.cell_size = cell_size;
            std::size_t side = 0;
            const auto values = grid_from_array(grid, side);
            return render_heatmap(values, side, spec);
        },
        py::arg("grid"), py::arg("scale") = "linear", py::arg("cell_size") = 24);
    m.def(
        "render_bars",
        [](const std::map<std::uint64_t, std::size_t>& histogram, int cell_size) {
            PlotSpec spec;
            spec.cell_size = cell_size;
            return render_bars(histogram, spec);
        },
        py::arg("histogram"), py::arg("cell_size") = 24);
    m.def(
        "render_codebook_tiles",
        [](const SomModel& model, int cell_size) {
            PlotSpec spec;
            spec.cell_size = cell_size;
            return render_codebook_tiles(model, spec);
        },
        py::arg("model"), py::arg("cell_size") = 24);
    m.def("surface_to_json",
          [](const py::array_t<double, py::array::c_style | py::array::forcecast>& grid) {
              std::size_t side = 0;
              const auto values = grid_from_array(grid, side);
              return surface_to_json(values, side);
          });
}
