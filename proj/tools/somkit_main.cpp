// somkit command-line tool: stats | train | classify | report | plot.
//
// Exit codes: 0 success, 1 usage error, 2 data/format error, 3 internal
// error. Output files are written last and atomically, so nothing is left
// behind when a command fails.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "somkit/somkit.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

/// Flag combinations CLI11 cannot express (e.g. a plot kind that needs
/// --assignments); mapped to exit code 1.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

void write_text_atomic(const fs::path& path, const std::string& text) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) {
            throw somkit::DataError("cannot open '" + tmp.string() + "' for writing");
        }
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
        if (!out.flush()) {
            throw somkit::DataError("failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        throw somkit::DataError("cannot move '" + tmp.string() + "' to '" + path.string() +
                                "': " + ec.message());
    }
}

struct CsvFlags {
    std::string input;
    std::string label_column;
    bool has_header = false;
    std::string delimiter = ",";
};

void add_csv_flags(CLI::App* cmd, CsvFlags& flags) {
    cmd->add_option("--input", flags.input, "input CSV file")->required();
    cmd->add_option("--label-column", flags.label_column,
                    "column to treat as labels (header name, or 0-based index)");
    cmd->add_flag("--has-header", flags.has_header, "first row is a header");
    cmd->add_option("--delimiter", flags.delimiter, "field delimiter (default ',')");
}

somkit::Dataset load_dataset(const CsvFlags& flags) {
    if (flags.delimiter.size() != 1) {
        throw UsageError("--delimiter must be a single character");
    }
    somkit::CsvOptions options;
    options.has_header = flags.has_header;
    options.label_column = flags.label_column;
    options.delimiter = flags.delimiter[0];
    return somkit::load_csv(flags.input, options);
}

void print_json(const ordered_json& doc) { std::cout << doc.dump() << '\n'; }

// ---------------------------------------------------------------- stats --

struct StatsOpts {
    CsvFlags csv;
};

void run_stats(const StatsOpts& opts) {
    const auto ds = load_dataset(opts.csv);
    const auto stats = somkit::summarize(ds);

    ordered_json features = ordered_json::array();
    for (std::size_t c = 0; c < stats.size(); ++c) {
        const std::string name =
            c < ds.column_names.size() ? ds.column_names[c] : "col" + std::to_string(c);
        features.push_back({{"name", name},
                            {"min", stats[c].min},
                            {"max", stats[c].max},
                            {"mean", stats[c].mean},
                            {"std", stats[c].stddev}});
    }
    print_json({{"samples", ds.size()}, {"features", features}});
}

// ---------------------------------------------------------------- train --

struct TrainOpts {
    CsvFlags csv;
    std::size_t side = 0;
    std::uint64_t presentations = 0;
    double learning_rate = 0.0;
    double radius = -1.0;  // <0: default side/2
    std::uint64_t seed = 0;
    std::string sampling = "random";
    std::string output;
    std::string trace_path;
};

void run_train(const TrainOpts& opts) {
    const auto ds = load_dataset(opts.csv);

    somkit::TrainingConfig cfg;
    cfg.side = opts.side;
    cfg.presentations = opts.presentations;
    cfg.initial_learning_rate = opts.learning_rate;
    cfg.initial_radius = opts.radius < 0.0 ? somkit::default_radius(opts.side) : opts.radius;
    cfg.seed = opts.seed;
    cfg.sampling = somkit::sampling_mode_from_string(opts.sampling);
    cfg.validate();

    const auto norm = somkit::fit_normalization(ds);
    const auto normalized = somkit::normalize(ds, norm);
    auto result = somkit::train(normalized, norm, cfg);

    somkit::save_model(result.model, opts.output);
    if (!opts.trace_path.empty()) {
        somkit::write_trace_csv(result.trace, opts.trace_path);
    }
    print_json({{"quantization_error", somkit::quantization_error(result.model, ds)}});
}

// ------------------------------------------------------------- classify --

struct ClassifyOpts {
    CsvFlags csv;
    std::string model_path;
    std::string output;
};

void run_classify(const ClassifyOpts& opts) {
    const auto model = somkit::load_model(opts.model_path);
    const auto ds = load_dataset(opts.csv);
    const auto assignments = somkit::classify(model, ds);

    somkit::write_assignments_csv(assignments, opts.output);
    print_json({{"samples", assignments.sample_count()},
                {"activation_density", somkit::activation_density(assignments)}});
}

// --------------------------------------------------------------- report --

struct ReportOpts {
    CsvFlags csv;
    std::string model_path;
    std::string assignments_path;
    std::string output;
    bool text = false;
};

void run_report(const ReportOpts& opts) {
    const auto model = somkit::load_model(opts.model_path);
    const auto ds = load_dataset(opts.csv);
    const auto assignments =
        opts.assignments_path.empty()
            ? somkit::classify(model, ds)
            : somkit::read_assignments_csv(opts.assignments_path, model.side());
    const auto report = somkit::build_report(model, assignments, ds);

    write_text_atomic(opts.output, somkit::report_to_json(report));
    if (opts.text) {
        std::cout << somkit::report_to_text(report);
    } else {
        print_json({{"quantization_error", report.quantization_error},
                    {"topographic_error", report.topographic_error},
                    {"activation_density", report.activation_density}});
    }
}

// ----------------------------------------------------------------- plot --

struct PlotOpts {
    std::string model_path;
    std::string assignments_path;
    std::string kind = "umatrix-heatmap";
    std::string scale = "linear";
    int cell_size = 24;
    std::string output;
};

void run_plot(const PlotOpts& opts) {
    const auto kind = somkit::plot_kind_from_string(opts.kind);
    somkit::PlotSpec spec;
    spec.kind = kind;
    spec.color_scale = somkit::color_scale_from_string(opts.scale);
    spec.cell_size = opts.cell_size;

    const auto model = somkit::load_model(opts.model_path);

    std::optional<somkit::Assignments> assignments;
    const bool needs_assignments = kind == somkit::PlotKind::ActivationHeatmap ||
                                   kind == somkit::PlotKind::ActivationBars ||
                                   kind == somkit::PlotKind::SurfaceData;
    if (needs_assignments) {
        if (opts.assignments_path.empty()) {
            throw UsageError("--kind " + opts.kind + " requires --assignments");
        }
        assignments = somkit::read_assignments_csv(opts.assignments_path, model.side());
    }

    const auto counts_grid = [&]() {
        std::vector<double> grid;
        grid.reserve(assignments->activation_counts.size());
        for (const auto count : assignments->activation_counts) {
            grid.push_back(static_cast<double>(count));
        }
        return grid;
    };

    std::string text;
    switch (kind) {
        case somkit::PlotKind::ActivationHeatmap:
            text = somkit::render_heatmap(counts_grid(), model.side(), spec);
            break;
        case somkit::PlotKind::UmatrixHeatmap:
            text = somkit::render_heatmap(somkit::u_matrix(model), model.side(), spec);
            break;
        case somkit::PlotKind::ActivationBars:
            text = somkit::render_bars(somkit::activation_histogram(*assignments), spec);
            break;
        case somkit::PlotKind::SurfaceData:
            text = somkit::surface_to_json(counts_grid(), model.side());
            break;
        case somkit::PlotKind::CodebookTiles:
            text = somkit::render_codebook_tiles(model, spec);
            break;
    }
    write_text_atomic(opts.output, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Self-organizing map toolkit: train, classify, report, plot"};
    app.require_subcommand(1);

    StatsOpts stats_opts;
    auto* stats_cmd = app.add_subcommand("stats", "per-feature dataset statistics as JSON");
    add_csv_flags(stats_cmd, stats_opts.csv);

    TrainOpts train_opts;
    auto* train_cmd = app.add_subcommand("train", "train a map and save it as JSON");
    add_csv_flags(train_cmd, train_opts.csv);
    train_cmd->add_option("--side", train_opts.side, "grid side length")->required();
    train_cmd->add_option("--presentations", train_opts.presentations,
                          "total pattern presentations")
        ->required();
    train_cmd->add_option("--learning-rate", train_opts.learning_rate,
                          "initial learning rate in (0, 1]")
        ->required();
    train_cmd->add_option("--radius", train_opts.radius,
                          "initial neighbourhood radius (default side/2)");
    train_cmd->add_option("--seed", train_opts.seed, "RNG seed (default 0)");
    train_cmd->add_option("--sampling", train_opts.sampling,
                          "pattern order: cyclic or random (default random)");
    train_cmd->add_option("--output", train_opts.output, "model JSON path")->required();
    train_cmd->add_option("--trace", train_opts.trace_path, "write a training trace CSV");

    ClassifyOpts classify_opts;
    auto* classify_cmd =
        app.add_subcommand("classify", "map samples onto a trained model");
    add_csv_flags(classify_cmd, classify_opts.csv);
    classify_cmd->add_option("--model", classify_opts.model_path, "model JSON path")
        ->required();
    classify_cmd->add_option("--output", classify_opts.output, "assignments CSV path")
        ->required();

    ReportOpts report_opts;
    auto* report_cmd = app.add_subcommand("report", "map-quality report as JSON");
    add_csv_flags(report_cmd, report_opts.csv);
    report_cmd->add_option("--model", report_opts.model_path, "model JSON path")->required();
    report_cmd->add_option("--assignments", report_opts.assignments_path,
                           "reuse an assignments CSV instead of re-classifying");
    report_cmd->add_option("--output", report_opts.output, "report JSON path")->required();
    report_cmd->add_flag("--text", report_opts.text, "print a human-readable table");

    PlotOpts plot_opts;
    auto* plot_cmd = app.add_subcommand("plot", "emit SVG plots / surface data");
    plot_cmd->add_option("--model", plot_opts.model_path, "model JSON path")->required();
    plot_cmd->add_option("--assignments", plot_opts.assignments_path,
                         "assignments CSV (needed by activation plots)");
    plot_cmd
        ->add_option("--kind", plot_opts.kind,
                     "activation-heatmap | umatrix-heatmap | activation-bars | "
                     "surface-data | codebook-tiles")
        ->required();
    plot_cmd->add_option("--scale", plot_opts.scale, "color scale: linear or log1p");
    plot_cmd->add_option("--cell-size", plot_opts.cell_size, "cell size in pixels");
    plot_cmd->add_option("--output", plot_opts.output, "output file path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*stats_cmd) run_stats(stats_opts);
        if (*train_cmd) run_train(train_opts);
        if (*classify_cmd) run_classify(classify_opts);
        if (*report_cmd) run_report(report_opts);
        if (*plot_cmd) run_plot(plot_opts);
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const somkit::ConfigError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const somkit::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}
