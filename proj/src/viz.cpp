#include "somkit/viz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "somkit/detail/format.hpp"
#include "somkit/errors.hpp"
#include "somkit/normalize.hpp"

namespace somkit {

using detail::format_double;

namespace {

// Fixed heatmap endpoints, dark indigo to bright yellow.
struct Rgb {
    int r, g, b;
};
constexpr Rgb kLowColor{13, 8, 135};
constexpr Rgb kHighColor{240, 249, 33};

std::string hex_color(const Rgb& c) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", c.r, c.g, c.b);
    return buf;
}

Rgb lerp_color(double t) {
    const auto ch = [t](int lo, int hi) {
        return static_cast<int>(std::lround(lo + t * (hi - lo)));
    };
    return {ch(kLowColor.r, kHighColor.r), ch(kLowColor.g, kHighColor.g),
            ch(kLowColor.b, kHighColor.b)};
}

/// Interpolation parameter in [0, 1]; a constant grid maps to 0.
double scale_param(double v, double lo, double hi, ColorScale scale) {
    if (hi <= lo) return 0.0;
    if (scale == ColorScale::Log1p) {
        return std::log1p(v - lo) / std::log1p(hi - lo);
    }
    return (v - lo) / (hi - lo);
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

void check_spec(const PlotSpec& spec) {
    if (spec.cell_size < 1) {
        throw ConfigError("cell size must be >= 1, got " + std::to_string(spec.cell_size));
    }
}

void open_svg(std::ostringstream& out, int width, int height) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
}

void text_at(std::ostringstream& out, double x, double y, const std::string& anchor,
             const std::string& content) {
    out << "  <text x=\"" << x << "\" y=\"" << y << "\" font-family=\"monospace\" "
        << "font-size=\"10\" text-anchor=\"" << anchor << "\">" << xml_escape(content)
        << "</text>\n";
}

constexpr int kMarginLeft = 40;
constexpr int kMarginTop = 26;

void axis_labels(std::ostringstream& out, std::size_t side, int cell) {
    for (std::size_t c = 0; c < side; ++c) {
        text_at(out, kMarginLeft + (c + 0.5) * cell, kMarginTop - 8, "middle",
                std::to_string(c));
    }
    for (std::size_t r = 0; r < side; ++r) {
        text_at(out, kMarginLeft - 6, kMarginTop + (r + 0.5) * cell + 3, "end",
                std::to_string(r));
    }
}

/// Emit the k*k cell rects; `fill` maps flat index to a color string and
/// `tooltip` to the <title> text.
template <typename FillFn, typename TitleFn>
void cell_grid(std::ostringstream& out, std::size_t side, int cell, FillFn fill,
               TitleFn tooltip) {
    for (std::size_t r = 0; r < side; ++r) {
        for (std::size_t c = 0; c < side; ++c) {
            const std::size_t flat = r * side + c;
            out << "  <rect class=\"cell\" x=\"" << kMarginLeft + static_cast<int>(c) * cell
                << "\" y=\"" << kMarginTop + static_cast<int>(r) * cell << "\" width=\"" << cell
                << "\" height=\"" << cell << "\" fill=\"" << fill(flat)
                << "\"><title>" << xml_escape(tooltip(flat)) << "</title></rect>\n";
        }
    }
}

}  // namespace

PlotKind plot_kind_from_string(const std::string& s) {
    if (s == "activation-heatmap") return PlotKind::ActivationHeatmap;
    if (s == "umatrix-heatmap") return PlotKind::UmatrixHeatmap;
    if (s == "activation-bars") return PlotKind::ActivationBars;
    if (s == "surface-data") return PlotKind::SurfaceData;
    if (s == "codebook-tiles") return PlotKind::CodebookTiles;
    throw ConfigError("unknown plot kind '" + s + "'");
}

ColorScale color_scale_from_string(const std::string& s) {
    if (s == "linear") return ColorScale::Linear;
    if (s == "log1p") return ColorScale::Log1p;
    throw ConfigError("unknown color scale '" + s + "' (expected linear or log1p)");
}

std::string render_heatmap(const std::vector<double>& grid, std::size_t side,
                           const PlotSpec& spec) {
    check_spec(spec);
    if (side == 0 || grid.size() != side * side) {
        throw DataError("render_heatmap: grid must hold side*side values");
    }
    for (const double v : grid) {
        if (!std::isfinite(v)) {
            throw DataError("render_heatmap: grid contains a non-finite value");
        }
    }
    const auto [lo_it, hi_it] = std::minmax_element(grid.begin(), grid.end());
    const double lo = *lo_it;
    const double hi = *hi_it;

    const int cell = spec.cell_size;
    const int width = kMarginLeft + static_cast<int>(side) * cell + 16;
    const int height = kMarginTop + static_cast<int>(side) * cell + 44;

    std::ostringstream out;
    open_svg(out, width, height);
    axis_labels(out, side, cell);
    cell_grid(
        out, side, cell,
        [&](std::size_t flat) {
            return hex_color(lerp_color(scale_param(grid[flat], lo, hi, spec.color_scale)));
        },
        [&](std::size_t flat) {
            return "(" + std::to_string(flat / side) + "," + std::to_string(flat % side) +
                   ") " + format_double(grid[flat]);
        });

    const int legend_y = kMarginTop + static_cast<int>(side) * cell + 12;
    out << "  <rect class=\"legend-swatch\" x=\"" << kMarginLeft << "\" y=\"" << legend_y
        << "\" width=\"14\" height=\"12\" fill=\"" << hex_color(kLowColor) << "\"/>\n";
    text_at(out, kMarginLeft + 18, legend_y + 10, "start", "min = " + format_double(lo));
    const int legend_x2 = kMarginLeft + 110;
    out << "  <rect class=\"legend-swatch\" x=\"" << legend_x2 << "\" y=\"" << legend_y
        << "\" width=\"14\" height=\"12\" fill=\"" << hex_color(kHighColor) << "\"/>\n";
    text_at(out, legend_x2 + 18, legend_y + 10, "start", "max = " + format_double(hi));
    out << "</svg>\n";
    return out.str();
}

std::string render_bars(const std::map<std::uint64_t, std::size_t>& histogram,
                        const PlotSpec& spec) {
    check_spec(spec);
    if (histogram.empty()) {
        throw DataError("render_bars: empty histogram");
    }
    std::size_t max_neurons = 0;
    for (const auto& [value, neurons] : histogram) {
        max_neurons = std::max(max_neurons, neurons);
    }

    const int plot_h = 160;
    const int bar_w = std::max(14, spec.cell_size);
    const int gap = 8;
    const int width =
        kMarginLeft + static_cast<int>(histogram.size()) * (bar_w + gap) + 16;
    const int height = kMarginTop + plot_h + 40;

    std::ostringstream out;
    open_svg(out, width, height);
    text_at(out, kMarginLeft - 6, kMarginTop + 4, "end", std::to_string(max_neurons));
    text_at(out, kMarginLeft - 6, kMarginTop + plot_h, "end", "0");
    out << "  <line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\""
        << width - 8 << "\" y2=\"" << kMarginTop + plot_h
        << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";

    int x = kMarginLeft + gap / 2;
    for (const auto& [value, neurons] : histogram) {
        const double h =
            static_cast<double>(neurons) * plot_h / static_cast<double>(max_neurons);
        out << "  <rect class=\"bar\" x=\"" << x << "\" y=\""
            << format_double(kMarginTop + plot_h - h) << "\" width=\"" << bar_w
            << "\" height=\"" << format_double(h) << "\" fill=\"" << hex_color(kLowColor)
            << "\"><title>activated " << value << " times: " << neurons
            << " neurons</title></rect>\n";
        text_at(out, x + bar_w / 2.0, kMarginTop + plot_h + 14, "middle",
                std::to_string(value));
        x += bar_w + gap;
    }
    text_at(out, kMarginLeft, height - 8, "start", "activations per neuron");
    out << "</svg>\n";
    return out.str();
}

std::string surface_to_json(const std::vector<double>& grid, std::size_t side) {
    if (side == 0 || grid.size() != side * side) {
        throw DataError("surface export: grid must hold side*side values");
    }
    for (const double v : grid) {
        if (!std::isfinite(v)) {
            throw DataError("surface export: grid contains a non-finite value");
        }
    }
    nlohmann::ordered_json doc;
    doc["side"] = side;
    doc["values"] = grid;
    return doc.dump() + "\n";
}

void export_surface(const std::vector<double>& grid, std::size_t side,
                    const std::filesystem::path& path) {
    const std::string text = surface_to_json(grid, side);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot open '" + path.string() + "' for writing");
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out.flush()) {
        throw DataError("failed writing '" + path.string() + "'");
    }
}

std::string render_codebook_tiles(const SomModel& model, const PlotSpec& spec) {
    check_spec(spec);
    if (model.dim() != 3) {
        throw DataError("codebook tiles need a dimension-3 (RGB) model, got dimension " +
                        std::to_string(model.dim()));
    }

    const std::size_t side = model.side();
    const int cell = spec.cell_size;
    const int width = kMarginLeft + static_cast<int>(side) * cell + 16;
    const int height = kMarginTop + static_cast<int>(side) * cell + 16;

    std::vector<std::string> fills(side * side);
    for (std::size_t j = 0; j < side * side; ++j) {
        const auto row = model.weights().row(j);
        const auto raw = denormalize({row.begin(), row.end()}, model.normalization());
        const auto channel = [&](std::size_t c) {
            return static_cast<int>(std::lround(std::clamp(raw[c], 0.0, 255.0)));
        };
        fills[j] = hex_color({channel(0), channel(1), channel(2)});
    }

    std::ostringstream out;
    open_svg(out, width, height);
    axis_labels(out, side, cell);
    cell_grid(
        out, side, cell, [&](std::size_t flat) { return fills[flat]; },
        [&](std::size_t flat) {
            return "(" + std::to_string(flat / side) + "," + std::to_string(flat % side) +
                   ") " + fills[flat];
        });
    out << "</svg>\n";
    return out.str();
}

}  // namespace somkit
