#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "somkit/model.hpp"

namespace somkit {

enum class PlotKind {
    ActivationHeatmap,
    UmatrixHeatmap,
    ActivationBars,
    SurfaceData,
    CodebookTiles,
};

PlotKind plot_kind_from_string(const std::string& s);

enum class ColorScale { Linear, Log1p };

ColorScale color_scale_from_string(const std::string& s);

struct PlotSpec {
    PlotKind kind = PlotKind::UmatrixHeatmap;
    ColorScale color_scale = ColorScale::Linear;
    int cell_size = 24;  // pixels per lattice cell
};

/// k x k heatmap as an SVG document: one rect per cell (class "cell"), fill
/// interpolated between two fixed endpoint colors over [min, max] of the
/// grid. A constant grid renders entirely at the low endpoint. Axes carry
/// row/col indices; the legend shows the value range.
std::string render_heatmap(const std::vector<double>& grid, std::size_t side,
                           const PlotSpec& spec);

/// Bar chart of the activation histogram: one rect (class "bar") per distinct
/// activation-count value, sorted ascending, heights proportional to the
/// number of neurons.
std::string render_bars(const std::map<std::uint64_t, std::size_t>& histogram,
                        const PlotSpec& spec);

/// {"side": k, "values": [...row-major...]} for external 3D surface tooling.
std::string surface_to_json(const std::vector<double>& grid, std::size_t side);
void export_surface(const std::vector<double>& grid, std::size_t side,
                    const std::filesystem::path& path);

/// k x k tiles colored by the denormalized weight vectors read as RGB
/// (channels clamped to [0, 255]). Only defined for dim == 3 models.
std::string render_codebook_tiles(const SomModel& model, const PlotSpec& spec);

}  // namespace somkit
