"""Self-organizing map toolkit: train, classify, analyze and plot Kohonen maps."""

from ._core import (
    Assignments,
    ConfigError,
    DataError,
    Dataset,
    NormalizationParams,
    SomModel,
    TrainingConfig,
    activation_density,
    activation_histogram,
    classify,
    denormalize,
    fit_normalization,
    load_csv,
    load_model,
    model_from_json,
    normalize,
    quantization_error,
    read_assignments_csv,
    render_bars,
    render_codebook_tiles,
    render_heatmap,
    report_json,
    summarize,
    surface_to_json,
    topographic_error,
    train,
    u_matrix,
    write_assignments_csv,
)

__all__ = [
    "Assignments",
    "ConfigError",
    "DataError",
    "Dataset",
    "NormalizationParams",
    "SomModel",
    "TrainingConfig",
    "activation_density",
    "activation_histogram",
    "classify",
    "denormalize",
    "fit_normalization",
    "load_csv",
    "load_model",
    "model_from_json",
    "normalize",
    "quantization_error",
    "read_assignments_csv",
    "render_bars",
    "render_codebook_tiles",
    "render_heatmap",
    "report_json",
    "summarize",
    "surface_to_json",
    "topographic_error",
    "train",
    "u_matrix",
    "write_assignments_csv",
]
