#pragma once

#include <filesystem>
#include <string>

#include "somkit/model.hpp"

namespace somkit {

inline constexpr int kModelFormatVersion = 1;

/// Canonical JSON serialization of a model. Keys appear in a fixed order,
/// floats use the shortest representation that round-trips to the identical
/// binary value, and arrays are ordered by flat index, so equal models
/// serialize to byte-identical documents. Non-finite values are rejected.
std::string model_to_json(const SomModel& model);

/// Parse and validate a model document. Rejects unknown format versions,
/// schema violations (errors name the field) and non-finite numbers.
SomModel model_from_json(const std::string& text);

void save_model(const SomModel& model, const std::filesystem::path& path);
SomModel load_model(const std::filesystem::path& path);

}  // namespace somkit
