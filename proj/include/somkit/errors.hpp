#pragma once

#include <stdexcept>
#include <string>

namespace somkit {

/// Base class for all somkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Problems with user-supplied data: unreadable files, malformed CSV/JSON,
/// schema violations, dimension mismatches between datasets and models.
class DataError : public Error {
public:
    explicit DataError(const std::string& msg) : Error(msg) {}
};

/// Invalid configuration values (training parameters, plot options).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace somkit
