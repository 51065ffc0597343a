#pragma once

#include <charconv>
#include <string>

namespace somkit::detail {

/// Shortest decimal representation that parses back to the same binary value.
inline std::string format_double(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace somkit::detail
