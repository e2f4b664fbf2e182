#pragma once

#include <charconv>
#include <string>

namespace thetaval {

/// Shortest decimal string that reads back to the same double.
inline std::string format_shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace thetaval
