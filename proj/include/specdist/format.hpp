#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace specdist {

/// 17 significant digits, enough to round-trip any double. Non-finite values
/// print as JSON-safe null only through format_json_real.
inline std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string format_json_real(double x) {
    return std::isfinite(x) ? format_real(x) : std::string("null");
}

} // namespace specdist
