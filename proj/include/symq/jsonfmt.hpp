#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace symq {

// Fixed float formatting (17 significant digits) so identical invocations
// produce byte-identical JSON.  Non-finite values have no JSON literal and
// come out as null.
inline std::string json_num(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string json_str(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default: out += c;
        }
    }
    out += "\"";
    return out;
}

inline std::string json_bool(bool b) { return b ? "true" : "false"; }

} // namespace symq
