#pragma once

#include <cstdio>
#include <string>

namespace polsplit::detail {

// 12 significant digits; +0.0 drops negative zero so resonant zeros print "0".
inline void append_g12(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v + 0.0);
    out += buf;
}

inline std::string format_g12(double v) {
    std::string s;
    append_g12(s, v);
    return s;
}

}  // namespace polsplit::detail
