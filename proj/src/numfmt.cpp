#include "qgames/numfmt.hpp"

#include <charconv>
#include <cstdio>

namespace qgames {

std::string fmt_shortest(double x) {
    if (x == 0.0) return "0";  // collapse -0
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string fmt_sig9(double x) {
    if (x == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return std::string(buf);
}

}  // namespace qgames
