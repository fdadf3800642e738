// numfmt.hpp
// Number-to-text helpers shared by the serializers and the CLI.

#pragma once

#include <string>

namespace qgames {

// Shortest decimal that parses back to exactly the same double
// (interchange formats: game JSON, CSV).
std::string fmt_shortest(double x);

// Up to 9 significant digits, trailing zeros trimmed (display formats).
std::string fmt_sig9(double x);

}  // namespace qgames
