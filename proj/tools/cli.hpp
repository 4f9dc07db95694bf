#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace magspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitUsage = 64;

inline constexpr const char* kVersion = "0.1.0";

// args[0] is the program name. Reports go to --out when given, else `out`;
// diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Parses "pi", "-pi/2", "0.5*pi", "3pi/4" or a plain number.
double parse_angle(const std::string& text);

}  // namespace magspec::cli
