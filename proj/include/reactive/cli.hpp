#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "reactive/scan.hpp"

namespace reactive::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// "start:stop:count" (inclusive) or a single value for a fixed coordinate.
Range parse_range(const std::string& text, const std::string& what);

/// "start:stop" interval.
std::pair<double, double> parse_interval(const std::string& text, const std::string& what);

/// "x,y,z".
Vec3 parse_vec3(const std::string& text, const std::string& what);

/// One `key = value` pair per line; `#` starts a comment; blank lines ignored.
std::map<std::string, std::string> parse_config(std::istream& in);

/// Runs the command line. args[0] is the program name. Data goes to `out`
/// (or to --out), diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reactive::cli
