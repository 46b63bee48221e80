#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "reactive/analysis.hpp"
#include "reactive/nodes.hpp"
#include "reactive/scan.hpp"

namespace reactive::output {

/// Column layout of scan output, one header line.
inline constexpr std::string_view kScanCsvHeader =
    "t,x,y,z,Ex,Ey,Ez,Bx,By,Bz,U,Sx,Sy,Sz,R,I,vx,vy,vz,v_defined";

inline constexpr int kDefaultPrecision = 9;

/// Shortest decimal that round-trips `value` rounded to `digits` significant
/// digits. Negative zero prints as "0".
std::string format_number(double value, int digits);

/// The double that format_number(value, digits) denotes.
double round_to_precision(double value, int digits);

std::vector<std::string> scan_columns();

void write_scan_csv(std::ostream& os, const GridScan& scan, int digits);
void write_scan_json(std::ostream& os, const GridScan& scan, const std::string& source_name,
                     int digits);

void write_nodes_csv(std::ostream& os, const NodeSet& nodes, std::string_view axis, int digits);
void write_nodes_json(std::ostream& os, const NodeSet& nodes, std::string_view target,
                      std::string_view axis, int digits);

void write_residuals_csv(std::ostream& os, const std::vector<ResidualReport>& reports, int digits);
void write_residuals_json(std::ostream& os, const std::vector<ResidualReport>& reports,
                          const std::string& source_name, int digits);

}  // namespace reactive::output
