#include "reactive/output.hpp"

#include <charconv>
#include <cmath>
#include <json.hpp>
#include <system_error>

#include "reactive/errors.hpp"

namespace reactive::output {
namespace {

using nlohmann::ordered_json;

std::vector<double> scan_row(const ScanRecord& rec) {
  const auto& p = rec.point;
  const auto& f = rec.field;
  const auto& d = rec.diagnostics;
  return {p.t,  p.r.x,  p.r.y,  p.r.z,       f.e.x,     f.e.y, f.e.z, f.b.x, f.b.y, f.b.z,
          d.u,  d.s.x,  d.s.y,  d.s.z,       d.r_density, d.inertia, d.v.x, d.v.y, d.v.z};
}

}  // namespace

std::string format_number(double value, int digits) {
  if (digits < 1 || digits > 17) {
    throw InvalidArgument("precision must be between 1 and 17 significant digits");
  }
  if (value == 0.0) {
    return "0";
  }
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, digits);
  if (res.ec != std::errc{}) {
    throw ComputationError("failed to format number");
  }
  return std::string(buf, res.ptr);
}

double round_to_precision(double value, int digits) {
  const std::string text = format_number(value, digits);
  double out = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), out);
  return out;
}

std::vector<std::string> scan_columns() {
  std::vector<std::string> cols;
  std::string_view rest = kScanCsvHeader;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    cols.emplace_back(rest.substr(0, comma));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return cols;
}

void write_scan_csv(std::ostream& os, const GridScan& scan, int digits) {
  os << kScanCsvHeader << '\n';
  for (const ScanRecord& rec : scan.records) {
    for (double v : scan_row(rec)) {
      os << format_number(v, digits) << ',';
    }
    os << (rec.diagnostics.v_defined ? '1' : '0') << '\n';
  }
}

void write_scan_json(std::ostream& os, const GridScan& scan, const std::string& source_name,
                     int digits) {
  ordered_json doc;
  doc["source"] = source_name;
  doc["count"] = scan.records.size();
  doc["columns"] = scan_columns();
  ordered_json rows = ordered_json::array();
  for (const ScanRecord& rec : scan.records) {
    ordered_json row = ordered_json::array();
    for (double v : scan_row(rec)) {
      row.push_back(round_to_precision(v, digits));
    }
    row.push_back(rec.diagnostics.v_defined ? 1 : 0);
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  os << doc.dump() << '\n';
}

void write_nodes_csv(std::ostream& os, const NodeSet& nodes, std::string_view axis, int digits) {
  os << "axis,position,value\n";
  for (const Node& n : nodes.nodes) {
    os << axis << ',' << format_number(n.position, digits) << ','
       << format_number(n.value, digits) << '\n';
  }
}

void write_nodes_json(std::ostream& os, const NodeSet& nodes, std::string_view target,
                      std::string_view axis, int digits) {
  ordered_json doc;
  doc["target"] = target;
  doc["axis"] = axis;
  doc["abs_tol"] = nodes.abs_tol;
  doc["refine_width"] = round_to_precision(nodes.refine_width, digits);
  ordered_json list = ordered_json::array();
  for (const Node& n : nodes.nodes) {
    list.push_back({{"position", round_to_precision(n.position, digits)},
                    {"value", round_to_precision(n.value, digits)}});
  }
  doc["nodes"] = std::move(list);
  os << doc.dump() << '\n';
}

void write_residuals_csv(std::ostream& os, const std::vector<ResidualReport>& reports,
                         int digits) {
  os << "t,x,y,z,h_t,h_x,residual,residual_half,ratio\n";
  for (const ResidualReport& r : reports) {
    const double values[] = {r.point.t, r.point.r.x, r.point.r.y,   r.point.r.z, r.h_t,
                             r.h_x,     r.residual,  r.residual_half};
    for (double v : values) {
      os << format_number(v, digits) << ',';
    }
    os << (std::isnan(r.ratio) ? std::string("nan") : format_number(r.ratio, digits)) << '\n';
  }
}

void write_residuals_json(std::ostream& os, const std::vector<ResidualReport>& reports,
                          const std::string& source_name, int digits) {
  ordered_json doc;
  doc["source"] = source_name;
  ordered_json list = ordered_json::array();
  for (const ResidualReport& r : reports) {
    ordered_json item;
    item["t"] = round_to_precision(r.point.t, digits);
    item["x"] = round_to_precision(r.point.r.x, digits);
    item["y"] = round_to_precision(r.point.r.y, digits);
    item["z"] = round_to_precision(r.point.r.z, digits);
    item["h_t"] = round_to_precision(r.h_t, digits);
    item["h_x"] = round_to_precision(r.h_x, digits);
    item["residual"] = round_to_precision(r.residual, digits);
    item["residual_half"] = round_to_precision(r.residual_half, digits);
    item["ratio"] = std::isnan(r.ratio) ? ordered_json(nullptr)
                                        : ordered_json(round_to_precision(r.ratio, digits));
    list.push_back(std::move(item));
  }
  doc["reports"] = std::move(list);
  os << doc.dump() << '\n';
}

}  // namespace reactive::output
