#include "reactive/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>

#include "reactive/analysis.hpp"
#include "reactive/diagnostics.hpp"
#include "reactive/errors.hpp"
#include "reactive/nodes.hpp"
#include "reactive/output.hpp"
#include "reactive/sources.hpp"
#include "reactive/verify.hpp"

namespace reactive::cli {
namespace {

double parse_double(std::string_view text, const std::string& what) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw InvalidArgument(what + ": '" + std::string(text) + "' is not a finite number");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

bool is_interval(const std::string& text) { return text.find(':') != std::string::npos; }

struct Common {
  double c = 1.0;
  std::string out = "-";
  std::string format = "csv";
  int precision = output::kDefaultPrecision;
  std::string config;
};

struct WaveArgs {
  double amplitude = 1.0;
  double omega = 1.0;
  int direction = 1;
  std::string polarization = "1,0,0";
};

struct DipoleArgs {
  std::string waveform = "gaussian";
  double amplitude = 1.0;
  double tau = 1.0;
  double omega0 = 6.0;
  double t0 = 0.0;
};

// Empty strings mean "use the subcommand default" (see with_defaults).
struct GridArgs {
  std::string x;
  std::string y;
  std::string z;
  std::string t;
};

GridArgs with_defaults(GridArgs g, const std::string& subcommand) {
  GridArgs d{"0", "0", "0:6.283185307179586:101", "0"};
  if (subcommand == "dipole") {
    d = {"0.5:5:10", "0", "0", "0:8:33"};
  } else if (subcommand == "nodes") {
    d.z = g.t.find(':') != std::string::npos ? "0" : "0:6.283185307179586";
  }
  for (auto [value, fallback] : {std::pair{&g.x, &d.x}, {&g.y, &d.y}, {&g.z, &d.z}, {&g.t, &d.t}}) {
    if (value->empty()) *value = *fallback;
  }
  return g;
}

struct NodesArgs {
  std::string target = "R";
  double tol = 1e-8;
  int grid = 512;
};

struct ResidualArgs {
  std::string source = "standing-wave";
  std::vector<std::string> points;
  double h_t = 0.0;
  double h_x = 0.0;
};

struct Args {
  Common common;
  WaveArgs wave;
  DipoleArgs dipole;
  GridArgs grid;
  NodesArgs nodes;
  ResidualArgs residual;
  std::uint64_t seed = 20110101;
};

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--c", common.c, "Speed of light")->capture_default_str();
  sub->add_option("--out", common.out, "Output path, '-' for stdout")->capture_default_str();
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--precision", common.precision, "Significant digits")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
  sub->add_option("--config", common.config, "File of key = value defaults");
}

void add_wave(CLI::App* sub, WaveArgs& wave, bool traveling) {
  sub->add_option("--amplitude", wave.amplitude, "Electric amplitude")->capture_default_str();
  sub->add_option("--omega", wave.omega, "Angular frequency")->capture_default_str();
  if (traveling) {
    sub->add_option("--direction", wave.direction, "Propagation sign along z (+1 or -1)")
        ->check(CLI::IsMember({1, -1}))
        ->capture_default_str();
    sub->add_option("--polarization", wave.polarization, "Unit polarization x,y,z")
        ->capture_default_str();
  }
}

void add_dipole(CLI::App* sub, DipoleArgs& dipole) {
  sub->add_option("--waveform", dipole.waveform, "Dipole moment waveform")
      ->check(CLI::IsMember({"gaussian", "static"}))
      ->capture_default_str();
  sub->add_option("--amplitude", dipole.amplitude, "Moment amplitude")->capture_default_str();
  sub->add_option("--tau", dipole.tau, "Gaussian width")->capture_default_str();
  sub->add_option("--omega0", dipole.omega0, "Carrier frequency")->capture_default_str();
  sub->add_option("--t0", dipole.t0, "Pulse centre time")->capture_default_str();
}

void add_grid(CLI::App* sub, GridArgs& grid) {
  sub->add_option("--x", grid.x, "x value or start:stop:count");
  sub->add_option("--y", grid.y, "y value or start:stop:count");
  sub->add_option("--z", grid.z, "z value or start:stop:count");
  sub->add_option("--t", grid.t, "t value or start:stop:count");
}

std::unique_ptr<CLI::App> build_app(Args& args) {
  auto app = std::make_unique<CLI::App>("Reactive energy, inertia and energy-flow diagnostics",
                                        "reactive-em");
  app->require_subcommand(1);

  auto* sw = app->add_subcommand("standing-wave", "Scan the standing plane wave");
  add_common(sw, args.common);
  add_wave(sw, args.wave, false);
  add_grid(sw, args.grid);

  auto* pw = app->add_subcommand("plane-wave", "Scan a single traveling plane wave");
  add_common(pw, args.common);
  add_wave(pw, args.wave, true);
  add_grid(pw, args.grid);

  auto* dp = app->add_subcommand("dipole", "Scan the time-dependent electric dipole");
  add_common(dp, args.common);
  add_dipole(dp, args.dipole);
  add_grid(dp, args.grid);

  auto* nd = app->add_subcommand("nodes", "Nodes of R or |v| for the standing wave");
  add_common(nd, args.common);
  add_wave(nd, args.wave, false);
  nd->add_option("--target", args.nodes.target, "Profile whose zeros are sought")
      ->check(CLI::IsMember({"R", "v"}))
      ->capture_default_str();
  nd->add_option("--z", args.grid.z, "z value, or start:stop interval");
  nd->add_option("--t", args.grid.t, "t value, or start:stop interval");
  nd->add_option("--tol", args.nodes.tol, "Acceptance threshold on the profile")->capture_default_str();
  nd->add_option("--grid", args.nodes.grid, "Initial bracketing grid")->capture_default_str();

  auto* rs = app->add_subcommand("residual", "Poynting-theorem residual at events");
  add_common(rs, args.common);
  rs->add_option("--source", args.residual.source, "Field source")
      ->check(CLI::IsMember({"standing-wave", "plane-wave", "dipole"}))
      ->capture_default_str();
  rs->add_option("--amplitude", args.wave.amplitude, "Wave or moment amplitude")->capture_default_str();
  rs->add_option("--omega", args.wave.omega, "Wave angular frequency")->capture_default_str();
  rs->add_option("--direction", args.wave.direction, "Plane-wave propagation sign")
      ->check(CLI::IsMember({1, -1}));
  rs->add_option("--polarization", args.wave.polarization, "Plane-wave polarization x,y,z");
  rs->add_option("--waveform", args.dipole.waveform, "Dipole waveform")
      ->check(CLI::IsMember({"gaussian", "static"}));
  rs->add_option("--tau", args.dipole.tau, "Dipole Gaussian width");
  rs->add_option("--omega0", args.dipole.omega0, "Dipole carrier frequency");
  rs->add_option("--t0", args.dipole.t0, "Dipole pulse centre time");
  rs->add_option("--point", args.residual.points, "Event x,y,z,t (repeatable)")->required();
  rs->add_option("--ht", args.residual.h_t, "Time step (default from the source frequency)");
  rs->add_option("--hx", args.residual.h_x, "Space step (default from the source frequency)");

  auto* vf = app->add_subcommand("verify", "Run the built-in property suite");
  vf->add_option("--seed", args.seed, "Random seed")->capture_default_str();

  return app;
}

FieldSource make_dipole(const DipoleArgs& d, const UnitSystem& units) {
  DipoleWaveform w = d.waveform == "static" ? static_waveform(d.amplitude)
                                            : gaussian_waveform(d.amplitude, d.tau, d.omega0, d.t0);
  return electric_dipole(std::move(w), units);
}

PlaneWaveSpec make_plane_wave(const WaveArgs& w) {
  PlaneWaveSpec spec{w.amplitude, w.omega,
                     w.direction > 0 ? Propagation::kForward : Propagation::kBackward,
                     parse_vec3(w.polarization, "polarization")};
  spec.validate();
  return spec;
}

GridRegion make_region(const GridArgs& g) {
  GridRegion region{parse_range(g.x, "x"), parse_range(g.y, "y"), parse_range(g.z, "z")};
  region.validate();
  return region;
}

// Writes through `writer` to stdout or to a file. Files are assembled under a
// temporary name and renamed only on success, so a failed run leaves none.
void emit(const Common& common, std::ostream& out, const std::function<void(std::ostream&)>& writer) {
  if (common.out == "-") {
    writer(out);
    return;
  }
  const std::filesystem::path target(common.out);
  std::filesystem::path partial = target;
  partial += ".partial";
  try {
    {
      std::ofstream file(partial, std::ios::binary | std::ios::trunc);
      if (!file) {
        throw ComputationError("cannot open output file " + partial.string());
      }
      writer(file);
      file.flush();
      if (!file) {
        throw ComputationError("failed writing output file " + partial.string());
      }
    }
    std::filesystem::rename(partial, target);
  } catch (...) {
    std::error_code ignored;
    std::filesystem::remove(partial, ignored);
    throw;
  }
}

void emit_scan(const Common& common, std::ostream& out, const FieldSource& source,
               const GridRegion& region, const Range& time, const UnitSystem& units) {
  const GridScan grid = scan(source, region, time, units);
  emit(common, out, [&](std::ostream& os) {
    if (common.format == "json") {
      output::write_scan_json(os, grid, source.name(), common.precision);
    } else {
      output::write_scan_csv(os, grid, common.precision);
    }
  });
}

int run_nodes(const Args& args, std::ostream& out) {
  const UnitSystem units(args.common.c);
  const FieldSource wave = standing_plane_wave(args.wave.amplitude, args.wave.omega, units);
  const bool z_axis = is_interval(args.grid.z);
  if (z_axis == is_interval(args.grid.t)) {
    throw InvalidArgument("nodes: give exactly one of --z/--t as a start:stop interval");
  }
  const std::string axis = z_axis ? "z" : "t";
  const auto [lo, hi] = parse_interval(z_axis ? args.grid.z : args.grid.t, axis);
  const double fixed = parse_double(z_axis ? args.grid.t : args.grid.z, z_axis ? "t" : "z");
  if (args.nodes.grid < 8) {
    throw InvalidArgument("grid: initial grid must have at least 8 points");
  }
  if (!(args.nodes.tol > 0.0)) {
    throw InvalidArgument("tol: must be positive");
  }

  auto event = [z_axis, fixed](double s) {
    return z_axis ? SpaceTimePoint{{0.0, 0.0, s}, fixed} : SpaceTimePoint{{0.0, 0.0, fixed}, s};
  };
  std::function<double(double)> profile;
  if (args.nodes.target == "R") {
    profile = [&](double s) { return reactive_density_direct(wave.evaluate(event(s))); };
  } else {
    profile = [&](double s) { return norm(flow_velocity(wave.evaluate(event(s)), units).v); };
  }
  const NodeSet nodes = find_nodes(
      profile, lo, hi, {args.nodes.tol, static_cast<std::size_t>(args.nodes.grid), 1e-9});
  emit(args.common, out, [&](std::ostream& os) {
    if (args.common.format == "json") {
      output::write_nodes_json(os, nodes, args.nodes.target, axis, args.common.precision);
    } else {
      output::write_nodes_csv(os, nodes, axis, args.common.precision);
    }
  });
  return kExitOk;
}

int run_residual(const Args& args, std::ostream& out) {
  const UnitSystem units(args.common.c);
  const std::string& kind = args.residual.source;
  std::optional<FieldSource> source;
  double frequency = args.wave.omega;
  if (kind == "standing-wave") {
    source = standing_plane_wave(args.wave.amplitude, args.wave.omega, units);
  } else if (kind == "plane-wave") {
    source = traveling_plane_wave(make_plane_wave(args.wave), units);
  } else {
    DipoleArgs d = args.dipole;
    d.amplitude = args.wave.amplitude;
    source = make_dipole(d, units);
    frequency = d.waveform == "gaussian" ? std::max(d.omega0, 1.0 / d.tau) : 1.0;
  }

  ResidualSteps steps = default_residual_steps(frequency, units);
  if (args.residual.h_t != 0.0) steps.h_t = args.residual.h_t;
  if (args.residual.h_x != 0.0) steps.h_x = args.residual.h_x;
  if (!(steps.h_t > 0.0 && steps.h_x > 0.0)) {
    throw InvalidArgument("ht/hx: steps must be positive");
  }

  std::vector<SpaceTimePoint> points;
  for (const std::string& text : args.residual.points) {
    const auto parts = split(text, ',');
    if (parts.size() != 4) {
      throw InvalidArgument("point: expected x,y,z,t but got '" + text + "'");
    }
    points.push_back({{parse_double(parts[0], "point"), parse_double(parts[1], "point"),
                       parse_double(parts[2], "point")},
                      parse_double(parts[3], "point")});
  }

  std::vector<ResidualReport> reports;
  for (const SpaceTimePoint& p : points) {
    reports.push_back(poynting_residual(*source, p, steps.h_t, steps.h_x, units));
  }
  emit(args.common, out, [&](std::ostream& os) {
    if (args.common.format == "json") {
      output::write_residuals_json(os, reports, source->name(), args.common.precision);
    } else {
      output::write_residuals_csv(os, reports, args.common.precision);
    }
  });
  return kExitOk;
}

int run_verify(const Args& args, std::ostream& out) {
  const auto results = run_property_suite(args.seed);
  std::size_t failed = 0;
  for (const PropertyResult& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) {
      out << ": " << r.detail;
      ++failed;
    }
    out << '\n';
  }
  out << (results.size() - failed) << '/' << results.size() << " properties passed\n";
  return failed == 0 ? kExitOk : kExitComputation;
}

int dispatch(const CLI::App& app, Args args, std::ostream& out) {
  const CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  args.grid = with_defaults(args.grid, name);
  if (name == "verify") {
    return run_verify(args, out);
  }
  if (name == "nodes") {
    return run_nodes(args, out);
  }
  if (name == "residual") {
    return run_residual(args, out);
  }

  const UnitSystem units(args.common.c);
  const GridRegion region = make_region(args.grid);
  const Range time = parse_range(args.grid.t, "t");
  if (name == "standing-wave") {
    emit_scan(args.common, out, standing_plane_wave(args.wave.amplitude, args.wave.omega, units),
              region, time, units);
  } else if (name == "plane-wave") {
    emit_scan(args.common, out, traveling_plane_wave(make_plane_wave(args.wave), units), region,
              time, units);
  } else {
    emit_scan(args.common, out, make_dipole(args.dipole, units), region, time, units);
  }
  return kExitOk;
}

// Re-inserts config-file pairs as flags for every option the command line
// left unset, so explicit flags always win.
std::vector<std::string> merge_config(const std::vector<std::string>& args, const CLI::App& sub,
                                      const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidArgument("config: cannot read '" + path + "'");
  }
  const auto pairs = parse_config(in);
  std::vector<std::string> injected;
  for (const auto& [key, value] : pairs) {
    if (key == "config") {
      throw InvalidArgument("config: a config file cannot name another config file");
    }
    const CLI::Option* opt = sub.get_option_no_throw("--" + key);
    if (opt == nullptr) {
      throw InvalidArgument("config: unknown key '" + key + "' for " + sub.get_name());
    }
    if (opt->count() == 0) {
      injected.push_back("--" + key);
      injected.push_back(value);
    }
  }
  // args = [program, subcommand, ...]; config flags go right after the subcommand.
  std::vector<std::string> merged(args.begin(), args.begin() + 2);
  merged.insert(merged.end(), injected.begin(), injected.end());
  merged.insert(merged.end(), args.begin() + 2, args.end());
  return merged;
}

int parse(CLI::App& app, std::vector<std::string> args, std::ostream& out, std::ostream& err,
          bool& done) {
  done = false;
  std::reverse(args.begin(), args.end());
  args.pop_back();  // program name
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    done = true;
    const int status = app.exit(e, out, err);
    return status == 0 ? kExitOk : kExitUsage;
  }
  return kExitOk;
}

}  // namespace

Range parse_range(const std::string& text, const std::string& what) {
  const auto parts = split(text, ':');
  Range range;
  if (parts.size() == 1) {
    range = Range::fixed(parse_double(parts[0], what));
  } else if (parts.size() == 3) {
    const double start = parse_double(parts[0], what);
    const double stop = parse_double(parts[1], what);
    long long count = 0;
    const auto& c = parts[2];
    const auto res = std::from_chars(c.data(), c.data() + c.size(), count);
    if (res.ec != std::errc{} || res.ptr != c.data() + c.size() || count < 2) {
      throw InvalidArgument(what + ": sample count must be an integer >= 2");
    }
    range = {start, stop, static_cast<std::size_t>(count)};
  } else {
    throw InvalidArgument(what + ": expected a value or start:stop:count");
  }
  range.validate(what);
  return range;
}

std::pair<double, double> parse_interval(const std::string& text, const std::string& what) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) {
    throw InvalidArgument(what + ": expected start:stop");
  }
  const double lo = parse_double(parts[0], what);
  const double hi = parse_double(parts[1], what);
  if (!(hi > lo)) {
    throw InvalidArgument(what + ": interval stop must exceed start");
  }
  return {lo, hi};
}

Vec3 parse_vec3(const std::string& text, const std::string& what) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) {
    throw InvalidArgument(what + ": expected x,y,z");
  }
  return {parse_double(parts[0], what), parse_double(parts[1], what), parse_double(parts[2], what)};
}

std::map<std::string, std::string> parse_config(std::istream& in) {
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgument("config line " + std::to_string(lineno) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw InvalidArgument("config line " + std::to_string(lineno) + ": empty key or value");
    }
    out[std::move(key)] = std::move(value);
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << "error: missing program name\n";
    return kExitUsage;
  }
  try {
    auto holder = std::make_unique<Args>();
    auto app = build_app(*holder);
    bool done = false;
    int status = parse(*app, args, out, err, done);
    if (done) return status;

    if (!holder->common.config.empty()) {
      const CLI::App* sub = app->get_subcommands().front();
      const auto merged = merge_config(args, *sub, holder->common.config);
      holder = std::make_unique<Args>();
      app = build_app(*holder);
      status = parse(*app, merged, out, err, done);
      if (done) return status;
    }
    return dispatch(*app, *holder, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
}

}  // namespace reactive::cli
