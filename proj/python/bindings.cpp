#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "reactive/analysis.hpp"
#include "reactive/diagnostics.hpp"
#include "reactive/errors.hpp"
#include "reactive/field.hpp"
#include "reactive/nodes.hpp"
#include "reactive/relativity.hpp"
#include "reactive/scan.hpp"
#include "reactive/sources.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace pybind11::literals;
using namespace reactive;

namespace {

Range range_from(py::object obj) {
  if (py::isinstance<py::float_>(obj) || py::isinstance<py::int_>(obj)) {
    return Range::fixed(obj.cast<double>());
  }
  auto [start, stop, count] = obj.cast<std::tuple<double, double, std::size_t>>();
  return {start, stop, count};
}

// Columns follow the CLI scan layout: t,x,y,z,E,B,U,S,R,I,v,v_defined.
py::array_t<double> scan_table(const FieldSource& source, py::object x, py::object y, py::object z,
                               py::object t, const UnitSystem& units) {
  GridRegion region{range_from(x), range_from(y), range_from(z)};
  const GridScan grid = scan(source, region, range_from(t), units);
  py::array_t<double> out({grid.records.size(), std::size_t{20}});
  auto view = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < grid.records.size(); ++i) {
    const auto& r = grid.records[i];
    const auto& d = r.diagnostics;
    const double row[20] = {r.point.t, r.point.r.x, r.point.r.y, r.point.r.z, r.field.e.x,
                            r.field.e.y, r.field.e.z, r.field.b.x, r.field.b.y, r.field.b.z,
                            d.u, d.s.x, d.s.y, d.s.z, d.r_density, d.inertia,
                            d.v.x, d.v.y, d.v.z, d.v_defined ? 1.0 : 0.0};
    for (py::ssize_t j = 0; j < 20; ++j) view(static_cast<py::ssize_t>(i), j) = row[j];
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Reactive energy density, inertia and energy-flow velocity of analytic EM fields";

  // Translators run newest first, so subclasses are registered after their base.
  auto& computation_error =
      py::register_exception<ComputationError>(m, "ComputationError", PyExc_RuntimeError);
  py::register_exception<SingularityError>(m, "SingularityError", computation_error.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", computation_error.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", computation_error.ptr());
  py::register_exception<UnderflowError>(m, "UnderflowError", computation_error.ptr());

  py::class_<Vec3>(m, "Vec3")
      .def(py::init<>())
      .def(py::init<double, double, double>(), "x"_a, "y"_a, "z"_a)
      .def(py::init([](const py::tuple& t) {
        if (t.size() != 3) throw InvalidArgument("Vec3 needs exactly three components");
        return Vec3{t[0].cast<double>(), t[1].cast<double>(), t[2].cast<double>()};
      }))
      .def_readwrite("x", &Vec3::x)
      .def_readwrite("y", &Vec3::y)
      .def_readwrite("z", &Vec3::z)
      .def("__iter__", [](const Vec3& v) { return py::iter(py::make_tuple(v.x, v.y, v.z)); })
      .def("__eq__", [](const Vec3& a, const Vec3& b) { return a == b; })
      .def("__repr__", [](const Vec3& v) {
        std::ostringstream os;
        os << "Vec3" << v;
        return os.str();
      });
  py::implicitly_convertible<py::tuple, Vec3>();
  m.def("dot", &dot);
  m.def("cross", &cross);
  m.def("norm", &norm);

  py::class_<SpaceTimePoint>(m, "SpaceTimePoint")
      .def(py::init<Vec3, double>(), "r"_a, "t"_a)
      .def_readwrite("r", &SpaceTimePoint::r)
      .def_readwrite("t", &SpaceTimePoint::t);

  py::class_<EMField>(m, "EMField")
      .def(py::init<>())
      .def(py::init<Vec3, Vec3>(), "e"_a, "b"_a)
      .def_readwrite("e", &EMField::e)
      .def_readwrite("b", &EMField::b)
      .def("__add__", [](const EMField& a, const EMField& b) { return a + b; });

  py::class_<UnitSystem>(m, "UnitSystem")
      .def(py::init<>())
      .def(py::init<double>(), "c"_a)
      .def_property_readonly("c", &UnitSystem::c);

  py::class_<FieldSource>(m, "FieldSource")
      .def("__call__", [](const FieldSource& s, const Vec3& r, double t) { return s.evaluate({r, t}); },
           "r"_a, "t"_a)
      .def("evaluate", &FieldSource::evaluate)
      .def_property_readonly("name", &FieldSource::name)
      .def_property_readonly("source_free", &FieldSource::source_free);
  m.def("superpose", [](const std::vector<FieldSource>& s) { return superpose(s); });

  py::class_<DiagnosticSample>(m, "DiagnosticSample")
      .def_readonly("u", &DiagnosticSample::u)
      .def_readonly("s", &DiagnosticSample::s)
      .def_readonly("r_density", &DiagnosticSample::r_density)
      .def_readonly("inertia", &DiagnosticSample::inertia)
      .def_readonly("v", &DiagnosticSample::v)
      .def_readonly("v_defined", &DiagnosticSample::v_defined);

  py::class_<InvariantPair>(m, "InvariantPair")
      .def_readonly("i1", &InvariantPair::i1)
      .def_readonly("i2", &InvariantPair::i2);

  m.def("energy_density", &energy_density);
  m.def("poynting", &poynting);
  m.def("reactive_density_direct", &reactive_density_direct);
  m.def("reactive_density_invariant", &reactive_density_invariant);
  m.def("invariants", &invariants);
  m.def("is_null", &is_null, "f"_a, "tol"_a = 1e-12);
  m.def("inertia_density", &inertia_density, "f"_a, "units"_a = UnitSystem());
  m.def("flow_velocity", [](const EMField& f, const UnitSystem& u) {
    const FlowVelocity v = flow_velocity(f, u);
    return py::make_tuple(v.v, v.defined);
  }, "f"_a, "units"_a = UnitSystem());
  m.def("diagnose", &diagnose, "f"_a, "units"_a = UnitSystem());

  m.def("traveling_plane_wave",
        [](double amplitude, double omega, int direction, const Vec3& pol, const UnitSystem& u) {
          if (direction != 1 && direction != -1) throw InvalidArgument("direction must be +1 or -1");
          return traveling_plane_wave({amplitude, omega, static_cast<Propagation>(direction), pol}, u);
        },
        "amplitude"_a = 1.0, "omega"_a = 1.0, "direction"_a = 1, "polarization"_a = kUnitX,
        "units"_a = UnitSystem());
  m.def("standing_plane_wave", &standing_plane_wave, "amplitude"_a = 1.0, "omega"_a = 1.0,
        "units"_a = UnitSystem());
  m.def("gaussian_dipole",
        [](double amplitude, double tau, double omega0, double t0, const UnitSystem& u) {
          return electric_dipole(gaussian_waveform(amplitude, tau, omega0, t0), u);
        },
        "amplitude"_a = 1.0, "tau"_a = 1.0, "omega0"_a = 0.0, "t0"_a = 0.0, "units"_a = UnitSystem());
  m.def("static_dipole",
        [](double p0, const UnitSystem& u) { return electric_dipole(static_waveform(p0), u); },
        "p0"_a = 1.0, "units"_a = UnitSystem());

  py::class_<Boost>(m, "Boost")
      .def(py::init<Vec3>(), "beta"_a)
      .def_property_readonly("beta", &Boost::beta)
      .def_property_readonly("gamma", &Boost::gamma)
      .def("inverse", &Boost::inverse);
  m.def("boost_event", &boost_event, "p"_a, "boost"_a, "units"_a = UnitSystem());
  m.def("boost_field", &boost_field, "f"_a, "boost"_a);
  m.def("boosted_source", &boosted_source, "source"_a, "boost"_a, "units"_a = UnitSystem());

  m.def("scan", &scan_table, "source"_a, "x"_a = 0.0, "y"_a = 0.0, "z"_a = 0.0, "t"_a = 0.0,
        "units"_a = UnitSystem(),
        "Sample a source on a grid. Each axis is a float or a (start, stop, count) tuple.");

  m.def("find_nodes",
        [](const std::function<double(double)>& profile, double lo, double hi, double abs_tol,
           std::size_t grid) {
          const NodeSet set = find_nodes(profile, lo, hi, {abs_tol, grid, 1e-9});
          std::vector<std::pair<double, double>> out;
          for (const Node& n : set.nodes) out.emplace_back(n.position, n.value);
          return out;
        },
        "profile"_a, "lo"_a, "hi"_a, "abs_tol"_a = 1e-8, "initial_grid"_a = 512);

  m.def("undefined_velocity_events",
        [](double amplitude, double omega, double c, double z_min, double z_max, double t_min,
           double t_max) {
          std::vector<std::pair<double, double>> out;
          for (const LatticeEvent& ev : undefined_velocity_events({amplitude, omega, c},
                                                                  {z_min, z_max, t_min, t_max})) {
            out.emplace_back(ev.z, ev.t);
          }
          return out;
        },
        "amplitude"_a, "omega"_a, "c"_a, "z_min"_a, "z_max"_a, "t_min"_a, "t_max"_a);

  py::class_<ResidualReport>(m, "ResidualReport")
      .def_readonly("point", &ResidualReport::point)
      .def_readonly("h_t", &ResidualReport::h_t)
      .def_readonly("h_x", &ResidualReport::h_x)
      .def_readonly("residual", &ResidualReport::residual)
      .def_readonly("residual_half", &ResidualReport::residual_half)
      .def_readonly("ratio", &ResidualReport::ratio);
  m.def("poynting_residual", &poynting_residual, "source"_a, "p"_a, "h_t"_a, "h_x"_a,
        "units"_a = UnitSystem());

  m.def("cross_invariants", &cross_invariants);

  m.def("decay_exponent",
        [](const FieldSource& s, const Vec3& direction, const std::vector<double>& radii,
           double time, bool retarded, const UnitSystem& u) {
          const DecayResult d = decay_exponent(s, direction, radii, {time, retarded}, u);
          return py::make_tuple(d.slope_u, d.slope_r ? py::cast(*d.slope_r) : py::none());
        },
        "source"_a, "direction"_a, "radii"_a, "time"_a = 0.0, "retarded"_a = false,
        "units"_a = UnitSystem());

  m.def("time_averaged_flow_velocity",
        [](const FieldSource& s, const Vec3& r, double omega, const UnitSystem& u, std::size_t n) {
          const AveragedFlow a = time_averaged_flow_velocity(s, r, omega, u, n);
          return py::make_tuple(a.v, a.defined);
        },
        "source"_a, "r"_a, "omega"_a, "units"_a = UnitSystem(), "quadrature_points"_a = 64);

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
