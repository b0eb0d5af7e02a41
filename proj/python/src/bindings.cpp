#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "levi_slope/group_spec.hpp"
#include "levi_slope/report.hpp"
#include "levi_slope/verify.hpp"

namespace py = pybind11;
using namespace levi_slope;

namespace {

IntVector to_lift(const std::vector<long>& v) { return to_int_vector(v); }

std::vector<long> from_ints(const IntVector& v) {
  std::vector<long> out;
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw CapExceeded("integer too large for the Python bridge");
    out.push_back(x.get_si());
  }
  return out;
}

std::vector<std::string> from_rats(const RatVector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::vector<std::vector<long>> from_matrix(const IntMatrix& m) {
  std::vector<std::vector<long>> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(from_ints(m.row(i)));
  return out;
}

Isogeny isogeny_of(const std::string& s) {
  auto iso = parse_isogeny(s);
  if (!iso) throw InvalidInput("isogeny must be adjoint or simply_connected");
  return *iso;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact root-datum computations: slopes, minimal parabolics, relative Weyl groups";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_AssertionError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);

  py::class_<RootDatum>(m, "RootDatum")
      .def_property_readonly("name", &RootDatum::name)
      .def_property_readonly("rank", &RootDatum::rank)
      .def_property_readonly("num_simple", &RootDatum::num_simple)
      .def_property_readonly("dynkin_type", &RootDatum::dynkin_label)
      .def_property_readonly("cartan", [](const RootDatum& d) { return from_matrix(d.cartan()); })
      .def_property_readonly("coroots", [](const RootDatum& d) { return from_matrix(d.coroots()); })
      .def_property_readonly("roots", [](const RootDatum& d) { return from_matrix(d.roots()); })
      .def("to_json", [](const RootDatum& d) { return datum_to_json(d).dump(); })
      .def("__repr__", [](const RootDatum& d) { return "<RootDatum " + d.name() + ">"; });

  m.def("simple", [](const std::string& type, const std::string& iso) {
    const auto [t, r] = parse_simple_type(type);
    return build_simple(t, r, isogeny_of(iso));
  }, py::arg("type"), py::arg("isogeny") = "adjoint");
  m.def("gl", &build_gl, py::arg("n"));
  m.def("product", [](const std::string& spec, const std::string& iso) {
    GroupRequest r;
    r.product = spec;
    r.isogeny = isogeny_of(iso);
    return resolve_group(r);
  }, py::arg("spec"), py::arg("isogeny") = "adjoint");
  m.def("from_json", [](const std::string& text) { return datum_from_json(nlohmann::json::parse(text)); });
  m.def("degree_lift", [](const RootDatum& d, const std::vector<long>& k) { return from_ints(degree_lift(d, k)); });
  m.def("pi1_torsion", [](const RootDatum& d) { return from_ints(pi1(d).torsion_invariants()); });

  m.def("minimal_parabolic", [](const RootDatum& d, const std::vector<long>& lift) {
    const auto mr = minimal_admissible(d, to_lift(lift));
    return py::make_tuple(mr.parabolic.one_based(), from_ints(mr.degree.lift), from_rats(mr.g_slope));
  }, py::arg("datum"), py::arg("lift"), "(1-based nodes, canonical degree lift, slope as strings)");
  m.def("brute_force_parabolic", [](const RootDatum& d, const std::vector<long>& lift) {
    return brute_force_minimal(d, to_lift(lift)).parabolic.one_based();
  });
  m.def("slope", [](const RootDatum& d, const std::vector<std::size_t>& nodes, const std::vector<long>& lift) {
    return from_rats(slope(d, Degree{Parabolic::from_one_based(nodes), to_lift(lift)}));
  }, py::arg("datum"), py::arg("nodes"), py::arg("lift"));
  m.def("relative_weyl_type", [](const RootDatum& d, const std::vector<std::size_t>& nodes,
                                  std::uint64_t orbit_cap) {
    const auto rw = relative_weyl(d, Parabolic::from_one_based(nodes), orbit_cap);
    const auto t = identify_coxeter_type(rw, d);
    py::dict out;
    out["order"] = rw.order();
    out["type"] = t.abstract_label();
    out["c_convention_label"] = t.c_convention_label();
    out["generated_by_reflections"] = t.generated_by_reflections;
    out["faithful"] = acts_faithfully_on_quotient(d, rw);
    return out;
  }, py::arg("datum"), py::arg("nodes"), py::arg("orbit_cap") = kTableOrbitCap);
  m.def("stable_exists", [](const RootDatum& d, const std::vector<long>& lift) {
    return stable_exists_typeA(d, to_lift(lift)).exists_stable;
  });
  m.def("normalize_coxeter_label", &normalize_coxeter_label);

  m.def("analyze_json", [](const RootDatum& d, const std::vector<long>& lift, std::uint64_t orbit_cap) {
    AnalysisOptions o;
    o.orbit_cap = orbit_cap;
    py::gil_scoped_release release;
    return analysis_report(d, to_lift(lift), o).dump();
  }, py::arg("datum"), py::arg("lift"), py::arg("orbit_cap") = kDefaultOrbitCap);
  m.def("table_json", [](int max_rank, const std::string& families) {
    TableOptions o;
    o.max_rank = max_rank;
    o.families = families;
    py::gil_scoped_release release;
    return table_json(build_table(o)).dump();
  }, py::arg("max_rank") = 8, py::arg("families") = "ABCDE");
  m.def("verify_json", [](int max_rank) {
    VerifyOptions o;
    o.max_rank = max_rank;
    py::gil_scoped_release release;
    return verify_json(run_verify(o), false).dump();
  }, py::arg("max_rank") = 3);
}
