#include "realtight/serialize.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "../tools/commands.hpp"

#include <sstream>

namespace py = pybind11;
using namespace rt;

namespace {

std::string dump(const json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_realtight, m) {
  m.doc() = "Exact combinatorics of real tight contact structures";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<Slope>(m, "Slope")
      .def(py::init([](Int num, Int den) { return Slope(num, den); }), py::arg("num"), py::arg("den") = 1)
      .def_static("parse", &Slope::parse)
      .def_static("infinity", &Slope::infinity)
      .def_property_readonly("num", &Slope::num)
      .def_property_readonly("den", &Slope::den)
      .def("is_infinite", &Slope::is_infinite)
      .def("__str__", &Slope::str)
      .def("__repr__", [](const Slope& s) { return "Slope('" + s.str() + "')"; })
      .def("__eq__", [](const Slope& a, const Slope& b) { return a == b; })
      .def("__hash__", [](const Slope& s) { return py::hash(py::make_tuple(s.num(), s.den())); });

  m.def("farey_distance", [](const std::string& a, const std::string& b) {
    return farey_distance(Slope::parse(a), Slope::parse(b)).steps;
  });
  m.def("farey_walk", [](const std::string& a, const std::string& b) {
    std::vector<std::string> out;
    for (const Slope& s : farey_walk(Slope::parse(a), Slope::parse(b))) out.push_back(s.str());
    return out;
  });
  m.def("neg_cf_expand", [](const std::string& s) { return neg_cf_expand(Slope::parse(s)).coeffs; });
  m.def("neg_cf_eval", [](const std::vector<Int>& c) { return neg_cf_eval(c).str(); });
  m.def("catalan", [](int n) { return to_string(catalan(n)); });
  m.def("disk_matchings", [](int n) { return dump(enumerate_disk_matchings(n)); });
  m.def("annulus_systems", [](int n_in, int n_out) { return dump(enumerate_annulus_systems(n_in, n_out)); });
  m.def("replay_proof", [](const std::string& name) { return dump(replay_proof(parse_proof_name(name))); });
  m.def("honda_count_solid_torus", [](const std::string& s) { return honda_count_solid_torus(Slope::parse(s)); });
  m.def("honda_count_lens", &honda_count_lens);
  m.def("count_real_tight", [](const std::string& kind, const std::string& slope, int gamma) {
    return dump(count_real_tight({SolidTorusRealStructure::of(parse_real_kind(kind)), Slope::parse(slope), gamma}));
  }, py::arg("kind"), py::arg("slope"), py::arg("gamma_count") = 2);
  m.def("bounds_table", [](Int lo, Int hi) { return dump(bounds_table_json(bounds_table(lo, hi))); });
  m.def("tb", [](Int p, Int q, const std::string& type) {
    LensType t = parse_lens_type(type);
    if (t == LensType::B) return tb_type_B(p, q).str();
    if (t == LensType::C) return tb_type_C(p, q).str();
    if (t == LensType::Cp) return tb_type_Cprime(p, q).str();
    throw DomainError("tb is computed for types B, C and C'");
  });
  m.def("tb_singularity_link", [](Int p, int sign) { return tb_singularity_link(p, sign).str(); });
  m.def("lens_from_chain", [](const std::vector<Int>& c) { return lens_from_chain({c}).str(); });
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
