#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ybe/catalog.hpp"
#include "ybe/derive.hpp"
#include "ybe/io.hpp"
#include "ybe/suite.hpp"

namespace py = pybind11;
using namespace ybe;

namespace {

py::dict report_dict(Report const& r) {
  py::dict d;
  for (auto const& c : r.checks) d[py::str(c.name)] = c.passed;
  return d;
}

py::dict solution_dict(SolutionReport const& r) {
  py::dict d;
  d["braid"] = r.braid.holds;
  d["bijective"] = r.bijective.holds;
  d["involutive"] = r.involutive.holds;
  d["left_nondegenerate"] = r.left_nondegenerate.holds;
  d["right_nondegenerate"] = r.right_nondegenerate.holds;
  d["triples_checked"] = r.triples_checked;
  return d;
}

ContainedBrace require_brace(SkewBracoid const& b) {
  auto s = contains_brace(b);
  if (!s.found()) fail(ErrorCode::PreconditionFailed, "bracoid contains no brace");
  return *s.brace;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Skew braces, bracoids, semibraces and Yang-Baxter solutions";

  static py::exception<Error> error(m, "YbeError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (Error const& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<FiniteGroup>(m, "Group")
      .def_static("from_table", &FiniteGroup::from_table, py::arg("order"), py::arg("table"),
                  py::arg("name") = "G")
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("name", &FiniteGroup::name)
      .def_property_readonly("table", &FiniteGroup::table)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("__eq__", [](FiniteGroup const& a, FiniteGroup const& b) { return a == b; });

  m.def("cyclic_group", &cyclic_group);
  m.def("dihedral_group", &dihedral_group);
  m.def("elementary_abelian", &elementary_abelian);

  py::class_<SkewBrace>(m, "SkewBrace")
      .def_static("make", [](FiniteGroup star, FiniteGroup dot) {
        return SkewBrace::make(std::move(star), std::move(dot));
      })
      .def_property_readonly("order", &SkewBrace::order)
      .def_property_readonly("star", &SkewBrace::star)
      .def_property_readonly("dot", &SkewBrace::dot);
  m.def("trivial_brace", &trivial_brace);
  m.def("verify_skew_brace", [](std::size_t n, Table const& star, Table const& dot) {
    return report_dict(verify_skew_brace(n, star, dot));
  });

  py::class_<SkewBracoid>(m, "SkewBracoid")
      .def_readonly("g", &SkewBracoid::g)
      .def_readonly("n", &SkewBracoid::n)
      .def_property_readonly("action", [](SkewBracoid const& b) { return b.act.table; });
  m.def("brace_as_bracoid", &brace_as_bracoid);

  py::class_<ContainedBrace>(m, "ContainedBrace")
      .def_property_readonly("h", [](ContainedBrace const& c) { return c.h.elements; })
      .def_property_readonly("s", [](ContainedBrace const& c) { return c.s.elements; })
      .def_readonly("g", &ContainedBrace::g)
      .def_readonly("star_h", &ContainedBrace::star_h);
  m.def("contains_brace", [](SkewBracoid const& b) {
    auto s = contains_brace(b);
    py::dict d;
    d["stabilizer"] = s.stabilizer.elements;
    std::vector<std::vector<Element>> comps;
    for (auto const& c : s.complements) comps.push_back(c.elements);
    d["complements"] = comps;
    d["brace"] = s.brace ? py::cast(*s.brace) : py::none();
    return d;
  });

  py::class_<Semibrace>(m, "Semibrace")
      .def_static("make", &Semibrace::make)
      .def_property_readonly("order", &Semibrace::order)
      .def_property_readonly("dot", &Semibrace::dot)
      .def_property_readonly("plus", &Semibrace::plus_table)
      .def("add", &Semibrace::add)
      .def("__eq__", [](Semibrace const& a, Semibrace const& b) { return a == b; });
  m.def("bracoid_to_semibrace", [](ContainedBrace const& c) { return bracoid_to_semibrace(c); });
  m.def("semibrace_to_bracoid", &semibrace_to_bracoid);
  m.def("decompose", [](Semibrace const& sb) {
    auto d = decompose(sb);
    return py::make_tuple(d.h_part, d.e_part);
  });
  m.def("roundtrip_bracoid", [](ContainedBrace const& c) { return roundtrip_check(c); });
  m.def("roundtrip_semibrace", [](Semibrace const& s) { return roundtrip_check(s); });

  py::class_<SolutionMap>(m, "Solution")
      .def_readonly("size", &SolutionMap::size)
      .def_readonly("provenance", &SolutionMap::provenance)
      .def("__call__", &SolutionMap::operator())
      .def("__eq__", [](SolutionMap const& a, SolutionMap const& b) { return solutions_equal(a, b); });
  m.def("brace_solution", &brace_solution);
  m.def("solution_from_semibrace", &solution_from_semibrace);
  m.def("solution_from_bracoid", [](ContainedBrace const& c) { return solution_from_bracoid(c); });
  m.def("tilde_solution_from_bracoid",
        [](ContainedBrace const& c) { return tilde_solution_from_bracoid(c); });
  m.def("check_braid", [](SolutionMap const& r) { return solution_dict(check_braid(r)); });

  m.def("example", [](std::string const& name, std::vector<std::size_t> const& params,
                      std::uint64_t seed) { return build_example(name, params, seed).bracoid; },
        py::arg("name"), py::arg("params") = std::vector<std::size_t>{}, py::arg("seed") = 0);
  m.def("example_brace", [](SkewBracoid const& b) { return require_brace(b); });
  m.def("example_names", &example_names);

  m.def("format_bracoid", &format_bracoid);
  m.def("format_semibrace", &format_semibrace);
  m.def("format_solution", &format_solution);
  m.def("parse_solution", &parse_solution);

  m.def("run_suite", [](bool full, std::uint64_t seed) {
    auto r = run_suite({.full = full, .seed = seed, .out = std::nullopt, .live = nullptr});
    return py::make_tuple(r.passed(), r.format(false));
  }, py::arg("full") = false, py::arg("seed") = 0);
}
