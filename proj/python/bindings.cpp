#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nullkit/cli.hpp"
#include "nullkit/noether.hpp"
#include "nullkit/nullsatz.hpp"
#include "nullkit/resultant.hpp"
#include "nullkit/unifactor.hpp"

namespace py = pybind11;
using namespace nullkit;

namespace {

std::vector<std::string> render(const std::vector<MultiPoly>& polys) {
  std::vector<std::string> out;
  for (const MultiPoly& f : polys) out.push_back(f.to_string());
  return out;
}

std::size_t var_index(const Ideal& ideal, const std::string& name) {
  const std::size_t i = ideal.ring()->index_of(name);
  if (i == ideal.ring()->nvars()) throw Error(ErrorKind::UnknownVariable, "unknown variable " + name);
  return i;
}

MultiPoly poly(const Ideal& ideal, const std::string& text) { return cli::parse_poly(text, ideal.ring()); }

py::dict maximal_ideal(const Ideal& ideal, std::uint64_t seed) {
  MaxIdealOptions opts;
  opts.seed = seed;
  MaximalIdealResult m = maximal_ideal_containing(ideal, opts);
  py::list automorphisms;
  for (const AutomorphismRecord& a : m.automorphisms) {
    automorphisms.append(py::dict(py::arg("level") = a.level, py::arg("base") = a.map.base,
                                  py::arg("shifts") = a.map.shifts));
  }
  return py::dict(py::arg("chain") = render(m.chain.polys), py::arg("automorphisms") = automorphisms,
                  py::arg("generators") = render(m.generators), py::arg("residue_degree") = m.residue_degree,
                  py::arg("verified") = m.verification.ok(m.residue_degree));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ideals over GF(p) and QQ: Groebner bases, maximal ideals, radical membership";

  py::register_exception<Error>(m, "NullkitError", PyExc_ValueError);

  py::class_<Ideal>(m, "Ideal")
      .def(py::init([](const std::string& text) { return cli::parse_ideal(text); }), py::arg("text"),
           "Parse the ideal file format: a field line, a vars line, one generator per line.")
      .def_property_readonly("field", [](const Ideal& I) { return I.ring()->field()->name(); })
      .def_property_readonly("vars", [](const Ideal& I) { return I.ring()->vars(); })
      .def_property_readonly("generators", [](const Ideal& I) { return render(I.generators()); })
      .def("groebner_basis", [](const Ideal& I) { return render(I.basis().elements()); })
      .def("is_proper", [](const Ideal& I) { return is_proper(I); })
      .def("contains", [](const Ideal& I, const std::string& f) { return member(poly(I, f), I); }, py::arg("f"))
      .def("reduce", [](const Ideal& I, const std::string& f) { return reduce(poly(I, f), I.basis()).to_string(); },
           py::arg("f"))
      .def("quotient_dimension", [](const Ideal& I) { return quotient_dimension(I); },
           "Dimension of the quotient as a vector space, or None when infinite.")
      .def("is_field", [](const Ideal& I) { return is_field(I); })
      .def("radical_contains", [](const Ideal& I, const std::string& f) { return radical_member(poly(I, f), I); },
           py::arg("f"))
      .def("inverse", [](const Ideal& I, const std::string& f) { return quotient_inverse(poly(I, f), I).to_string(); },
           py::arg("f"))
      .def("maximal_ideal", &maximal_ideal, py::arg("seed") = 0)
      .def("resultant",
           [](const Ideal& I, const std::string& f, const std::string& g, const std::string& var) {
             return resultant(poly(I, f), poly(I, g), var_index(I, var)).to_string();
           },
           py::arg("f"), py::arg("g"), py::arg("var"))
      .def("normalize",
           [](const Ideal& I, const std::string& f) {
             const MultiPoly p = poly(I, f);
             MonicizingMap map = build_monicizer(p);
             return py::dict(py::arg("base") = map.base, py::arg("shifts") = map.shifts,
                             py::arg("transformed") = apply_monicizer(map, p).to_string(),
                             py::arg("predicted_degree") = predicted_degree(map, p));
           },
           py::arg("f"))
      .def("factor",
           [](const Ideal& I, const std::string& f, std::uint64_t seed) {
             Factorization fac = factor(poly(I, f), seed);
             std::vector<std::pair<std::string, std::size_t>> out;
             for (const Factor& x : fac.factors) out.emplace_back(x.poly.to_string(), x.multiplicity);
             return out;
           },
           py::arg("f"), py::arg("seed") = 0, "Factor a univariate polynomial into monic irreducibles.")
      .def("__str__", [](const Ideal& I) { return cli::render_ideal(I); })
      .def("__repr__", [](const Ideal& I) { return "Ideal(" + I.to_string() + ")"; });

  m.def(
      "run",
      [](const std::vector<std::string>& args, const std::string& input) {
        std::istringstream in(input);
        std::ostringstream out, err;
        const int code = cli::run(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("input") = "", "Run a CLI command in process; returns (exit code, stdout, stderr).");
}
