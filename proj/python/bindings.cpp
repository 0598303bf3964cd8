#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "steinitz/errors.hpp"
#include "steinitz/oracle.hpp"
#include "steinitz/text.hpp"

namespace py = pybind11;
using namespace steinitz;

namespace {

py::int_ to_py(const BigInt& n) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(n.str().c_str(), nullptr, 10))); }

BigInt from_py(const py::int_& n) { return parse_bigint(py::str(n).cast<std::string>()); }

py::object extended(const ExtendedNatural& e) {
  if (e.is_infinite()) return py::float_(INFINITY);
  return to_py(e.value());
}

py::tuple ratio(const PositiveRational& q) { return py::make_tuple(to_py(q.num()), to_py(q.den())); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Steinitz numbers, saturated sets and spectra of locally matrix algebras";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<SteinitzNumber>(m, "SteinitzNumber")
      .def(py::init([](const std::string& text) { return eval_steinitz(text); }), py::arg("text"))
      .def("valuation", [](const SteinitzNumber& s, Prime p) { return extended(s.valuation(p)); })
      .def_property_readonly("is_natural", &SteinitzNumber::is_natural)
      .def_property_readonly("is_infinite", &SteinitzNumber::is_infinite)
      .def_property_readonly("is_infinity_free", &SteinitzNumber::is_infinity_free)
      .def("__mul__", [](const SteinitzNumber& a, const SteinitzNumber& b) { return a * b; })
      .def("__eq__", [](const SteinitzNumber& a, const SteinitzNumber& b) { return a == b; })
      .def("__hash__", [](const SteinitzNumber& s) { return py::hash(py::str(format(s))); })
      .def("__str__", [](const SteinitzNumber& s) { return format(s); })
      .def("__repr__", [](const SteinitzNumber& s) { return "SteinitzNumber('" + format(s) + "')"; });

  m.def("parse", [](const std::string& text) { return parse_steinitz(text); }, py::arg("text"));
  m.def("evaluate", [](const std::string& text) { return eval_steinitz(text); }, py::arg("text"));
  m.def("omega_contains", [](const SteinitzNumber& s, const py::int_& n) { return omega_contains(s, from_py(n)); });
  m.def("divides", &divides);
  m.def("finitely_divides", [](const SteinitzNumber& a, const SteinitzNumber& b) -> py::object {
    auto q = finitely_divides(a, b);
    if (!q) return py::none();
    return to_py(*q);
  });
  m.def("rationally_connected", &rationally_connected);
  m.def("canonical_ratio", [](const SteinitzNumber& a, const SteinitzNumber& b) { return ratio(canonical_ratio(a, b)); });
  m.def("lcm", [](const SteinitzNumber& a, const SteinitzNumber& b) { return lcm(a, b); });
  m.def("multiply", [](const SteinitzNumber& s, const py::int_& n) { return mul_natural(s, from_py(n)); });
  m.def("divide", [](const SteinitzNumber& s, const py::int_& b) { return divide_by(s, from_py(b)); });
  m.def("enumerate_omega", &enumerate_omega, py::arg("s"), py::arg("bound"));

  py::class_<SaturatedSet>(m, "SaturatedSet")
      .def(py::init([](const std::string& text) { return parse_set(text); }), py::arg("text"))
      .def_property_readonly("kind", [](const SaturatedSet& s) {
        switch (s.kind()) {
          case SetKind::Segment:
            return "segment";
          case SetKind::AllNaturals:
            return "all-naturals";
          case SetKind::InfiniteType:
            return "infinite-type";
          case SetKind::FiniteType:
            break;
        }
        return "finite-type";
      })
      .def_property_readonly("is_strict", &SaturatedSet::is_strict)
      .def("__contains__", [](const SaturatedSet& s, const SteinitzNumber& t) { return contains(s, t); })
      .def("__contains__", [](const SaturatedSet& s, const std::string& t) { return contains(s, eval_steinitz(t)); })
      .def("__str__", &SaturatedSet::str)
      .def("__repr__", [](const SaturatedSet& s) { return "SaturatedSet('" + s.str() + "')"; });

  m.def("r_sub", [](const SaturatedSet& s, const SteinitzNumber& t, const py::int_& b) {
    return extended(r_sub(s, t, from_py(b)));
  });
  m.def("density", [](const SaturatedSet& s, const SteinitzNumber& t) { return density(s, t).str(); });
  m.def("max_element", [](const SaturatedSet& s) { return max_element(s); });
  m.def("compare_inclusion", [](const SaturatedSet& a, const SaturatedSet& b) { return to_string(compare_inclusion(a, b)); });
  m.def("equals_formal", &equals_formal);
  m.def("equals_extensional", &equals_extensional, py::arg("a"), py::arg("b"), py::arg("samples") = 100,
        py::arg("seed") = 1);
  m.def("check_saturation_axioms", [](const SaturatedSet& s, std::size_t samples, std::uint64_t seed) {
    AxiomReport r = check_saturation_axioms(s, samples, seed);
    return py::make_tuple(r.passed, r.failed_axiom, r.witness);
  }, py::arg("set"), py::arg("samples") = 1000, py::arg("seed") = 1);

  py::class_<AlgebraDescriptor>(m, "Algebra")
      .def(py::init([](const std::string& text) { return parse_algebra(text); }), py::arg("text"))
      .def_readonly("spectrum", &AlgebraDescriptor::spectrum)
      .def_readonly("collapsed", &AlgebraDescriptor::collapsed)
      .def_property_readonly("st", [](const AlgebraDescriptor& a) { return steinitz_number_of(a); })
      .def("__str__", &format_algebra)
      .def("__repr__", [](const AlgebraDescriptor& a) { return "Algebra('" + format_algebra(a) + "')"; });

  m.def("spec_matrix", [](const py::int_& n) { return spec_matrix(from_py(n)); });
  m.def("spec_unital", &spec_unital);
  m.def("m_infinity", &m_infinity);
  m.def("matrix_over", [](const AlgebraDescriptor& a, const py::int_& n) { return matrix_over(a, from_py(n)); });
  m.def("corner", [](const AlgebraDescriptor& a, const py::int_& num, const py::int_& den) {
    return corner(a, PositiveRational(from_py(num), from_py(den)));
  });
  m.def("is_unital", &is_unital);
  m.def("isomorphic", &isomorphic);
  m.def("embeds", &embeds_as_approximative_corner, py::arg("b"), py::arg("a"));
  m.def("realize", [](const SaturatedSet& s, std::optional<std::vector<py::int_>> divisors, std::size_t stages) {
    std::optional<std::vector<BigInt>> chain;
    if (divisors) {
      chain.emplace();
      for (const py::int_& b : *divisors) chain->push_back(from_py(b));
    }
    return format_chain(realize(s, chain, stages));
  }, py::arg("set"), py::arg("divisors") = py::none(), py::arg("stages") = 4);
  m.def("spectrum_of_chain", [](const std::string& chain) { return spectrum_of_chain(parse_chain(chain)); });

  m.def("check", [](const std::string& suite, std::uint64_t seed, std::uint64_t bound) {
    oracle::Report r;
    if (suite == "all" || suite == "saturation") r.append(oracle::saturation_suite(seed, 1000));
    if (suite == "all" || suite == "inequalities") r.append(oracle::inequality_suite(bound));
    if (suite == "all" || suite == "roundtrip") r.append(oracle::roundtrip_suite(seed));
    if (r.lines.empty()) throw py::value_error("unknown suite '" + suite + "'");
    return py::make_tuple(r.passed(), r.text());
  }, py::arg("suite") = "all", py::arg("seed") = 1, py::arg("bound") = 210);
}
