#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "lexbetti/errors.hpp"
#include "lexbetti/ideal.hpp"
#include "lexbetti/macaulay.hpp"
#include "lexbetti/monoset.hpp"
#include "lexbetti/oracle.hpp"

namespace py = pybind11;
using namespace lexbetti;

namespace {

std::vector<Monomial> to_monomials(const std::vector<std::vector<int>>& exps) {
  std::vector<Monomial> out;
  out.reserve(exps.size());
  for (const auto& e : exps) out.emplace_back(e);
  return out;
}

std::vector<std::vector<int>> to_exponents(const std::vector<Monomial>& mons) {
  std::vector<std::vector<int>> out;
  out.reserve(mons.size());
  for (const Monomial& m : mons) out.push_back(m.exponents());
  return out;
}

std::string ideal_repr(const MonomialIdeal& ideal) {
  std::ostringstream ss;
  ss << "MonomialIdeal(vars=" << ideal.vars() << ", generators=[";
  const auto& gens = ideal.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    ss << (i ? ", " : "") << gens[i].str();
  ss << "])";
  return ss.str();
}

}  // namespace

PYBIND11_MODULE(lexbetti, m) {
  m.doc() = "Sharp upper bounds for the Betti numbers of homogeneous ideals "
            "with a given Hilbert function, via lex-segment ideals";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError");
  py::register_exception<SizeGuardError>(m, "SizeGuardError");

  py::class_<MonomialIdeal>(m, "MonomialIdeal")
      .def_property_readonly("vars", &MonomialIdeal::vars)
      .def_property_readonly(
          "generators",
          [](const MonomialIdeal& I) { return to_exponents(I.generators()); })
      .def_property_readonly("is_zero", &MonomialIdeal::is_zero)
      .def_property_readonly("max_generator_degree",
                             &MonomialIdeal::max_generator_degree)
      .def("contains",
           [](const MonomialIdeal& I, const std::vector<int>& exps) {
             return I.contains(Monomial(exps));
           },
           py::arg("exponents"))
      .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; })
      .def("__repr__", &ideal_repr);

  py::class_<HilbertFunction>(m, "HilbertFunction")
      .def(py::init([](int vars, std::vector<Count> values) {
             return HilbertFunction{vars, std::move(values)};
           }),
           py::arg("vars"), py::arg("values"))
      .def_readonly("vars", &HilbertFunction::vars)
      .def_readonly("values", &HilbertFunction::values)
      .def("at", &HilbertFunction::at, py::arg("degree"))
      .def_property_readonly("max_degree", &HilbertFunction::max_degree)
      .def("__eq__", [](const HilbertFunction& a, const HilbertFunction& b) { return a == b; })
      .def("__repr__", [](const HilbertFunction& h) {
        std::ostringstream ss;
        ss << "HilbertFunction(vars=" << h.vars << ", values=[";
        for (std::size_t i = 0; i < h.values.size(); ++i)
          ss << (i ? ", " : "") << h.values[i];
        ss << "])";
        return ss.str();
      });

  py::class_<BettiTable>(m, "BettiTable")
      .def_readonly("vars", &BettiTable::vars)
      .def_readonly("betas", &BettiTable::betas)
      .def_readonly("by_degree", &BettiTable::by_degree)
      .def("__eq__", [](const BettiTable& a, const BettiTable& b) { return a == b; })
      .def("__repr__", [](const BettiTable& t) {
        std::ostringstream ss;
        ss << "BettiTable(betas=[";
        for (std::size_t q = 0; q < t.betas.size(); ++q)
          ss << (q ? ", " : "") << t.betas[q];
        ss << "])";
        return ss.str();
      });

  py::class_<Classification>(m, "Classification")
      .def_readonly("is_lex", &Classification::is_lex)
      .def_readonly("is_borel", &Classification::is_borel)
      .def_readonly("is_stable", &Classification::is_stable);

  py::class_<AdmissibilityReport>(m, "AdmissibilityReport")
      .def_readonly("ok", &AdmissibilityReport::ok)
      .def_readonly("first_violation", &AdmissibilityReport::first_violation)
      .def_readonly("reason", &AdmissibilityReport::reason);

  py::class_<GeneratorProfile>(m, "GeneratorProfile")
      .def_readonly("new_generators", &GeneratorProfile::new_generators)
      .def_readonly("max_degree", &GeneratorProfile::max_degree)
      .def_readonly("stabilized", &GeneratorProfile::stabilized);

  py::class_<TaylorReport>(m, "TaylorReport")
      .def_readonly("generator_count", &TaylorReport::generator_count)
      .def_readonly("chain_dims", &TaylorReport::chain_dims)
      .def_readonly("ranks", &TaylorReport::ranks)
      .def_readonly("betas", &TaylorReport::betas);

  m.def("ideal",
        [](int vars, const std::vector<std::vector<int>>& generators) {
          return MonomialIdeal::minimalize(to_monomials(generators), vars);
        },
        py::arg("vars"), py::arg("generators"),
        "Monomial ideal from exponent vectors; redundant generators are dropped");
  m.def("zero_ideal", &MonomialIdeal::zero, py::arg("vars"));

  m.def("classify", &classify, py::arg("ideal"),
        "lex / Borel / stable flags of a monomial ideal");
  m.def("hilbert", &hilbert, py::arg("ideal"), py::arg("max_degree"),
        "slice sizes of the ideal up to max_degree");
  m.def("hilbert_stabilized", &hilbert_stabilized, py::arg("ideal"),
        py::arg("cap") = 64,
        "slice sizes extended until the tail carries no new lex generators");
  m.def("ek_betti", &ek_betti, py::arg("ideal"),
        "graded Betti numbers of a stable ideal, generator by generator");
  m.def("betti_by_degree", &betti_by_degree, py::arg("ideal"),
        "the same table computed from graded slices alone");
  m.def("taylor_betti", &taylor_betti, py::arg("ideal"),
        py::arg("size_guard") = kDefaultSizeGuard,
        "Betti numbers via the Taylor complex, the independent oracle");
  m.def("taylor_report",
        [](const std::vector<std::vector<int>>& generators, int vars, int size_guard) {
          return taylor_report(to_monomials(generators), vars, size_guard);
        },
        py::arg("generators"), py::arg("vars"),
        py::arg("size_guard") = kDefaultSizeGuard,
        "raw Taylor complex data for any generating list");
  m.def("lex_ideal", &lex_ideal, py::arg("hilbert"),
        "the unique lex ideal with the given Hilbert data");
  m.def("closed_form_betti", &closed_form_betti, py::arg("hilbert"),
        "Betti table of the lex ideal from the Hilbert data alone: the sharp "
        "upper bound for every ideal with these slice sizes");
  m.def("beta1_closed_form", &beta1_closed_form, py::arg("hilbert"),
        "first syzygy count straight from the Hilbert data");
  m.def("bound_for", &bound_for, py::arg("ideal"), py::arg("max_degree") = -1,
        "closed-form bound computed from the ideal's own Hilbert data");
  m.def("dominates", &dominates, py::arg("upper"), py::arg("lower"));
  m.def("is_admissible", &is_admissible, py::arg("hilbert"),
        "whether the values occur as slice sizes of a monomial ideal");
  m.def("generator_degrees", &generator_degrees, py::arg("hilbert"),
        "degrees and counts of the lex ideal's new generators");

  m.def("min_growth", &min_growth, py::arg("h"), py::arg("vars"),
        "least possible next-degree slice size over h monomials");
  m.def("lex_prefix_count", &lex_prefix_count, py::arg("h"), py::arg("vars"),
        py::arg("index"),
        "how many of the first h lex monomials involve only X1..Xindex");
  m.def("ambient_size", &ambient_size, py::arg("vars"), py::arg("degree"));
  m.def("random_borel_ideal", &random_borel_ideal, py::arg("vars"),
        py::arg("max_degree"), py::arg("seed"), py::arg("density"),
        "seed-deterministic random Borel ideal");
}
