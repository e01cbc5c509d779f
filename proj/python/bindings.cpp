#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "nmval/chain.hpp"
#include "nmval/errors.hpp"
#include "nmval/export.hpp"
#include "nmval/filters.hpp"
#include "nmval/formula.hpp"
#include "nmval/free_algebra.hpp"
#include "nmval/models.hpp"
#include "nmval/valuations.hpp"

namespace py = pybind11;
using namespace nmval;

namespace {

// Formulas cross the boundary as text; rationals as "p/q" strings.
std::string eval_chain_text(const std::string& text, int k, const std::map<int, int>& assignment) {
  const Chain c(k);
  ChainAssignment a;
  for (auto [var, idx] : assignment) a[var] = value(c, idx);
  return eval_chain(parse(text), c, a).as_rational().str();
}

std::string eval_standard_text(const std::string& text, const std::map<int, std::string>& assignment) {
  StandardAssignment a;
  for (const auto& [var, r] : assignment) a[var] = Rational::parse(r);
  return eval_standard(parse(text), a).str();
}

// Owns the algebra together with its two Euler characteristics.
class PyAlgebra {
 public:
  PyAlgebra(int n, Variant v, std::size_t cap)
      : algebra_(std::make_shared<FreeAlgebra>(FreeAlgebra::build(n, v, cap))),
        chi_(Valuation::euler_characteristic(*algebra_)),
        chi_plus_(Valuation::idempotent_euler_characteristic(*algebra_)) {}

  const FreeAlgebra& get() const { return *algebra_; }
  long long chi(const std::string& f) const { return chi_(parse(f)).num(); }
  long long chi_plus(const std::string& f) const { return chi_plus_(parse(f)).num(); }
  long long chi_of(ElementId x) const { return chi_(x).num(); }
  long long chi_plus_of(ElementId x) const { return chi_plus_(x).num(); }

 private:
  std::shared_ptr<FreeAlgebra> algebra_;
  Valuation chi_;
  Valuation chi_plus_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "C++ core of nmval";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SemanticError>(m, "SemanticError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::enum_<Variant>(m, "Variant").value("NM", Variant::NM).value("NM_MINUS", Variant::NMMinus);
  py::enum_<AssignmentSpace>(m, "AssignmentSpace")
      .value("THREE", AssignmentSpace::Three)
      .value("TWO", AssignmentSpace::Two);

  m.def("parse", [](const std::string& s) { return format(parse(s)); },
        "Parse and return the canonical rendering of a formula");
  m.def("format", [](const std::string& s) { return format(parse(s)); });
  m.def("desugar", [](const std::string& s) { return format(desugar(parse(s))); });
  m.def("variables", [](const std::string& s) { return variables(parse(s)); });
  m.def("eval_chain", &eval_chain_text, py::arg("formula"), py::arg("k"), py::arg("assignment") = std::map<int, int>{});
  m.def("eval_standard", &eval_standard_text, py::arg("formula"),
        py::arg("assignment") = std::map<int, std::string>{});
  m.def("generic_chain_size", &generic_chain_size);
  m.def("count_models", [](const std::string& f, int n, AssignmentSpace s) { return count_models(parse(f), n, s); },
        py::arg("formula"), py::arg("n"), py::arg("space") = AssignmentSpace::Three);
  m.def("enumerate_models",
        [](const std::string& f, int n, AssignmentSpace s) { return enumerate_models(parse(f), n, s); },
        py::arg("formula"), py::arg("n"), py::arg("space") = AssignmentSpace::Three);

  py::class_<PyAlgebra>(m, "FreeAlgebra")
      .def(py::init<int, Variant, std::size_t>(), py::arg("n"), py::arg("variant") = Variant::NM,
           py::arg("cap") = FreeAlgebra::kDefaultCap)
      .def("__len__", [](const PyAlgebra& a) { return a.get().size(); })
      .def_property_readonly("n", [](const PyAlgebra& a) { return a.get().arity(); })
      .def_property_readonly("chain_size", [](const PyAlgebra& a) { return a.get().chain().size(); })
      .def_property_readonly("bottom", [](const PyAlgebra& a) { return a.get().bottom(); })
      .def_property_readonly("top", [](const PyAlgebra& a) { return a.get().top(); })
      .def("element_of", [](const PyAlgebra& a, const std::string& f) { return a.get().element_of(parse(f)); })
      .def("vector", [](const PyAlgebra& a, ElementId x) {
        const auto& v = a.get().vector(x);
        return std::vector<int>(v.begin(), v.end());
      })
      .def("representative", [](const PyAlgebra& a, ElementId x) -> std::optional<std::string> {
        const auto& r = a.get().representative(x);
        return r ? std::optional<std::string>(format(*r)) : std::nullopt;
      })
      .def("covers", [](const PyAlgebra& a) { return a.get().covers(); })
      .def("join_irreducibles", [](const PyAlgebra& a) { return join_irreducibles(a.get()); })
      .def("minimal_idempotent_jis", [](const PyAlgebra& a) { return minimal_idempotent_jis(a.get()); })
      .def("is_idempotent", [](const PyAlgebra& a, ElementId x) { return a.get().is_idempotent(x); })
      .def("is_tautology", [](const PyAlgebra& a, const std::string& f) { return is_tautology(a.get(), parse(f)); })
      .def("proves", [](const PyAlgebra& a, const std::string& phi, const std::string& psi) {
        return proves(a.get(), parse(phi), parse(psi));
      })
      .def("chi", &PyAlgebra::chi)
      .def("chi_plus", &PyAlgebra::chi_plus)
      .def("chi_of", &PyAlgebra::chi_of)
      .def("chi_plus_of", &PyAlgebra::chi_plus_of)
      .def("chi_plus_by_counting", [](const PyAlgebra& a, ElementId x) { return chi_plus_by_counting(a.get(), x); })
      .def("prime_filter_generators", [](const PyAlgebra& a) {
        std::vector<ElementId> out;
        for (const auto& f : prime_filters(a.get())) out.push_back(f.generator);
        return out;
      })
      .def("quotient_sizes", [](const PyAlgebra& a) {
        std::vector<std::size_t> out;
        const auto f = forest(a.get());
        for (std::size_t r : f.roots()) out.push_back(quotient_by_maximal(a.get(), f.nodes[r]).size());
        return out;
      })
      .def("export_json", [](const PyAlgebra& a) { return export_json(a.get()).dump(2); })
      .def("hasse_dot", [](const PyAlgebra& a) { return hasse_dot(a.get()); })
      .def("forest_dot", [](const PyAlgebra& a) { return forest_dot(a.get()); });
}
