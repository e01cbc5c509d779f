#include "nmval/valuations.hpp"

#include <algorithm>
#include <numeric>

#include "nmval/errors.hpp"

namespace nmval {

std::vector<Rational> solve_weights(const JiPoset& poset, const std::vector<Rational>& values, const Rational& base) {
  const std::size_t m = poset.size();
  if (values.size() != m) throw SemanticError("valuation spec does not cover every join-irreducible");
  std::vector<std::size_t> preds(m, 0);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t p = 0; p < m; ++p)
      if (p != g && poset.below[p][g]) ++preds[g];
  // Strictly smaller elements have strictly fewer predecessors.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto l, auto r) { return preds[l] < preds[r]; });

  std::vector<Rational> w(m);
  for (std::size_t g : order) {
    Rational acc = values[g] - base;
    for (std::size_t p = 0; p < m; ++p)
      if (p != g && poset.below[p][g]) acc -= w[p];
    w[g] = acc;
  }
  return w;
}

Valuation::Valuation(const FreeAlgebra& algebra, ValuationSpec spec)
    : algebra_(&algebra), spec_(std::move(spec)), jis_(join_irreducibles(algebra)) {
  if (spec_.ji_values.size() != jis_.size())
    throw SemanticError("valuation spec must give a value for exactly the join-irreducibles");
  JiPoset poset;
  poset.below.assign(jis_.size(), std::vector<bool>(jis_.size()));
  std::vector<Rational> values;
  for (std::size_t i = 0; i < jis_.size(); ++i) {
    const auto it = spec_.ji_values.find(jis_[i]);
    if (it == spec_.ji_values.end())
      throw SemanticError("element " + std::to_string(jis_[i]) + " is join-irreducible but has no value");
    values.push_back(it->second);
    for (std::size_t j = 0; j < jis_.size(); ++j) poset.below[i][j] = algebra.leq(jis_[i], jis_[j]);
  }
  weight_by_position_ = solve_weights(poset, values, spec_.base);
  for (std::size_t i = 0; i < jis_.size(); ++i) weights_[jis_[i]] = weight_by_position_[i];
}

Valuation Valuation::euler_characteristic(const FreeAlgebra& algebra) {
  ValuationSpec spec{Rational(0), {}};
  for (ElementId g : join_irreducibles(algebra)) spec.ji_values[g] = Rational(1);
  return Valuation(algebra, std::move(spec));
}

Valuation Valuation::idempotent_euler_characteristic(const FreeAlgebra& algebra) {
  ValuationSpec spec{Rational(0), {}};
  for (ElementId g : join_irreducibles(algebra)) spec.ji_values[g] = Rational(algebra.is_idempotent(g) ? 1 : 0);
  return Valuation(algebra, std::move(spec));
}

Rational Valuation::operator()(ElementId x) const {
  Rational acc = spec_.base;
  for (std::size_t i = 0; i < jis_.size(); ++i)
    if (algebra_->leq(jis_[i], x)) acc += weight_by_position_[i];
  return acc;
}

Rational Valuation::operator()(const Formula& f) const { return (*this)(algebra_->element_of(f)); }

WeightTable weights(const FreeAlgebra& a, const ValuationSpec& spec) { return Valuation(a, spec).weights(); }

Rational evaluate(const FreeAlgebra& a, const ValuationSpec& spec, ElementId x) { return Valuation(a, spec)(x); }

namespace {

long long as_integer(const Rational& r) {
  if (!r.is_integer()) throw std::logic_error("integer valuation produced " + r.str());
  return r.num();
}

}  // namespace

long long euler_char(const FreeAlgebra& a, ElementId x) {
  return as_integer(Valuation::euler_characteristic(a)(x));
}

long long idempotent_euler_char(const FreeAlgebra& a, ElementId x) {
  return as_integer(Valuation::idempotent_euler_characteristic(a)(x));
}

long long chi_plus_by_counting(const FreeAlgebra& a, ElementId x) {
  const auto roots = minimal_idempotent_jis(a);
  return std::count_if(roots.begin(), roots.end(), [&](ElementId g) { return a.leq(g, x); });
}

Rational valuation_of_formula(const FreeAlgebra& a, const ValuationSpec& spec, const Formula& f) {
  return Valuation(a, spec)(f);
}

}  // namespace nmval
