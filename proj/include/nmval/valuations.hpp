#pragma once

#include <map>
#include <vector>

#include "nmval/formula.hpp"
#include "nmval/free_algebra.hpp"
#include "nmval/rational.hpp"

namespace nmval {

/// A valuation on a finite distributive lattice is fixed by its value at the
/// bottom and its values on the join-irreducibles.
struct ValuationSpec {
  Rational base;
  std::map<ElementId, Rational> ji_values;
};

using WeightTable = std::map<ElementId, Rational>;

/// Order among join-irreducibles, as a dense relation: below[i][j] holds iff
/// element i <= element j. Indices are positions, not algebra ids.
struct JiPoset {
  std::vector<std::vector<bool>> below;
  std::size_t size() const { return below.size(); }
};

/// Solve base + sum_{p <= g} w(p) = value(g) for every join-irreducible g,
/// processing g along a linear extension of the order.
std::vector<Rational> solve_weights(const JiPoset& poset, const std::vector<Rational>& values, const Rational& base);

/// Precomputed valuation on a built algebra; evaluation is then a sum of
/// weights over the join-irreducibles below the argument.
class Valuation {
 public:
  Valuation(const FreeAlgebra& algebra, ValuationSpec spec);

  static Valuation euler_characteristic(const FreeAlgebra& algebra);
  static Valuation idempotent_euler_characteristic(const FreeAlgebra& algebra);

  const ValuationSpec& spec() const { return spec_; }
  const WeightTable& weights() const { return weights_; }
  Rational operator()(ElementId x) const;
  Rational operator()(const Formula& f) const;

 private:
  const FreeAlgebra* algebra_;
  ValuationSpec spec_;
  std::vector<ElementId> jis_;
  std::vector<Rational> weight_by_position_;
  WeightTable weights_;
};

WeightTable weights(const FreeAlgebra& a, const ValuationSpec& spec);
Rational evaluate(const FreeAlgebra& a, const ValuationSpec& spec, ElementId x);

/// Classical Euler characteristic: 1 on every join-irreducible, 0 at bottom.
long long euler_char(const FreeAlgebra& a, ElementId x);

/// 1 on idempotent join-irreducibles, 0 on the others and at bottom.
long long idempotent_euler_char(const FreeAlgebra& a, ElementId x);

/// Number of minimal idempotent join-irreducibles below x.
long long chi_plus_by_counting(const FreeAlgebra& a, ElementId x);

Rational valuation_of_formula(const FreeAlgebra& a, const ValuationSpec& spec, const Formula& f);

}  // namespace nmval
