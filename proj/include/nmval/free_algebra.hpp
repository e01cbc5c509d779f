#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nmval/chain.hpp"
#include "nmval/formula.hpp"

namespace nmval {

enum class Variant { NM, NMMinus };

std::string to_string(Variant v);
/// Accepts "nm" and "nm-" (also "nm_minus").
Variant parse_variant(std::string_view text);

/// Size of the finite chain whose n-dimensional grid carries the free algebra:
/// 2n+3 for NM (odd, with fixpoint) and 2n+2 for NM- (even).
int generic_chain_size(int n, Variant v);

using ElementId = std::uint32_t;
using TruthVector = std::vector<std::uint8_t>;

enum class Operation : std::uint8_t { Meet, Join, Tnorm, Residuum };

/// All points of C^n for the generic chain C of a variant, listed in
/// lexicographic order of their index tuples with x1 most significant.
class GenericGrid {
 public:
  GenericGrid(int n, Variant variant);

  int arity() const { return arity_; }
  Variant variant() const { return variant_; }
  const Chain& chain() const { return chain_; }
  std::size_t size() const { return size_; }
  /// Coordinates (chain indices) of point p.
  std::vector<int> point(std::size_t p) const;

  /// Truth vector of f over the grid. Throws SemanticError when f mentions
  /// a variable beyond the arity.
  TruthVector evaluate(const Formula& f) const;
  TruthVector constant(int index) const { return TruthVector(size_, static_cast<std::uint8_t>(index)); }
  TruthVector projection(int i) const;

 private:
  int arity_;
  Variant variant_;
  Chain chain_;
  std::size_t size_;
};

/// Finite free n-generated NM or NM- algebra, realised as the algebra of
/// functions grid -> chain generated by the coordinate projections.
///
/// Element ids follow
/// discovery order: bottom, top, the projections x1..xn, then breadth-first
/// closure rounds, inside a round by (left id, right id, operation).
/// Once built the object is immutable.
class FreeAlgebra {
 public:
  static constexpr std::size_t kDefaultCap = 100000;

  static FreeAlgebra build(int n, Variant variant, std::size_t element_cap = kDefaultCap);

  /// Rebuild from stored truth vectors, keeping their ids. Throws
  /// SemanticError unless the vectors form a closed algebra containing the
  /// constants and projections.
  static FreeAlgebra from_vectors(int n, Variant variant, std::vector<TruthVector> vectors);

  const GenericGrid& grid() const { return grid_; }
  int arity() const { return grid_.arity(); }
  Variant variant() const { return grid_.variant(); }
  const Chain& chain() const { return grid_.chain(); }
  std::size_t grid_size() const { return grid_.size(); }
  std::vector<int> grid_point(std::size_t p) const { return grid_.point(p); }

  std::size_t size() const { return vectors_.size(); }
  const TruthVector& vector(ElementId x) const { return vectors_[x]; }
  /// A formula denoting x; empty for algebras restored by from_vectors().
  const std::optional<Formula>& representative(ElementId x) const { return representatives_[x]; }
  std::optional<ElementId> find(const TruthVector& v) const;

  ElementId bottom() const { return bottom_; }
  ElementId top() const { return top_; }
  ElementId projection(int i) const;

  ElementId apply(Operation op, ElementId x, ElementId y) const;
  ElementId meet(ElementId x, ElementId y) const { return apply(Operation::Meet, x, y); }
  ElementId join(ElementId x, ElementId y) const { return apply(Operation::Join, x, y); }
  ElementId tnorm(ElementId x, ElementId y) const { return apply(Operation::Tnorm, x, y); }
  ElementId residuum(ElementId x, ElementId y) const { return apply(Operation::Residuum, x, y); }
  ElementId neg(ElementId x) const { return residuum(x, bottom_); }
  ElementId biresiduum(ElementId x, ElementId y) const { return tnorm(residuum(x, y), residuum(y, x)); }

  bool leq(ElementId x, ElementId y) const { return (down_[y][x / 64] >> (x % 64)) & 1u; }
  const std::vector<ElementId>& lower_covers(ElementId x) const { return lower_covers_[x]; }
  const std::vector<ElementId>& upper_covers(ElementId x) const { return upper_covers_[x]; }
  /// All cover pairs (child, parent), sorted lexicographically.
  std::vector<std::pair<ElementId, ElementId>> covers() const;
  /// Length of the longest chain from bottom to x.
  std::size_t rank(ElementId x) const { return rank_[x]; }

  bool is_join_irreducible(ElementId x) const { return lower_covers_[x].size() == 1; }
  bool is_idempotent(ElementId x) const { return tnorm(x, x) == x; }

  TruthVector evaluate(const Formula& f) const { return grid_.evaluate(f); }
  ElementId element_of(const Formula& f) const;

 private:
  FreeAlgebra(int n, Variant variant);
  ElementId insert(TruthVector v, std::optional<Formula> rep);
  TruthVector compute(Operation op, const TruthVector& a, const TruthVector& b) const;
  void annotate();

  GenericGrid grid_;
  std::vector<TruthVector> vectors_;
  std::vector<std::optional<Formula>> representatives_;
  std::unordered_map<std::string, ElementId> index_;
  ElementId bottom_ = 0;
  ElementId top_ = 0;
  std::vector<ElementId> projections_;
  std::vector<std::vector<std::uint64_t>> down_;
  std::vector<std::vector<ElementId>> lower_covers_;
  std::vector<std::vector<ElementId>> upper_covers_;
  std::vector<std::size_t> rank_;
};

/// Elements with exactly one lower cover, in id order.
std::vector<ElementId> join_irreducibles(const FreeAlgebra& a);

/// flags[x] is true iff x * x = x.
std::vector<bool> idempotents(const FreeAlgebra& a);

/// Idempotent join-irreducibles with no other idempotent join-irreducible
/// strictly below them, in id order.
std::vector<ElementId> minimal_idempotent_jis(const FreeAlgebra& a);

bool is_tautology(const FreeAlgebra& a, const Formula& f);

/// Local deduction: phi proves psi iff phi^2 -> psi is a tautology.
bool proves(const FreeAlgebra& a, const Formula& phi, const Formula& psi);

/// Same checks straight on the grid; no closure is built, so these stay
/// cheap for arities whose free algebra is out of reach.
bool is_tautology(const GenericGrid& g, const Formula& f);
bool proves(const GenericGrid& g, const Formula& phi, const Formula& psi);

}  // namespace nmval
