#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nmval/free_algebra.hpp"

namespace nmval {

/// Filter of a finite algebra, stored as its sorted member ids. Finite
/// filters are principal; generator is the minimum member.
struct Filter {
  ElementId generator = 0;
  std::vector<ElementId> members;

  bool contains(ElementId x) const;
  friend bool operator==(const Filter&, const Filter&) = default;
};

/// The up-set of g.
Filter principal_filter(const FreeAlgebra& a, ElementId g);

/// Definitional tests on an arbitrary set of ids.
bool is_upper_set(const FreeAlgebra& a, const std::vector<ElementId>& s);
bool is_filter(const FreeAlgebra& a, const std::vector<ElementId>& s);
bool is_prime_filter(const FreeAlgebra& a, const std::vector<ElementId>& s);

/// Prime filters generated by the idempotent join-irreducibles, each
/// validated definitionally. Ordered by generator id.
std::vector<Filter> prime_filters(const FreeAlgebra& a);

/// All principal up-sets that pass the definitional prime-filter test.
/// Independent of the join-irreducible annotation; used as a cross-check.
std::vector<Filter> prime_filters_by_enumeration(const FreeAlgebra& a);

/// Prime filters under reverse inclusion. The parent of a node is its
/// smallest proper prime superset; roots are the inclusion-maximal filters.
struct PrimeFilterForest {
  std::vector<Filter> nodes;
  std::vector<std::optional<std::size_t>> parent;

  std::vector<std::size_t> roots() const;
  /// Indices of all proper prime supersets of nodes[i].
  std::vector<std::size_t> ancestors(std::size_t i) const;
  /// True iff every node's ancestors are totally ordered by inclusion.
  bool is_forest() const;
};

PrimeFilterForest forest(const FreeAlgebra& a);

/// Quotient of an algebra by a maximal prime filter: congruence classes in
/// increasing order, and the class index of every element.
struct QuotientChain {
  std::vector<std::vector<ElementId>> classes;
  std::vector<std::size_t> class_of;

  std::size_t size() const { return classes.size(); }
};

/// Classes of x ~ y iff (x <-> y) lies in p. Verifies that the class map is
/// a homomorphism onto the NM chain with as many elements as classes.
/// Throws SemanticError if p is not a maximal prime filter.
QuotientChain quotient_by_maximal(const FreeAlgebra& a, const Filter& p);

}  // namespace nmval
