#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nmval/chain.hpp"
#include "nmval/formula.hpp"

namespace nmval {

/// Value sets for brute-force model counting: {0, 1/2, 1} with the
/// three-element NM chain structure, or Boolean {0, 1}.
enum class AssignmentSpace { Three, Two };

Chain chain_of(AssignmentSpace space);

/// One assignment: entry i is the chain index bound to x_{i+1}.
using Assignment = std::vector<int>;

/// Number of assignments of x1..xn into the space that send f to 1.
/// Throws SemanticError if f mentions a variable beyond n.
std::uint64_t count_models(const Formula& f, int n, AssignmentSpace space);

/// The satisfying assignments themselves, in lexicographic order.
std::vector<Assignment> enumerate_models(const Formula& f, int n, AssignmentSpace space);

/// Fixed-seed random formulas over x1..xn, grammar-directed, with every
/// connective equally likely at inner nodes.
class RandomFormulaGenerator {
 public:
  RandomFormulaGenerator(int n, int max_depth, std::uint64_t seed);

  Formula next();

 private:
  Formula grow(int depth);

  int arity_;
  int max_depth_;
  std::mt19937_64 rng_;
};

}  // namespace nmval
