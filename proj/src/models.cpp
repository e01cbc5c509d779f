#include "nmval/models.hpp"

#include <string>

#include "nmval/errors.hpp"

namespace nmval {

Chain chain_of(AssignmentSpace space) { return Chain(space == AssignmentSpace::Three ? 3 : 2); }

namespace {

template <typename Visit>
void for_each_model(const Formula& f, int n, AssignmentSpace space, Visit visit) {
  if (n < 0) throw SemanticError("number of variables must be >= 0");
  if (max_variable(f) > n)
    throw SemanticError("formula mentions x" + std::to_string(max_variable(f)) + " but only " + std::to_string(n) +
                        " variables are in scope");
  const int k = chain_of(space).size();
  Assignment a(static_cast<std::size_t>(n), 0);
  for (;;) {
    if (eval_indices(f, k, a) == k - 1) visit(a);
    int i = n - 1;
    while (i >= 0 && a[static_cast<std::size_t>(i)] == k - 1) a[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++a[static_cast<std::size_t>(i)];
  }
}

}  // namespace

std::uint64_t count_models(const Formula& f, int n, AssignmentSpace space) {
  std::uint64_t count = 0;
  for_each_model(f, n, space, [&](const Assignment&) { ++count; });
  return count;
}

std::vector<Assignment> enumerate_models(const Formula& f, int n, AssignmentSpace space) {
  std::vector<Assignment> out;
  for_each_model(f, n, space, [&](const Assignment& a) { out.push_back(a); });
  return out;
}

RandomFormulaGenerator::RandomFormulaGenerator(int n, int max_depth, std::uint64_t seed)
    : arity_(n), max_depth_(max_depth), rng_(seed) {}

Formula RandomFormulaGenerator::next() { return grow(max_depth_); }

Formula RandomFormulaGenerator::grow(int depth) {
  // Leaves: variables and the two constants.
  const int leaves = arity_ + 2;
  auto leaf = [&] {
    const int pick = std::uniform_int_distribution<int>(0, leaves - 1)(rng_);
    if (pick == 0) return Formula::bot();
    if (pick == 1) return Formula::top();
    return Formula::var(pick - 1);
  };
  if (depth <= 1) return leaf();
  // 0: leaf, 1..5: binary connectives, 6..7: unary. Operands are drawn
  // left to right so the stream does not depend on argument evaluation order.
  const int pick = std::uniform_int_distribution<int>(0, 7)(rng_);
  if (pick == 0) return leaf();
  Formula l = grow(depth - 1);
  if (pick == 6) return Formula::neg(l);
  if (pick == 7) return Formula::square(l);
  Formula r = grow(depth - 1);
  switch (pick) {
    case 1: return Formula::conj(l, r);
    case 2: return Formula::disj(l, r);
    case 3: return Formula::strong(l, r);
    case 4: return Formula::implies(l, r);
    default: return Formula::iff(l, r);
  }
}

}  // namespace nmval
