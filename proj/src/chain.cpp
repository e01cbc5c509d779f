#include "nmval/chain.hpp"

#include <algorithm>
#include <vector>

#include "nmval/errors.hpp"

namespace nmval {

Chain::Chain(int size) : size_(size) {
  if (size < 2) throw SemanticError("chain size must be >= 2, got " + std::to_string(size));
}

namespace {

void check(const Chain& c, ChainValue x) {
  if (x.chain_size != c.size())
    throw SemanticError("value from a chain of size " + std::to_string(x.chain_size) +
                        " used in a chain of size " + std::to_string(c.size()));
  if (x.index < 0 || x.index >= c.size())
    throw SemanticError("index " + std::to_string(x.index) + " outside chain of size " + std::to_string(c.size()));
}

int eval_rec(const Formula& f, int k, std::span<const int> values) {
  using namespace chain_ops;
  switch (f.connective()) {
    case Connective::Var: return values[f.index() - 1];
    case Connective::Bot: return 0;
    case Connective::Top: return k - 1;
    case Connective::Not: return neg(k, eval_rec(f.child(), k, values));
    case Connective::Square: {
      const int a = eval_rec(f.child(), k, values);
      return tnorm(k, a, a);
    }
    default: break;
  }
  const int a = eval_rec(f.lhs(), k, values);
  const int b = eval_rec(f.rhs(), k, values);
  switch (f.connective()) {
    case Connective::And: return meet(a, b);
    case Connective::Or: return join(a, b);
    case Connective::Strong: return tnorm(k, a, b);
    case Connective::Implies: return residuum(k, a, b);
    case Connective::Iff: return tnorm(k, residuum(k, a, b), residuum(k, b, a));
    default: return 0;
  }
}

const Rational kZero(0);
const Rational kOne(1);

Rational std_neg(const Rational& x) { return kOne - x; }
Rational std_tnorm(const Rational& x, const Rational& y) { return x + y > kOne ? std::min(x, y) : kZero; }
Rational std_residuum(const Rational& x, const Rational& y) { return x <= y ? kOne : std::max(std_neg(x), y); }

Rational eval_std_rec(const Formula& f, const StandardAssignment& a) {
  switch (f.connective()) {
    case Connective::Var: return a.at(f.index());
    case Connective::Bot: return kZero;
    case Connective::Top: return kOne;
    case Connective::Not: return std_neg(eval_std_rec(f.child(), a));
    case Connective::Square: {
      const Rational v = eval_std_rec(f.child(), a);
      return std_tnorm(v, v);
    }
    default: break;
  }
  const Rational x = eval_std_rec(f.lhs(), a);
  const Rational y = eval_std_rec(f.rhs(), a);
  switch (f.connective()) {
    case Connective::And: return std::min(x, y);
    case Connective::Or: return std::max(x, y);
    case Connective::Strong: return std_tnorm(x, y);
    case Connective::Implies: return std_residuum(x, y);
    case Connective::Iff: return std_tnorm(std_residuum(x, y), std_residuum(y, x));
    default: return kZero;
  }
}

}  // namespace

ChainValue value(const Chain& c, int index) {
  ChainValue v{index, c.size()};
  check(c, v);
  return v;
}

ChainValue tnorm(const Chain& c, ChainValue x, ChainValue y) {
  check(c, x);
  check(c, y);
  return {chain_ops::tnorm(c.size(), x.index, y.index), c.size()};
}

ChainValue residuum(const Chain& c, ChainValue x, ChainValue y) {
  check(c, x);
  check(c, y);
  return {chain_ops::residuum(c.size(), x.index, y.index), c.size()};
}

ChainValue neg(const Chain& c, ChainValue x) {
  check(c, x);
  return {chain_ops::neg(c.size(), x.index), c.size()};
}

ChainValue meet(const Chain& c, ChainValue x, ChainValue y) {
  check(c, x);
  check(c, y);
  return {chain_ops::meet(x.index, y.index), c.size()};
}

ChainValue join(const Chain& c, ChainValue x, ChainValue y) {
  check(c, x);
  check(c, y);
  return {chain_ops::join(x.index, y.index), c.size()};
}

ChainValue eval_chain(const Formula& f, const Chain& c, const ChainAssignment& assignment) {
  const int n = max_variable(f);
  std::vector<int> values(static_cast<std::size_t>(n), 0);
  for (int v : variables(f)) {
    const auto it = assignment.find(v);
    if (it == assignment.end()) throw SemanticError("missing binding for x" + std::to_string(v));
    check(c, it->second);
    values[static_cast<std::size_t>(v - 1)] = it->second.index;
  }
  return {eval_indices(f, c.size(), values), c.size()};
}

int eval_indices(const Formula& f, int chain_size, std::span<const int> values) {
  return eval_rec(f, chain_size, values);
}

Rational eval_standard(const Formula& f, const StandardAssignment& assignment) {
  for (int v : variables(f)) {
    const auto it = assignment.find(v);
    if (it == assignment.end()) throw SemanticError("missing binding for x" + std::to_string(v));
    if (it->second < kZero || it->second > kOne)
      throw SemanticError("value " + it->second.str() + " for x" + std::to_string(v) + " is outside [0,1]");
  }
  return eval_std_rec(f, assignment);
}

}  // namespace nmval
