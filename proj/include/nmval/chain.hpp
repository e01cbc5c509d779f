#pragma once

#include <map>
#include <span>

#include "nmval/formula.hpp"
#include "nmval/rational.hpp"

namespace nmval {

/// Finite NM chain with k elements 0..k-1, element i standing for i/(k-1).
class Chain {
 public:
  explicit Chain(int size);

  int size() const { return size_; }
  int top() const { return size_ - 1; }
  bool has_fixpoint() const { return size_ % 2 == 1; }
  /// Index of the negation fixpoint; requires has_fixpoint().
  int fixpoint() const { return (size_ - 1) / 2; }

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  int size_;
};

/// Element of a finite chain; remembers the size of its chain.
struct ChainValue {
  int index = 0;
  int chain_size = 2;

  Rational as_rational() const { return Rational(index, chain_size - 1); }
  friend bool operator==(const ChainValue&, const ChainValue&) = default;
};

/// Index-level NM operations on a chain of size k. These are the hot path of
/// free-algebra construction and do no validation.
namespace chain_ops {

inline int neg(int k, int x) { return k - 1 - x; }
inline int meet(int x, int y) { return x < y ? x : y; }
inline int join(int x, int y) { return x < y ? y : x; }
inline int tnorm(int k, int x, int y) { return x > neg(k, y) ? meet(x, y) : 0; }
inline int residuum(int k, int x, int y) { return x <= y ? k - 1 : join(neg(k, x), y); }

}  // namespace chain_ops

ChainValue value(const Chain& c, int index);
ChainValue tnorm(const Chain& c, ChainValue x, ChainValue y);
ChainValue residuum(const Chain& c, ChainValue x, ChainValue y);
ChainValue neg(const Chain& c, ChainValue x);
ChainValue meet(const Chain& c, ChainValue x, ChainValue y);
ChainValue join(const Chain& c, ChainValue x, ChainValue y);

using ChainAssignment = std::map<int, ChainValue>;
using StandardAssignment = std::map<int, Rational>;

ChainValue eval_chain(const Formula& f, const Chain& c, const ChainAssignment& assignment);

/// Evaluation with raw indices; values[i-1] is the index bound to x_i.
/// Caller guarantees every variable of f is covered.
int eval_indices(const Formula& f, int chain_size, std::span<const int> values);

/// Evaluation in the standard algebra on [0,1] with exact rationals.
Rational eval_standard(const Formula& f, const StandardAssignment& assignment);

}  // namespace nmval
