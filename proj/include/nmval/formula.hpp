#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace nmval {

/// Connectives of the formula language. Var, Bot, And, Strong and Implies
/// are primitive; the rest are sugar removed by desugar().
enum class Connective { Var, Bot, Top, And, Or, Strong, Implies, Iff, Not, Square };

/// Immutable formula tree with shared subterms. Copying is cheap.
class Formula {
 public:
  static Formula var(int index);
  static Formula bot();
  static Formula top();
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula strong(Formula l, Formula r);
  static Formula implies(Formula l, Formula r);
  static Formula iff(Formula l, Formula r);
  static Formula neg(Formula f);
  static Formula square(Formula f);

  Connective connective() const;
  /// Variable index; only meaningful for Var.
  int index() const;
  /// Operands of binary connectives; child() is the operand of Not/Square.
  const Formula& lhs() const;
  const Formula& rhs() const;
  const Formula& child() const;

  bool is_binary() const;
  bool is_unary() const;

  /// Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Formula parse(std::string_view text);

/// Minimal-parenthesis rendering; parse(format(f)) == f.
std::string format(const Formula& f);

/// Rewrite into Var, Bot, And, Strong and Implies only.
Formula desugar(const Formula& f);

std::set<int> variables(const Formula& f);

/// Largest variable index occurring in f, or 0 for closed formulas.
int max_variable(const Formula& f);

/// Number of nodes, counting shared subterms once per occurrence.
std::size_t size(const Formula& f);

}  // namespace nmval
