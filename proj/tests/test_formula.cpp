#include <random>

#include "doctest.h"
#include "nmval/chain.hpp"
#include "nmval/errors.hpp"
#include "nmval/formula.hpp"
#include "nmval/models.hpp"

using namespace nmval;

namespace {

const Formula x1 = Formula::var(1);
const Formula x2 = Formula::var(2);
const Formula alpha = Formula::conj(Formula::square(Formula::iff(x1, Formula::neg(x1))), x1);

bool primitive_only(const Formula& f) {
  switch (f.connective()) {
    case Connective::Var:
    case Connective::Bot:
      return true;
    case Connective::And:
    case Connective::Strong:
    case Connective::Implies:
      return primitive_only(f.lhs()) && primitive_only(f.rhs());
    default:
      return false;
  }
}

}  // namespace

TEST_CASE("parse examples") {
  CHECK(parse("x1 & ~x1") == Formula::conj(x1, Formula::neg(x1)));
  CHECK(parse("(x1 <-> ~x1)^2 & x1") == alpha);
  CHECK(parse("  x1->x2 ") == Formula::implies(x1, x2));
  CHECK(parse("0") == Formula::bot());
  CHECK(parse("1") == Formula::top());
}

TEST_CASE("parse precedence and associativity") {
  CHECK(parse("x1 -> x2 -> x1") == Formula::implies(x1, Formula::implies(x2, x1)));
  CHECK(parse("x1 <-> x2 <-> x1") == Formula::iff(Formula::iff(x1, x2), x1));
  CHECK(parse("x1 | x2 & x1") == Formula::disj(x1, Formula::conj(x2, x1)));
  CHECK(parse("x1 & x2 * x1") == Formula::conj(x1, Formula::strong(x2, x1)));
  CHECK(parse("~x1^2") == Formula::neg(Formula::square(x1)));
  CHECK(parse("x1^2^2") == Formula::square(Formula::square(x1)));
  CHECK(parse("~~x1") == Formula::neg(Formula::neg(x1)));
}

TEST_CASE("parse errors carry position and expectations") {
  try {
    parse("x1 -> -> x2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 7);
    CHECK(std::find(e.expected().begin(), e.expected().end(), "variable") != e.expected().end());
  }
  CHECK_THROWS_AS(parse("x0"), ParseError);
  CHECK_THROWS_AS(parse("x1 &"), ParseError);
  CHECK_THROWS_AS(parse("(x1"), ParseError);
  CHECK_THROWS_AS(parse("x1 x2"), ParseError);
  CHECK_THROWS_AS(parse("y"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(Formula::var(0), SemanticError);
}

TEST_CASE("format examples") {
  CHECK(format(Formula::conj(x1, Formula::neg(x1))) == "x1 & ~x1");
  CHECK(format(Formula::square(x1)) == "x1^2");
  CHECK(format(Formula::implies(Formula::implies(x1, x2), x2)) == "(x1 -> x2) -> x2");
  CHECK(format(alpha) == "(x1 <-> ~x1)^2 & x1");
  CHECK(format(Formula::square(Formula::neg(x1))) == "(~x1)^2");
  CHECK(format(Formula::conj(x1, Formula::conj(x2, x1))) == "x1 & (x2 & x1)");
}

TEST_CASE("variables") {
  CHECK(variables(Formula::bot()).empty());
  CHECK(variables(alpha) == std::set<int>{1});
  CHECK(variables(Formula::implies(x2, Formula::var(5))) == std::set<int>{2, 5});
  CHECK(max_variable(Formula::top()) == 0);
}

TEST_CASE("desugar examples") {
  CHECK(desugar(Formula::neg(x1)) == Formula::implies(x1, Formula::bot()));
  CHECK(desugar(Formula::top()) == Formula::implies(Formula::bot(), Formula::bot()));
  CHECK(desugar(Formula::disj(x1, x2)) ==
        Formula::conj(Formula::implies(Formula::implies(x1, x2), x2), Formula::implies(Formula::implies(x2, x1), x1)));
  CHECK(desugar(Formula::iff(x1, x2)) == Formula::strong(Formula::implies(x1, x2), Formula::implies(x2, x1)));
  CHECK(desugar(Formula::square(x1)) == Formula::strong(x1, x1));
}

TEST_CASE("round trip: parse(format(f)) == f on generated formulas") {
  for (int n = 1; n <= 3; ++n) {
    RandomFormulaGenerator gen(n, 7, 1000 + static_cast<std::uint64_t>(n));
    for (int i = 0; i < 400; ++i) {
      const Formula f = gen.next();
      const std::string text = format(f);
      INFO(text);
      CHECK(parse(text) == f);
      CHECK(format(parse(text)) == text);
    }
  }
}

TEST_CASE("desugaring preserves evaluation on every chain up to size 9") {
  std::mt19937 rng(7);
  RandomFormulaGenerator gen(3, 6, 99);
  for (int i = 0; i < 150; ++i) {
    const Formula f = gen.next();
    const Formula d = desugar(f);
    CHECK(primitive_only(d));
    for (int k = 2; k <= 9; ++k) {
      // exhaustive over {0..k-1}^3
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          for (int c = 0; c < k; ++c) {
            const int vals[] = {a, b, c};
            if (eval_indices(f, k, vals) != eval_indices(d, k, vals)) {
              FAIL_CHECK(format(f) << " differs from its desugaring at k=" << k);
              return;
            }
          }
    }
  }
}
