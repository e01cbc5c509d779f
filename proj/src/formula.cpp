#include "nmval/formula.hpp"

#include <cctype>
#include <vector>

#include "nmval/errors.hpp"

namespace nmval {

struct Formula::Node {
  Connective connective;
  int index = 0;
  Formula a{nullptr};
  Formula b{nullptr};
};

namespace {

bool binary(Connective c) {
  switch (c) {
    case Connective::And:
    case Connective::Or:
    case Connective::Strong:
    case Connective::Implies:
    case Connective::Iff:
      return true;
    default:
      return false;
  }
}

}  // namespace

Formula Formula::var(int index) {
  if (index < 1) throw SemanticError("variable index must be >= 1, got " + std::to_string(index));
  return Formula(std::make_shared<const Node>(Node{Connective::Var, index}));
}

Formula Formula::bot() {
  static const Formula f(std::make_shared<const Node>(Node{Connective::Bot}));
  return f;
}

Formula Formula::top() {
  static const Formula f(std::make_shared<const Node>(Node{Connective::Top}));
  return f;
}

#define NMVAL_BINARY(name, tag) \
  Formula Formula::name(Formula l, Formula r) { \
    return Formula(std::make_shared<const Node>(Node{Connective::tag, 0, std::move(l), std::move(r)})); \
  }
NMVAL_BINARY(conj, And)
NMVAL_BINARY(disj, Or)
NMVAL_BINARY(strong, Strong)
NMVAL_BINARY(implies, Implies)
NMVAL_BINARY(iff, Iff)
#undef NMVAL_BINARY

Formula Formula::neg(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Connective::Not, 0, std::move(f)}));
}

Formula Formula::square(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Connective::Square, 0, std::move(f)}));
}

Connective Formula::connective() const { return node_->connective; }
int Formula::index() const { return node_->index; }
const Formula& Formula::lhs() const { return node_->a; }
const Formula& Formula::rhs() const { return node_->b; }
const Formula& Formula::child() const { return node_->a; }
bool Formula::is_binary() const { return binary(node_->connective); }
bool Formula::is_unary() const {
  return node_->connective == Connective::Not || node_->connective == Connective::Square;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.connective() != b.connective()) return false;
  if (a.connective() == Connective::Var) return a.index() == b.index();
  if (a.is_binary()) return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  if (a.is_unary()) return a.child() == b.child();
  return true;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { Zero, One, Var, LParen, RParen, Tilde, Star, Amp, Bar, Arrow, DArrow, Sq, End };

struct Token {
  Tok kind;
  std::size_t column;
  std::string text;
  int value = 0;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    auto simple = [&](Tok k, std::size_t len) {
      out.push_back({k, col, std::string(s.substr(i, len))});
      i += len;
    };
    if (c == '0') simple(Tok::Zero, 1);
    else if (c == '1') simple(Tok::One, 1);
    else if (c == '(') simple(Tok::LParen, 1);
    else if (c == ')') simple(Tok::RParen, 1);
    else if (c == '~') simple(Tok::Tilde, 1);
    else if (c == '*') simple(Tok::Star, 1);
    else if (c == '&') simple(Tok::Amp, 1);
    else if (c == '|') simple(Tok::Bar, 1);
    else if (s.substr(i, 2) == "->") simple(Tok::Arrow, 2);
    else if (s.substr(i, 3) == "<->") simple(Tok::DArrow, 3);
    else if (s.substr(i, 2) == "^2") simple(Tok::Sq, 2);
    else if (c == 'x' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
      std::size_t j = i + 1;
      long long v = 0;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
        v = v * 10 + (s[j] - '0');
        if (v > 1000000) throw ParseError(col, {"variable index <= 1000000"}, "'" + std::string(s.substr(i, j + 1 - i)) + "'");
        ++j;
      }
      if (v == 0) throw ParseError(col, {"variable index >= 1"}, "'" + std::string(s.substr(i, j - i)) + "'");
      out.push_back({Tok::Var, col, std::string(s.substr(i, j - i)), static_cast<int>(v)});
      i = j;
    } else {
      throw ParseError(col, {"formula token"}, "'" + std::string(1, c) + "'");
    }
  }
  out.push_back({Tok::End, s.size() + 1, ""});
  return out;
}

const std::vector<std::string> kAtomStart = {"\"(\"", "\"0\"", "\"1\"", "\"~\"", "variable"};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula run() {
    Formula f = iff();
    if (peek().kind != Tok::End)
      fail({"\"<->\"", "\"->\"", "\"|\"", "\"&\"", "\"*\"", "\"^2\"", "end of input"});
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(t.column, std::move(expected), t.kind == Tok::End ? "end of input" : "'" + t.text + "'");
  }

  Formula iff() {
    Formula f = imp();
    while (accept(Tok::DArrow)) f = Formula::iff(f, imp());
    return f;
  }
  Formula imp() {
    Formula f = disj();
    if (accept(Tok::Arrow)) return Formula::implies(f, imp());
    return f;
  }
  Formula disj() {
    Formula f = conj();
    while (accept(Tok::Bar)) f = Formula::disj(f, conj());
    return f;
  }
  Formula conj() {
    Formula f = strong();
    while (accept(Tok::Amp)) f = Formula::conj(f, strong());
    return f;
  }
  Formula strong() {
    Formula f = unary();
    while (accept(Tok::Star)) f = Formula::strong(f, unary());
    return f;
  }
  Formula unary() {
    if (accept(Tok::Tilde)) return Formula::neg(unary());
    Formula f = atom();
    while (accept(Tok::Sq)) f = Formula::square(f);
    return f;
  }
  Formula atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Zero:
        ++pos_;
        return Formula::bot();
      case Tok::One:
        ++pos_;
        return Formula::top();
      case Tok::Var:
        ++pos_;
        return Formula::var(t.value);
      case Tok::LParen: {
        ++pos_;
        Formula f = iff();
        if (!accept(Tok::RParen)) fail({"\")\""});
        return f;
      }
      default:
        fail(kAtomStart);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Binding strength; higher binds tighter.
int precedence(Connective c) {
  switch (c) {
    case Connective::Iff: return 1;
    case Connective::Implies: return 2;
    case Connective::Or: return 3;
    case Connective::And: return 4;
    case Connective::Strong: return 5;
    case Connective::Not: return 6;
    case Connective::Square: return 7;
    default: return 8;
  }
}

const char* symbol(Connective c) {
  switch (c) {
    case Connective::Iff: return " <-> ";
    case Connective::Implies: return " -> ";
    case Connective::Or: return " | ";
    case Connective::And: return " & ";
    case Connective::Strong: return " * ";
    default: return "";
  }
}

void render(const Formula& f, std::string& out);

void render_wrapped(const Formula& f, bool wrap, std::string& out) {
  if (wrap) out += '(';
  render(f, out);
  if (wrap) out += ')';
}

void render(const Formula& f, std::string& out) {
  const Connective c = f.connective();
  const int p = precedence(c);
  switch (c) {
    case Connective::Var:
      out += 'x';
      out += std::to_string(f.index());
      return;
    case Connective::Bot:
      out += '0';
      return;
    case Connective::Top:
      out += '1';
      return;
    case Connective::Not:
      out += '~';
      render_wrapped(f.child(), precedence(f.child().connective()) < p, out);
      return;
    case Connective::Square:
      render_wrapped(f.child(), precedence(f.child().connective()) < p, out);
      out += "^2";
      return;
    default:
      break;
  }
  // -> groups to the right, everything else to the left.
  const bool right_assoc = c == Connective::Implies;
  const int lp = precedence(f.lhs().connective());
  const int rp = precedence(f.rhs().connective());
  render_wrapped(f.lhs(), right_assoc ? lp <= p : lp < p, out);
  out += symbol(c);
  render_wrapped(f.rhs(), right_assoc ? rp < p : rp <= p, out);
}

void collect(const Formula& f, std::set<int>& vars) {
  if (f.connective() == Connective::Var) {
    vars.insert(f.index());
  } else if (f.is_binary()) {
    collect(f.lhs(), vars);
    collect(f.rhs(), vars);
  } else if (f.is_unary()) {
    collect(f.child(), vars);
  }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(tokenize(text)).run(); }

std::string format(const Formula& f) {
  std::string out;
  render(f, out);
  return out;
}

Formula desugar(const Formula& f) {
  switch (f.connective()) {
    case Connective::Var:
    case Connective::Bot:
      return f;
    case Connective::Top:
      return Formula::implies(Formula::bot(), Formula::bot());
    case Connective::Not:
      return Formula::implies(desugar(f.child()), Formula::bot());
    case Connective::Square: {
      Formula a = desugar(f.child());
      return Formula::strong(a, a);
    }
    case Connective::And:
      return Formula::conj(desugar(f.lhs()), desugar(f.rhs()));
    case Connective::Strong:
      return Formula::strong(desugar(f.lhs()), desugar(f.rhs()));
    case Connective::Implies:
      return Formula::implies(desugar(f.lhs()), desugar(f.rhs()));
    case Connective::Or: {
      Formula a = desugar(f.lhs());
      Formula b = desugar(f.rhs());
      return Formula::conj(Formula::implies(Formula::implies(a, b), b),
                           Formula::implies(Formula::implies(b, a), a));
    }
    case Connective::Iff: {
      Formula a = desugar(f.lhs());
      Formula b = desugar(f.rhs());
      return Formula::strong(Formula::implies(a, b), Formula::implies(b, a));
    }
  }
  return f;
}

std::set<int> variables(const Formula& f) {
  std::set<int> vars;
  collect(f, vars);
  return vars;
}

int max_variable(const Formula& f) {
  const auto vars = variables(f);
  return vars.empty() ? 0 : *vars.rbegin();
}

std::size_t size(const Formula& f) {
  if (f.is_binary()) return 1 + size(f.lhs()) + size(f.rhs());
  if (f.is_unary()) return 1 + size(f.child());
  return 1;
}

}  // namespace nmval
