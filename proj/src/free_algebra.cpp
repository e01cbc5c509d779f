#include "nmval/free_algebra.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "nmval/errors.hpp"

namespace nmval {

std::string to_string(Variant v) { return v == Variant::NM ? "nm" : "nm-"; }

Variant parse_variant(std::string_view text) {
  if (text == "nm" || text == "NM") return Variant::NM;
  if (text == "nm-" || text == "NM-" || text == "nm_minus" || text == "NM_MINUS") return Variant::NMMinus;
  throw SemanticError("unknown variant '" + std::string(text) + "' (expected nm or nm-)");
}

int generic_chain_size(int n, Variant v) {
  if (n < 0) throw SemanticError("arity must be >= 0");
  return v == Variant::NM ? 2 * n + 3 : 2 * n + 2;
}

namespace {

std::string key_of(const TruthVector& v) { return std::string(v.begin(), v.end()); }

constexpr Operation kOperations[] = {Operation::Meet, Operation::Join, Operation::Tnorm, Operation::Residuum};

bool commutative(Operation op) { return op != Operation::Residuum; }

Formula combine(Operation op, const Formula& a, const Formula& b) {
  switch (op) {
    case Operation::Meet: return Formula::conj(a, b);
    case Operation::Join: return Formula::disj(a, b);
    case Operation::Tnorm: return Formula::strong(a, b);
    case Operation::Residuum: return Formula::implies(a, b);
  }
  return a;
}

}  // namespace

GenericGrid::GenericGrid(int n, Variant variant)
    : arity_(n), variant_(variant), chain_(generic_chain_size(n, variant)), size_(1) {
  for (int i = 0; i < n; ++i) {
    size_ *= static_cast<std::size_t>(chain_.size());
    if (size_ > (std::size_t{1} << 24))
      throw ResourceError("grid of the generic chain has more than 2^24 points for arity " + std::to_string(n));
  }
}

std::vector<int> GenericGrid::point(std::size_t p) const {
  std::vector<int> coords(static_cast<std::size_t>(arity_));
  for (int i = arity_ - 1; i >= 0; --i) {
    coords[static_cast<std::size_t>(i)] = static_cast<int>(p % static_cast<std::size_t>(chain_.size()));
    p /= static_cast<std::size_t>(chain_.size());
  }
  return coords;
}

TruthVector GenericGrid::evaluate(const Formula& f) const {
  const int n = max_variable(f);
  if (n > arity_)
    throw SemanticError("formula mentions x" + std::to_string(n) + " but the arity is " + std::to_string(arity_));
  TruthVector out(size_);
  for (std::size_t p = 0; p < size_; ++p)
    out[p] = static_cast<std::uint8_t>(eval_indices(f, chain_.size(), point(p)));
  return out;
}

TruthVector GenericGrid::projection(int i) const {
  if (i < 1 || i > arity_)
    throw SemanticError("no projection x" + std::to_string(i) + " at arity " + std::to_string(arity_));
  TruthVector v(size_);
  for (std::size_t p = 0; p < size_; ++p) v[p] = static_cast<std::uint8_t>(point(p)[static_cast<std::size_t>(i - 1)]);
  return v;
}

FreeAlgebra::FreeAlgebra(int n, Variant variant) : grid_(n, variant) {}

std::optional<ElementId> FreeAlgebra::find(const TruthVector& v) const {
  const auto it = index_.find(key_of(v));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId FreeAlgebra::insert(TruthVector v, std::optional<Formula> rep) {
  auto [it, fresh] = index_.emplace(key_of(v), static_cast<ElementId>(vectors_.size()));
  if (fresh) {
    vectors_.push_back(std::move(v));
    representatives_.push_back(std::move(rep));
  }
  return it->second;
}

ElementId FreeAlgebra::projection(int i) const {
  if (i < 1 || i > arity()) throw SemanticError("no projection x" + std::to_string(i) + " in an algebra of arity " +
                                                std::to_string(arity()));
  return projections_[static_cast<std::size_t>(i - 1)];
}

TruthVector FreeAlgebra::compute(Operation op, const TruthVector& a, const TruthVector& b) const {
  const int k = chain().size();
  TruthVector out(a.size());
  for (std::size_t p = 0; p < a.size(); ++p) {
    int r = 0;
    switch (op) {
      case Operation::Meet: r = chain_ops::meet(a[p], b[p]); break;
      case Operation::Join: r = chain_ops::join(a[p], b[p]); break;
      case Operation::Tnorm: r = chain_ops::tnorm(k, a[p], b[p]); break;
      case Operation::Residuum: r = chain_ops::residuum(k, a[p], b[p]); break;
    }
    out[p] = static_cast<std::uint8_t>(r);
  }
  return out;
}

ElementId FreeAlgebra::apply(Operation op, ElementId x, ElementId y) const {
  const auto id = find(compute(op, vectors_[x], vectors_[y]));
  if (!id) throw std::logic_error("free algebra is not closed under an operation");
  return *id;
}

FreeAlgebra FreeAlgebra::build(int n, Variant variant, std::size_t element_cap) {
  if (element_cap == 0) throw SemanticError("element cap must be positive");
  FreeAlgebra a(n, variant);
  auto check_cap = [&] {
    if (a.vectors_.size() > element_cap) throw ResourceError(element_cap, a.vectors_.size());
  };

  a.bottom_ = a.insert(a.grid_.constant(0), Formula::bot());
  check_cap();
  a.top_ = a.insert(a.grid_.constant(a.chain().top()), Formula::top());
  check_cap();
  for (int i = 1; i <= n; ++i) {
    a.projections_.push_back(a.insert(a.grid_.projection(i), Formula::var(i)));
    check_cap();
  }

  // Each round combines every pair of known elements that involves at least
  // one element discovered in the previous round.
  std::size_t frontier = 0;
  for (;;) {
    const std::size_t known = a.vectors_.size();
    for (std::size_t i = 0; i < known; ++i) {
      for (std::size_t j = i < frontier ? frontier : 0; j < known; ++j) {
        for (Operation op : kOperations) {
          if (commutative(op) && j < i) continue;
          TruthVector v = a.compute(op, a.vectors_[i], a.vectors_[j]);
          if (a.index_.contains(key_of(v))) continue;
          a.insert(std::move(v), combine(op, *a.representatives_[i], *a.representatives_[j]));
          check_cap();
        }
      }
    }
    if (a.vectors_.size() == known) break;
    frontier = known;
  }
  a.annotate();
  return a;
}

FreeAlgebra FreeAlgebra::from_vectors(int n, Variant variant, std::vector<TruthVector> vectors) {
  FreeAlgebra a(n, variant);
  const int k = a.chain().size();
  for (auto& v : vectors) {
    if (v.size() != a.grid_size()) throw SemanticError("truth vector length does not match the grid");
    for (auto c : v)
      if (c >= k) throw SemanticError("truth vector entry outside the generic chain");
    const std::size_t before = a.vectors_.size();
    a.insert(std::move(v), std::nullopt);
    if (a.vectors_.size() == before) throw SemanticError("duplicate truth vector");
  }
  auto require = [&](const TruthVector& v, const char* what) {
    const auto id = a.find(v);
    if (!id) throw SemanticError(std::string("algebra lacks ") + what);
    return *id;
  };
  a.bottom_ = require(a.grid_.constant(0), "bottom");
  a.top_ = require(a.grid_.constant(k - 1), "top");
  for (int i = 1; i <= n; ++i) a.projections_.push_back(require(a.grid_.projection(i), "a projection"));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      for (Operation op : kOperations)
        if (!a.find(a.compute(op, a.vectors_[i], a.vectors_[j])))
          throw SemanticError("stored elements are not closed under the NM operations");
  a.annotate();
  return a;
}

void FreeAlgebra::annotate() {
  const std::size_t n = size();
  const std::size_t words = (n + 63) / 64;
  down_.assign(n, std::vector<std::uint64_t>(words, 0));
  for (std::size_t y = 0; y < n; ++y) {
    const auto& vy = vectors_[y];
    for (std::size_t x = 0; x < n; ++x) {
      const auto& vx = vectors_[x];
      bool le = true;
      for (std::size_t p = 0; p < vx.size() && le; ++p) le = vx[p] <= vy[p];
      if (le) down_[y][x / 64] |= std::uint64_t{1} << (x % 64);
    }
  }

  lower_covers_.assign(n, {});
  upper_covers_.assign(n, {});
  std::vector<std::uint64_t> covered(words);
  for (std::size_t y = 0; y < n; ++y) {
    std::fill(covered.begin(), covered.end(), 0);
    for (std::size_t z = 0; z < n; ++z) {
      if (z == y || !leq(static_cast<ElementId>(z), static_cast<ElementId>(y))) continue;
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t strict = down_[z][w];
        if (w == z / 64) strict &= ~(std::uint64_t{1} << (z % 64));
        covered[w] |= strict;
      }
    }
    // covered now holds everything strictly below some strict lower bound of y
    for (std::size_t x = 0; x < n; ++x) {
      if (x == y || !leq(static_cast<ElementId>(x), static_cast<ElementId>(y))) continue;
      if ((covered[x / 64] >> (x % 64)) & 1u) continue;
      lower_covers_[y].push_back(static_cast<ElementId>(x));
      upper_covers_[x].push_back(static_cast<ElementId>(y));
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto height = [&](std::size_t x) {
    std::size_t c = 0;
    for (auto w : down_[x]) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  };
  std::vector<std::size_t> heights(n);
  for (std::size_t x = 0; x < n; ++x) heights[x] = height(x);
  std::stable_sort(order.begin(), order.end(), [&](auto l, auto r) { return heights[l] < heights[r]; });
  rank_.assign(n, 0);
  for (std::size_t x : order)
    for (ElementId c : lower_covers_[x]) rank_[x] = std::max(rank_[x], rank_[c] + 1);
}

std::vector<std::pair<ElementId, ElementId>> FreeAlgebra::covers() const {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (std::size_t y = 0; y < size(); ++y)
    for (ElementId x : lower_covers_[y]) out.emplace_back(x, static_cast<ElementId>(y));
  std::sort(out.begin(), out.end());
  return out;
}

ElementId FreeAlgebra::element_of(const Formula& f) const {
  const auto id = find(evaluate(f));
  if (!id) throw std::logic_error("formula denotes a function outside the free algebra");
  return *id;
}

std::vector<ElementId> join_irreducibles(const FreeAlgebra& a) {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < a.size(); ++x)
    if (a.is_join_irreducible(x)) out.push_back(x);
  return out;
}

std::vector<bool> idempotents(const FreeAlgebra& a) {
  std::vector<bool> flags(a.size());
  for (ElementId x = 0; x < a.size(); ++x) flags[x] = a.is_idempotent(x);
  return flags;
}

std::vector<ElementId> minimal_idempotent_jis(const FreeAlgebra& a) {
  std::vector<ElementId> candidates;
  for (ElementId x : join_irreducibles(a))
    if (a.is_idempotent(x)) candidates.push_back(x);
  std::vector<ElementId> out;
  for (ElementId g : candidates) {
    const bool minimal = std::none_of(candidates.begin(), candidates.end(),
                                      [&](ElementId h) { return h != g && a.leq(h, g); });
    if (minimal) out.push_back(g);
  }
  return out;
}

bool is_tautology(const FreeAlgebra& a, const Formula& f) { return a.element_of(f) == a.top(); }

bool is_tautology(const GenericGrid& g, const Formula& f) { return g.evaluate(f) == g.constant(g.chain().top()); }

bool proves(const GenericGrid& g, const Formula& phi, const Formula& psi) {
  return is_tautology(g, Formula::implies(Formula::square(phi), psi));
}

bool proves(const FreeAlgebra& a, const Formula& phi, const Formula& psi) {
  return is_tautology(a, Formula::implies(Formula::square(phi), psi));
}

}  // namespace nmval
