#include "nmval/filters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "nmval/errors.hpp"

namespace nmval {

bool Filter::contains(ElementId x) const { return std::binary_search(members.begin(), members.end(), x); }

Filter principal_filter(const FreeAlgebra& a, ElementId g) {
  Filter f{g, {}};
  for (ElementId x = 0; x < a.size(); ++x)
    if (a.leq(g, x)) f.members.push_back(x);
  return f;
}

namespace {

std::vector<bool> membership(const FreeAlgebra& a, const std::vector<ElementId>& s) {
  std::vector<bool> in(a.size());
  for (ElementId x : s) in[x] = true;
  return in;
}

}  // namespace

bool is_upper_set(const FreeAlgebra& a, const std::vector<ElementId>& s) {
  const auto in = membership(a, s);
  for (ElementId x : s)
    for (ElementId y = 0; y < a.size(); ++y)
      if (a.leq(x, y) && !in[y]) return false;
  return true;
}

bool is_filter(const FreeAlgebra& a, const std::vector<ElementId>& s) {
  if (s.empty() || !is_upper_set(a, s)) return false;
  const auto in = membership(a, s);
  for (ElementId x : s)
    for (ElementId y : s)
      if (!in[a.tnorm(x, y)]) return false;
  return true;
}

bool is_prime_filter(const FreeAlgebra& a, const std::vector<ElementId>& s) {
  if (!is_filter(a, s)) return false;
  const auto in = membership(a, s);
  if (in[a.bottom()]) return false;
  for (ElementId x = 0; x < a.size(); ++x) {
    if (in[x]) continue;
    for (ElementId y = 0; y < a.size(); ++y)
      if (!in[y] && in[a.join(x, y)]) return false;
  }
  return true;
}

std::vector<Filter> prime_filters(const FreeAlgebra& a) {
  std::vector<Filter> out;
  for (ElementId g : join_irreducibles(a)) {
    if (!a.is_idempotent(g)) continue;
    Filter f = principal_filter(a, g);
    if (!is_prime_filter(a, f.members))
      throw std::logic_error("idempotent join-irreducible " + std::to_string(g) + " does not generate a prime filter");
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Filter> prime_filters_by_enumeration(const FreeAlgebra& a) {
  std::vector<Filter> out;
  for (ElementId x = 0; x < a.size(); ++x) {
    Filter f = principal_filter(a, x);
    if (is_prime_filter(a, f.members)) out.push_back(std::move(f));
  }
  return out;
}

namespace {

bool strict_subset(const Filter& small, const Filter& big) {
  return small.members.size() < big.members.size() &&
         std::includes(big.members.begin(), big.members.end(), small.members.begin(), small.members.end());
}

}  // namespace

std::vector<std::size_t> PrimeFilterForest::roots() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (!parent[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> PrimeFilterForest::ancestors(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < nodes.size(); ++j)
    if (strict_subset(nodes[i], nodes[j])) out.push_back(j);
  return out;
}

bool PrimeFilterForest::is_forest() const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto up = ancestors(i);
    for (std::size_t s : up)
      for (std::size_t t : up)
        if (s != t && !strict_subset(nodes[s], nodes[t]) && !strict_subset(nodes[t], nodes[s])) return false;
  }
  return true;
}

PrimeFilterForest forest(const FreeAlgebra& a) {
  PrimeFilterForest f;
  f.nodes = prime_filters(a);
  f.parent.assign(f.nodes.size(), std::nullopt);
  for (std::size_t i = 0; i < f.nodes.size(); ++i) {
    for (std::size_t j : f.ancestors(i)) {
      if (!f.parent[i] || f.nodes[j].members.size() < f.nodes[*f.parent[i]].members.size()) f.parent[i] = j;
    }
  }
  return f;
}

QuotientChain quotient_by_maximal(const FreeAlgebra& a, const Filter& p) {
  if (!is_prime_filter(a, p.members)) throw SemanticError("filter is not prime");
  for (const Filter& q : prime_filters(a))
    if (strict_subset(p, q)) throw SemanticError("prime filter is not maximal");

  const std::size_t n = a.size();
  QuotientChain q;
  q.class_of.assign(n, n);
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < n; ++x) {
    for (std::size_t c = 0; c < reps.size() && q.class_of[x] == n; ++c)
      if (p.contains(a.biresiduum(x, reps[c]))) q.class_of[x] = c;
    if (q.class_of[x] == n) {
      q.class_of[x] = reps.size();
      reps.push_back(x);
    }
  }

  // Order classes by (x -> y) in p; it must be a total order.
  std::vector<std::size_t> order(reps.size());
  std::iota(order.begin(), order.end(), 0);
  auto below = [&](std::size_t c, std::size_t d) { return p.contains(a.residuum(reps[c], reps[d])); };
  for (std::size_t c = 0; c < reps.size(); ++c)
    for (std::size_t d = 0; d < reps.size(); ++d)
      if (c != d && below(c, d) == below(d, c)) throw std::logic_error("quotient classes are not totally ordered");
  std::sort(order.begin(), order.end(), [&](auto c, auto d) { return c != d && below(c, d); });
  std::vector<std::size_t> position(reps.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  q.classes.assign(reps.size(), {});
  for (ElementId x = 0; x < n; ++x) {
    q.class_of[x] = position[q.class_of[x]];
    q.classes[q.class_of[x]].push_back(x);
  }

  const int k = static_cast<int>(q.size());
  if (k < 2) throw std::logic_error("quotient by a prime filter collapsed");
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      const int cx = static_cast<int>(q.class_of[x]);
      const int cy = static_cast<int>(q.class_of[y]);
      const bool ok = static_cast<int>(q.class_of[a.meet(x, y)]) == chain_ops::meet(cx, cy) &&
                      static_cast<int>(q.class_of[a.join(x, y)]) == chain_ops::join(cx, cy) &&
                      static_cast<int>(q.class_of[a.tnorm(x, y)]) == chain_ops::tnorm(k, cx, cy) &&
                      static_cast<int>(q.class_of[a.residuum(x, y)]) == chain_ops::residuum(k, cx, cy);
      if (!ok) throw std::logic_error("quotient is not an NM chain of size " + std::to_string(k));
    }
  }
  return q;
}

}  // namespace nmval
