#include "nmval/export.hpp"

#include <algorithm>
#include <sstream>

#include "nmval/errors.hpp"
#include "nmval/filters.hpp"
#include "nmval/valuations.hpp"

namespace nmval {

namespace {

constexpr const char* kGridOrder = "lex-by-index";

}  // namespace

nlohmann::json export_json(const FreeAlgebra& a) {
  nlohmann::json doc;
  doc["n"] = a.arity();
  doc["variant"] = to_string(a.variant());
  doc["chain_size"] = a.chain().size();
  doc["grid_order"] = kGridOrder;
  auto& elements = doc["elements"] = nlohmann::json::array();
  for (ElementId x = 0; x < a.size(); ++x) {
    std::vector<int> v(a.vector(x).begin(), a.vector(x).end());
    elements.push_back({{"id", x}, {"vector", v}});
  }
  doc["bottom"] = a.bottom();
  doc["top"] = a.top();
  auto& covers = doc["covers"] = nlohmann::json::array();
  for (auto [child, parent] : a.covers()) covers.push_back({child, parent});
  doc["join_irreducible"] = join_irreducibles(a);
  std::vector<ElementId> idem;
  for (ElementId x = 0; x < a.size(); ++x)
    if (a.is_idempotent(x)) idem.push_back(x);
  doc["idempotent"] = idem;
  return doc;
}

FreeAlgebra import_json(const nlohmann::json& doc) {
  try {
    const int n = doc.at("n").get<int>();
    const Variant variant = parse_variant(doc.at("variant").get<std::string>());
    if (doc.at("chain_size").get<int>() != generic_chain_size(n, variant))
      throw SemanticError("chain_size does not match arity and variant");
    if (doc.at("grid_order").get<std::string>() != kGridOrder) throw SemanticError("unsupported grid_order");
    std::vector<TruthVector> vectors;
    const auto& elements = doc.at("elements");
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i].at("id").get<std::size_t>() != i) throw SemanticError("element ids must be 0..size-1 in order");
      std::vector<int> v = elements[i].at("vector").get<std::vector<int>>();
      TruthVector tv;
      for (int c : v) {
        if (c < 0 || c > 255) throw SemanticError("truth vector entry out of range");
        tv.push_back(static_cast<std::uint8_t>(c));
      }
      vectors.push_back(std::move(tv));
    }
    FreeAlgebra a = FreeAlgebra::from_vectors(n, variant, std::move(vectors));
    if (doc.at("bottom").get<ElementId>() != a.bottom() || doc.at("top").get<ElementId>() != a.top())
      throw SemanticError("bottom/top ids disagree with the truth vectors");
    const auto recomputed = export_json(a);
    for (const char* field : {"covers", "join_irreducible", "idempotent"})
      if (doc.at(field) != recomputed.at(field))
        throw SemanticError(std::string("stored ") + field + " disagree with the recomputed lattice");
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw SemanticError(std::string("malformed algebra document: ") + e.what());
  }
}

std::string hasse_dot(const FreeAlgebra& a) {
  const auto chi_plus = Valuation::idempotent_euler_characteristic(a);
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (ElementId x = 0; x < a.size(); ++x) out << "  " << x << " [label=\"" << x << ":" << chi_plus(x) << "\"];\n";
  for (auto [child, parent] : a.covers()) out << "  " << child << " -> " << parent << ";\n";
  out << "}\n";
  return out.str();
}

std::string forest_dot(const FreeAlgebra& a) {
  const auto f = forest(a);
  std::ostringstream out;
  out << "digraph prime_filters {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < f.nodes.size(); ++i)
    out << "  f" << i << " [label=\"up(" << f.nodes[i].generator << ") size " << f.nodes[i].members.size() << "\"];\n";
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < f.nodes.size(); ++i)
    if (f.parent[i]) edges.emplace_back(i, *f.parent[i]);
  std::sort(edges.begin(), edges.end());
  for (auto [c, p] : edges) out << "  f" << c << " -> f" << p << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace nmval
