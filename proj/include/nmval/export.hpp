#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "nmval/free_algebra.hpp"

namespace nmval {

/// JSON document with the arity, variant, chain size, grid convention,
/// truth vectors, covers and join-irreducible / idempotent annotations.
nlohmann::json export_json(const FreeAlgebra& a);

/// Rebuild an algebra from export_json() output. Throws SemanticError when
/// the document is inconsistent (wrong chain size, unclosed element set,
/// annotations that disagree with the recomputed ones).
FreeAlgebra import_json(const nlohmann::json& doc);

/// Hasse diagram: nodes labelled "id:chi+", cover edges child -> parent,
/// nodes sorted by id and edges lexicographically.
std::string hasse_dot(const FreeAlgebra& a);

/// Forest of prime filters; edges run from a filter to its parent.
std::string forest_dot(const FreeAlgebra& a);

}  // namespace nmval
