#pragma once

#include <json.hpp>

#include <variant>

#include "ptab/tableau.hpp"

namespace ptab {

// {"family": "permutation", "n": int, "rows": [int], "filling": [[0|1]]}
// {"family": "treelike",    "n": int, "rows": [int], "points": [[r,c]]}
nlohmann::json to_json(const PermutationTableau& t);
nlohmann::json to_json(const TreeLikeTableau& t);

using AnyTableau = std::variant<PermutationTableau, TreeLikeTableau>;

// Structural decoding only; run the validators for the tableau rules.
// Throws std::invalid_argument on schema errors, including an "n" that
// disagrees with the shape length.
AnyTableau tableau_from_json(const nlohmann::json& j);
PermutationTableau permutation_tableau_from_json(const nlohmann::json& j);
TreeLikeTableau tree_like_tableau_from_json(const nlohmann::json& j);

}  // namespace ptab
