#include "ptab/tableau_json.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptab {

using nlohmann::json;

namespace {

Shape read_shape(const json& j, int expected_offset) {
  if (!j.contains("rows") || !j.at("rows").is_array()) {
    throw std::invalid_argument("tableau JSON needs a \"rows\" array");
  }
  if (!j.contains("n") || !j.at("n").is_number_integer()) {
    throw std::invalid_argument("tableau JSON needs an integer \"n\"");
  }
  Shape shape;
  for (const auto& v : j.at("rows")) {
    if (!v.is_number_integer()) throw std::invalid_argument("row lengths must be integers");
    shape.row_lengths.push_back(v.get<int>());
  }
  shape.length = shape.rows() + shape.columns();
  const int n = j.at("n").get<int>();
  if (n + expected_offset != shape.length) {
    throw std::invalid_argument("\"n\" = " + std::to_string(n) +
                                " does not match the shape (length " +
                                std::to_string(shape.length) + ")");
  }
  return shape;
}

void expect_family(const json& j, const std::string& family) {
  if (!j.contains("family") || j.at("family") != family) {
    throw std::invalid_argument("expected \"family\": \"" + family + "\"");
  }
}

}  // namespace

json to_json(const PermutationTableau& t) {
  json filling = json::array();
  for (const auto& row : t.filling) {
    json r = json::array();
    for (auto v : row) r.push_back(static_cast<int>(v));
    filling.push_back(std::move(r));
  }
  return {{"family", "permutation"},
          {"n", t.size()},
          {"rows", t.shape.row_lengths},
          {"filling", std::move(filling)}};
}

json to_json(const TreeLikeTableau& t) {
  json points = json::array();
  for (const Cell& p : t.points) points.push_back({p.row, p.column});
  return {{"family", "treelike"},
          {"n", t.size()},
          {"rows", t.shape.row_lengths},
          {"points", std::move(points)}};
}

PermutationTableau permutation_tableau_from_json(const json& j) {
  expect_family(j, "permutation");
  PermutationTableau t;
  t.shape = read_shape(j, 0);
  if (!j.contains("filling") || !j.at("filling").is_array()) {
    throw std::invalid_argument("permutation tableau JSON needs a \"filling\" array");
  }
  for (const auto& row : j.at("filling")) {
    if (!row.is_array()) throw std::invalid_argument("filling rows must be arrays");
    std::vector<std::uint8_t> r;
    for (const auto& v : row) {
      if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1)) {
        throw std::invalid_argument("filling entries must be 0 or 1");
      }
      r.push_back(static_cast<std::uint8_t>(v.get<int>()));
    }
    t.filling.push_back(std::move(r));
  }
  return t;
}

TreeLikeTableau tree_like_tableau_from_json(const json& j) {
  expect_family(j, "treelike");
  TreeLikeTableau t;
  t.shape = read_shape(j, 1);
  if (!j.contains("points") || !j.at("points").is_array()) {
    throw std::invalid_argument("tree-like tableau JSON needs a \"points\" array");
  }
  for (const auto& p : j.at("points")) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer()) {
      throw std::invalid_argument("points must be [row, column] integer pairs");
    }
    t.points.push_back({p[0].get<int>(), p[1].get<int>()});
  }
  std::sort(t.points.begin(), t.points.end());
  return t;
}

AnyTableau tableau_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string()) {
    throw std::invalid_argument("tableau JSON needs a string \"family\"");
  }
  const auto family = j.at("family").get<std::string>();
  if (family == "permutation") return permutation_tableau_from_json(j);
  if (family == "treelike") return tree_like_tableau_from_json(j);
  throw std::invalid_argument("unknown family \"" + family + "\"");
}

}  // namespace ptab
