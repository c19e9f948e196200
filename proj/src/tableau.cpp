#include "ptab/tableau.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ptab {

int Shape::cells() const {
  int total = 0;
  for (int len : row_lengths) total += len;
  return total;
}

int BorderPath::south_steps() const {
  return static_cast<int>(std::count(steps.begin(), steps.end(), Step::South));
}

int BorderPath::west_steps() const {
  return static_cast<int>(std::count(steps.begin(), steps.end(), Step::West));
}

std::string BorderPath::str() const {
  std::string out;
  out.reserve(steps.size());
  for (Step s : steps) out.push_back(static_cast<char>(s));
  return out;
}

BorderPath BorderPath::parse(std::string_view text) {
  BorderPath path;
  path.steps.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'S': path.steps.push_back(Step::South); break;
      case 'W': path.steps.push_back(Step::West); break;
      default:
        throw std::invalid_argument("border path step must be 'S' or 'W', got '" +
                                    std::string(1, ch) + "'");
    }
  }
  return path;
}

std::vector<Violation> validate_shape(const Shape& shape) {
  std::vector<Violation> out;
  if (shape.row_lengths.empty()) {
    out.push_back({"shape", "shape has no rows"});
    return out;
  }
  for (int i = 0; i < shape.rows(); ++i) {
    if (shape.row_lengths[i] < 0) {
      out.push_back({"shape", "negative row length", i + 1, 0});
    }
    if (i > 0 && shape.row_lengths[i] > shape.row_lengths[i - 1]) {
      out.push_back({"shape", "row lengths must be weakly decreasing", i + 1, 0});
    }
  }
  if (shape.length <= 0) {
    out.push_back({"shape", "declared length must be positive"});
  }
  if (shape.length != shape.rows() + shape.columns()) {
    out.push_back({"shape", "declared length " + std::to_string(shape.length) +
                                " != rows + columns = " +
                                std::to_string(shape.rows() + shape.columns())});
  }
  return out;
}

BorderPath border_path(const Shape& shape) {
  if (auto v = validate_shape(shape); !v.empty()) {
    throw std::invalid_argument("malformed shape: " + describe(v.front()));
  }
  BorderPath path;
  path.steps.reserve(static_cast<std::size_t>(shape.length));
  int x = shape.columns();
  for (int len : shape.row_lengths) {
    for (; x > len; --x) path.steps.push_back(Step::West);
    path.steps.push_back(Step::South);
  }
  for (; x > 0; --x) path.steps.push_back(Step::West);
  return path;
}

Shape shape_of(const BorderPath& path) {
  Shape shape;
  shape.length = static_cast<int>(path.size());
  int west_left = path.west_steps();
  for (Step s : path.steps) {
    if (s == Step::West) {
      --west_left;
    } else {
      shape.row_lengths.push_back(west_left);
    }
  }
  return shape;
}

int corners(const BorderPath& path) {
  int c = 0;
  for (std::size_t i = 1; i < path.steps.size(); ++i) {
    if (path.steps[i - 1] == Step::South && path.steps[i] == Step::West) ++c;
  }
  return c;
}

int inner_corners(const BorderPath& path) {
  int c = 0;
  for (std::size_t i = 1; i < path.steps.size(); ++i) {
    if (path.steps[i - 1] == Step::West && path.steps[i] == Step::South) ++c;
  }
  return c;
}

int corners(const Shape& shape) { return corners(border_path(shape)); }
int corners(const PermutationTableau& t) { return corners(t.shape); }
int corners(const TreeLikeTableau& t) { return corners(t.shape); }

std::vector<Violation> validate_permutation_tableau(const PermutationTableau& t) {
  std::vector<Violation> out = validate_shape(t.shape);
  if (!out.empty()) return out;

  const int rows = t.shape.rows();
  const int cols = t.shape.columns();
  if (static_cast<int>(t.filling.size()) != rows) {
    out.push_back({"filling", "filling has " + std::to_string(t.filling.size()) +
                                  " rows, shape has " + std::to_string(rows)});
    return out;
  }
  bool malformed = false;
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(t.filling[r].size()) != t.shape.row_lengths[r]) {
      out.push_back({"filling", "row length does not match shape", r + 1, 0});
      malformed = true;
      continue;
    }
    for (int c = 0; c < t.shape.row_lengths[r]; ++c) {
      if (t.filling[r][c] > 1) {
        out.push_back({"filling", "entries must be 0 or 1", r + 1, c + 1});
        malformed = true;
      }
    }
  }
  if (malformed) return out;

  for (int c = 0; c < cols; ++c) {
    bool has_one = false;
    for (int r = 0; r < rows && c < t.shape.row_lengths[r]; ++r) {
      has_one = has_one || t.filling[r][c] == 1;
    }
    if (!has_one) out.push_back({"rule1", "column has no 1", 0, c + 1});
  }

  // one_above[c]: a 1 has been seen in column c in an earlier row.
  std::vector<bool> one_above(static_cast<std::size_t>(cols), false);
  for (int r = 0; r < rows; ++r) {
    bool one_left = false;
    for (int c = 0; c < t.shape.row_lengths[r]; ++c) {
      if (t.filling[r][c] == 0 && one_left && one_above[c]) {
        out.push_back({"rule2", "0 with a 1 above and a 1 to its left", r + 1, c + 1});
      }
      if (t.filling[r][c] == 1) one_left = true;
    }
    for (int c = 0; c < t.shape.row_lengths[r]; ++c) {
      if (t.filling[r][c] == 1) one_above[c] = true;
    }
  }
  return out;
}

std::vector<Violation> validate_tree_like_tableau(const TreeLikeTableau& t) {
  std::vector<Violation> out = validate_shape(t.shape);
  if (!out.empty()) return out;

  const int rows = t.shape.rows();
  const int cols = t.shape.columns();
  if (cols == 0) out.push_back({"empty-column", "tree-like tableau has no columns"});
  for (int r = 0; r < rows; ++r) {
    if (t.shape.row_lengths[r] == 0) out.push_back({"empty-row", "row has no cells", r + 1, 0});
  }
  if (!out.empty()) return out;

  auto inside = [&](const Cell& p) {
    return p.row >= 1 && p.row <= rows && p.column >= 1 &&
           p.column <= t.shape.row_lengths[p.row - 1];
  };
  std::set<Cell> points;
  for (const Cell& p : t.points) {
    if (!inside(p)) {
      out.push_back({"points", "point outside the diagram", p.row, p.column});
    } else if (!points.insert(p).second) {
      out.push_back({"points", "duplicate point", p.row, p.column});
    }
  }
  if (!out.empty()) return out;

  if (!points.contains(Cell{1, 1})) out.push_back({"rule1", "root cell is not pointed", 1, 1});

  std::vector<int> per_row(static_cast<std::size_t>(rows), 0);
  std::vector<int> per_col(static_cast<std::size_t>(cols), 0);
  for (const Cell& p : points) {
    ++per_row[p.row - 1];
    ++per_col[p.column - 1];
  }
  for (int r = 0; r < rows; ++r) {
    if (per_row[r] == 0) out.push_back({"rule2", "row has no point", r + 1, 0});
  }
  for (int c = 0; c < cols; ++c) {
    if (per_col[c] == 0) out.push_back({"rule2", "column has no point", 0, c + 1});
  }

  for (const Cell& p : points) {
    if (p == Cell{1, 1}) continue;
    bool above_empty = true;
    for (int r = 1; r < p.row; ++r) above_empty = above_empty && !points.contains(Cell{r, p.column});
    bool left_empty = true;
    for (int c = 1; c < p.column; ++c) left_empty = left_empty && !points.contains(Cell{p.row, c});
    if (above_empty == left_empty) {
      out.push_back({"rule3",
                     above_empty ? "point has empty cells both above and to its left"
                                 : "point has points both above and to its left",
                     p.row, p.column});
    }
  }
  return out;
}

std::vector<int> unrestricted_row_indices(const PermutationTableau& t) {
  std::vector<int> out;
  const int cols = t.shape.columns();
  std::vector<bool> one_above(static_cast<std::size_t>(cols), false);
  for (int r = 0; r < t.shape.rows(); ++r) {
    const auto& row = t.filling[r];
    bool restricted = false;
    for (std::size_t c = 0; c < row.size(); ++c) {
      restricted = restricted || (row[c] == 0 && one_above[c]);
    }
    if (!restricted) out.push_back(r + 1);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] == 1) one_above[c] = true;
    }
  }
  return out;
}

int unrestricted_rows(const PermutationTableau& t) {
  return static_cast<int>(unrestricted_row_indices(t).size());
}

std::string describe(const Violation& v) {
  std::string out = v.rule + ": " + v.detail;
  if (v.row > 0 || v.column > 0) {
    out += " at (" + std::to_string(v.row) + "," + std::to_string(v.column) + ")";
  }
  return out;
}

}  // namespace ptab
