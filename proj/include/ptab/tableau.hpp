#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ptab {

// Ferrers diagram: row lengths top to bottom plus the declared length
// (rows + columns). The same cells can carry different lengths because
// trailing rows may be empty, so the length is stored, not derived.
struct Shape {
  std::vector<int> row_lengths;
  int length = 0;

  int rows() const { return static_cast<int>(row_lengths.size()); }
  int columns() const { return row_lengths.empty() ? 0 : row_lengths.front(); }
  int cells() const;

  friend bool operator==(const Shape&, const Shape&) = default;
};

enum class Step : char { South = 'S', West = 'W' };

// Southeast boundary, stored northeast to southwest.
struct BorderPath {
  std::vector<Step> steps;

  std::size_t size() const { return steps.size(); }
  int south_steps() const;
  int west_steps() const;
  std::string str() const;

  // Throws std::invalid_argument on any character other than 'S' or 'W'.
  static BorderPath parse(std::string_view text);

  friend bool operator==(const BorderPath&, const BorderPath&) = default;
};

// 1-based, (1,1) is the top-left cell.
struct Cell {
  int row = 0;
  int column = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct PermutationTableau {
  Shape shape;
  // One vector per row (empty rows included), each of the row's length.
  std::vector<std::vector<std::uint8_t>> filling;

  int size() const { return shape.length; }

  friend bool operator==(const PermutationTableau&, const PermutationTableau&) = default;
};

struct TreeLikeTableau {
  Shape shape;
  std::vector<Cell> points;  // kept sorted

  int size() const { return shape.length - 1; }

  friend bool operator==(const TreeLikeTableau&, const TreeLikeTableau&) = default;
};

struct Violation {
  std::string rule;  // "shape", "filling", "rule1", "rule2", "rule3", "empty-row", ...
  std::string detail;
  int row = 0;
  int column = 0;
};

std::vector<Violation> validate_shape(const Shape& shape);

// Throws std::invalid_argument when the shape is malformed.
BorderPath border_path(const Shape& shape);
// Inverse of border_path.
Shape shape_of(const BorderPath& path);

// Adjacent (SOUTH, WEST) pairs in northeast-to-southwest order.
int corners(const BorderPath& path);
// Adjacent (WEST, SOUTH) pairs, i.e. (NORTH, EAST) read southwest to northeast.
int inner_corners(const BorderPath& path);

int corners(const Shape& shape);
int corners(const PermutationTableau& t);
int corners(const TreeLikeTableau& t);

// Empty result means the candidate is a permutation tableau. Never throws.
std::vector<Violation> validate_permutation_tableau(const PermutationTableau& t);
std::vector<Violation> validate_tree_like_tableau(const TreeLikeTableau& t);

// 1-based indices of rows without a restricted zero (a zero with a one
// above it), top to bottom. Empty rows count as unrestricted.
std::vector<int> unrestricted_row_indices(const PermutationTableau& t);
int unrestricted_rows(const PermutationTableau& t);

std::string describe(const Violation& v);

}  // namespace ptab
