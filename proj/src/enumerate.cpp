#include "ptab/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "ptab/error.hpp"

namespace ptab {

namespace {

using JointCounts = std::vector<std::vector<std::uint64_t>>;  // [corners][u]

void check_size(int n, int cap, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
  if (n > cap) {
    throw LimitExceeded(std::string(what) + ": n = " + std::to_string(n) +
                        " exceeds the enumeration cap " + std::to_string(cap));
  }
}

void subsets_after(int first, int last, std::vector<int>& current,
                   std::vector<std::vector<int>>& out) {
  out.push_back(current);
  for (int next = current.empty() ? first : current.back() + 1; next <= last; ++next) {
    current.push_back(next);
    subsets_after(first, last, current, out);
    current.pop_back();
  }
}

// Choice lists are shared by every node with the same u.
std::vector<std::vector<ExtensionChoice>> choice_table(int max_u) {
  std::vector<std::vector<ExtensionChoice>> table(static_cast<std::size_t>(max_u) + 1);
  for (int u = 1; u <= max_u; ++u) table[u] = extension_choices(u);
  return table;
}

int corners_of_rows(const std::vector<int>& row_lengths) {
  int c = 0;
  int prev = -1;
  for (int len : row_lengths) {
    if (len > 0 && len != prev) ++c;
    prev = len;
  }
  return c;
}

void descend(const TableauNode& node, int n,
             const std::vector<std::vector<ExtensionChoice>>& choices,
             const PermutationVisitor& visit) {
  if (node.tableau.size() == n) {
    visit(node);
    return;
  }
  for (const auto& choice : choices[node.u()]) descend(extend(node, choice), n, choices, visit);
}

JointCounts joint_counts(int n, Exec exec) {
  check_size(n, kPermutationEnumerationCap, "permutation tableaux");
  const auto choices = choice_table(n);
  const auto width = static_cast<std::size_t>(n) + 1;
  JointCounts total(width, std::vector<std::uint64_t>(width, 0));

  auto tally = [](JointCounts& acc) {
    return [&acc](const TableauNode& leaf) {
      ++acc[corners_of_rows(leaf.tableau.shape.row_lengths)][leaf.u()];
    };
  };

  if (exec == Exec::serial) {
    descend(unit_node(), n, choices, tally(total));
    return total;
  }

  // Split the extension tree at a fixed length; subtrees are independent.
  const int split = std::min(n, 6);
  std::vector<TableauNode> frontier;
  descend(unit_node(), split, choices, [&](const TableauNode& t) { frontier.push_back(t); });

#pragma omp parallel
  {
    JointCounts local(width, std::vector<std::uint64_t>(width, 0));
    auto visit = tally(local);
#pragma omp for schedule(dynamic)
    for (std::size_t i = 0; i < frontier.size(); ++i) descend(frontier[i], n, choices, visit);
#pragma omp critical(ptab_joint_counts)
    for (std::size_t c = 0; c < width; ++c) {
      for (std::size_t u = 0; u < width; ++u) total[c][u] += local[c][u];
    }
  }
  return total;
}

// Row-major search over point placements of one tree-like shape.
class PointSearch {
 public:
  PointSearch(const Shape& shape, const TreeLikeVisitor& visit) : shape_(shape), visit_(visit) {
    for (int r = 0; r < shape.rows(); ++r) {
      for (int c = 1; c <= shape.row_lengths[r]; ++c) cells_.push_back({r + 1, c});
    }
    col_height_.assign(static_cast<std::size_t>(shape.columns()) + 1, 0);
    for (int r = 0; r < shape.rows(); ++r) {
      for (int c = 1; c <= shape.row_lengths[r]; ++c) col_height_[c] = r + 1;
    }
    row_points_.assign(static_cast<std::size_t>(shape.rows()) + 1, 0);
    col_points_.assign(static_cast<std::size_t>(shape.columns()) + 1, 0);
  }

  void run() { step(0); }

 private:
  void step(std::size_t k) {
    if (k == cells_.size()) {
      visit_(TreeLikeTableau{shape_, chosen_});
      return;
    }
    const Cell cell = cells_[k];
    const bool root = cell.row == 1 && cell.column == 1;
    const bool row_end = cell.column == shape_.row_lengths[cell.row - 1];
    const bool col_end = cell.row == col_height_[cell.column];

    if (!root) {
      const bool row_ok = !row_end || row_points_[cell.row] > 0;
      const bool col_ok = !col_end || col_points_[cell.column] > 0;
      if (row_ok && col_ok) step(k + 1);
    }
    const bool above_empty = col_points_[cell.column] == 0;
    const bool left_empty = row_points_[cell.row] == 0;
    if (root || above_empty != left_empty) {
      chosen_.push_back(cell);
      ++row_points_[cell.row];
      ++col_points_[cell.column];
      step(k + 1);
      --row_points_[cell.row];
      --col_points_[cell.column];
      chosen_.pop_back();
    }
  }

  const Shape& shape_;
  const TreeLikeVisitor& visit_;
  std::vector<Cell> cells_;
  std::vector<int> col_height_;
  std::vector<int> row_points_;
  std::vector<int> col_points_;
  std::vector<Cell> chosen_;
};

// Tree-like shapes of size n: the path starts SOUTH, ends WEST, and the
// n - 1 steps in between are free. Bit i of mask (from the top) is step i+1.
Shape tree_like_shape(int n, std::uint64_t mask) {
  BorderPath path;
  path.steps.push_back(Step::South);
  for (int i = n - 2; i >= 0; --i) {
    path.steps.push_back(((mask >> i) & 1U) != 0 ? Step::West : Step::South);
  }
  path.steps.push_back(Step::West);
  return shape_of(path);
}

}  // namespace

TableauNode unit_node() {
  TableauNode node;
  node.tableau.shape = Shape{{0}, 1};
  node.tableau.filling = {{}};
  node.unrestricted = {1};
  return node;
}

TableauNode extend(const TableauNode& node, const ExtensionChoice& choice) {
  TableauNode out;
  const auto& t = node.tableau;
  if (choice.kind == ExtensionChoice::Kind::South) {
    if (choice.topmost != 0 || !choice.extra_ones.empty()) {
      throw std::out_of_range("SOUTH extension carries no filling data");
    }
    out.tableau = t;
    out.tableau.shape.row_lengths.push_back(0);
    out.tableau.shape.length += 1;
    out.tableau.filling.emplace_back();
    out.unrestricted = node.unrestricted;
    out.unrestricted.push_back(t.shape.rows() + 1);
    return out;
  }

  const int u = node.u();
  const int j = choice.topmost;
  if (j < 1 || j > u) {
    throw std::out_of_range("WEST extension: topmost index " + std::to_string(j) +
                            " outside 1.." + std::to_string(u));
  }
  for (std::size_t i = 0; i < choice.extra_ones.size(); ++i) {
    const int p = choice.extra_ones[i];
    if (p <= j || p > u || (i > 0 && p <= choice.extra_ones[i - 1])) {
      throw std::out_of_range("WEST extension: extra ones must be increasing positions in " +
                              std::to_string(j + 1) + ".." + std::to_string(u));
    }
  }

  // New leftmost column. position[r] is the 1-based rank of row r among the
  // unrestricted rows, 0 for restricted rows.
  const int rows = t.shape.rows();
  std::vector<int> position(static_cast<std::size_t>(rows) + 1, 0);
  for (int p = 1; p <= u; ++p) position[node.unrestricted[p - 1]] = p;

  out.tableau.shape.length = t.shape.length + 1;
  out.tableau.shape.row_lengths.reserve(static_cast<std::size_t>(rows));
  out.tableau.filling.reserve(static_cast<std::size_t>(rows));
  auto extra = choice.extra_ones.begin();
  for (int r = 1; r <= rows; ++r) {
    const int p = position[r];
    std::uint8_t bit = 0;
    if (p == j) {
      bit = 1;
    } else if (p > j && extra != choice.extra_ones.end() && *extra == p) {
      bit = 1;
      ++extra;
    }
    if (p != 0 && (p <= j || bit == 1)) out.unrestricted.push_back(r);

    std::vector<std::uint8_t> row;
    row.reserve(t.filling[r - 1].size() + 1);
    row.push_back(bit);
    row.insert(row.end(), t.filling[r - 1].begin(), t.filling[r - 1].end());
    out.tableau.filling.push_back(std::move(row));
    out.tableau.shape.row_lengths.push_back(t.shape.row_lengths[r - 1] + 1);
  }
  return out;
}

PermutationTableau extend(const PermutationTableau& t, const ExtensionChoice& choice) {
  TableauNode node{t, unrestricted_row_indices(t)};
  return extend(node, choice).tableau;
}

std::vector<ExtensionChoice> extension_choices(int u) {
  if (u < 1) throw std::invalid_argument("extension_choices: u must be >= 1");
  std::vector<ExtensionChoice> out;
  out.push_back(ExtensionChoice::south());
  for (int j = 1; j <= u; ++j) {
    std::vector<std::vector<int>> subsets;
    std::vector<int> current;
    subsets_after(j + 1, u, current, subsets);
    for (auto& s : subsets) out.push_back(ExtensionChoice::west(j, std::move(s)));
  }
  return out;
}

BigInt extensions_with_k(int u, int k) {
  if (u < 1 || k < 1 || k > u + 1) return 0;
  if (k == u + 1) return 1;
  return binomial(static_cast<unsigned long>(u), static_cast<unsigned long>(k - 1));
}

void enumerate_permutation_tableaux(int n, const PermutationVisitor& visit, int cap) {
  check_size(n, cap, "permutation tableaux");
  descend(unit_node(), n, choice_table(n), visit);
}

void enumerate_tree_like_tableaux(int n, const TreeLikeVisitor& visit, int cap) {
  check_size(n, cap, "tree-like tableaux");
  const std::uint64_t shapes = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < shapes; ++mask) {
    const Shape shape = tree_like_shape(n, mask);
    PointSearch(shape, visit).run();
  }
}

std::vector<PermutationTableau> all_permutation_tableaux(int n) {
  std::vector<PermutationTableau> out;
  enumerate_permutation_tableaux(n, [&](const TableauNode& t) { out.push_back(t.tableau); });
  return out;
}

std::vector<TreeLikeTableau> all_tree_like_tableaux(int n) {
  std::vector<TreeLikeTableau> out;
  enumerate_tree_like_tableaux(n, [&](const TreeLikeTableau& t) { out.push_back(t); });
  return out;
}

std::string to_string(Family f) {
  return f == Family::permutation ? "permutation" : "treelike";
}

std::string to_string(Statistic s) {
  return s == Statistic::corners ? "corners" : "unrestricted";
}

BigInt DistributionTable::total() const {
  BigInt t = 0;
  for (const auto& [value, count] : counts) t += count;
  return t;
}

Rational DistributionTable::raw_moment(int k) const {
  BigInt sum = 0;
  for (const auto& [value, count] : counts) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(value), static_cast<unsigned long>(k));
    sum += p * count;
  }
  return make_rational(sum, total());
}

Rational DistributionTable::mean() const { return raw_moment(1); }

DistributionTable distribution(int n, Family family, Statistic stat, Exec exec) {
  DistributionTable table{n, family, stat, {}};
  if (family == Family::permutation) {
    const JointCounts joint = joint_counts(n, exec);
    for (std::size_t c = 0; c < joint.size(); ++c) {
      for (std::size_t u = 0; u < joint[c].size(); ++u) {
        if (joint[c][u] == 0) continue;
        const int key = static_cast<int>(stat == Statistic::corners ? c : u);
        table.counts[key] += BigInt(static_cast<unsigned long>(joint[c][u]));
      }
    }
    return table;
  }

  if (stat != Statistic::corners) {
    throw std::invalid_argument("unrestricted rows are defined for permutation tableaux only");
  }
  check_size(n, kTreeLikeEnumerationCap, "tree-like tableaux");
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 2, 0);
  auto count_shape = [n](std::uint64_t mask, std::vector<std::uint64_t>& acc) {
    const Shape shape = tree_like_shape(n, mask);
    const int c = corners(shape);
    PointSearch(shape, [&](const TreeLikeTableau&) { ++acc[c]; }).run();
  };
  const std::uint64_t shapes = std::uint64_t{1} << (n - 1);
  if (exec == Exec::serial) {
    for (std::uint64_t mask = 0; mask < shapes; ++mask) count_shape(mask, hist);
  } else {
#pragma omp parallel
    {
      std::vector<std::uint64_t> local(hist.size(), 0);
#pragma omp for schedule(dynamic)
      for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(shapes); ++mask) {
        count_shape(static_cast<std::uint64_t>(mask), local);
      }
#pragma omp critical(ptab_treelike_hist)
      for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += local[i];
    }
  }
  for (std::size_t c = 0; c < hist.size(); ++c) {
    if (hist[c] != 0) table.counts[static_cast<int>(c)] = BigInt(static_cast<unsigned long>(hist[c]));
  }
  return table;
}

DistributionTable corner_distribution(int n, Family family, Exec exec) {
  return distribution(n, family, Statistic::corners, exec);
}

std::vector<std::vector<BigInt>> brute_force_genfun(int n, Exec exec) {
  const JointCounts joint = joint_counts(n, exec);
  std::vector<std::vector<BigInt>> out(joint.size());
  for (std::size_t c = 0; c < joint.size(); ++c) {
    out[c].reserve(joint[c].size());
    for (auto v : joint[c]) out[c].emplace_back(static_cast<unsigned long>(v));
  }
  return out;
}

}  // namespace ptab
