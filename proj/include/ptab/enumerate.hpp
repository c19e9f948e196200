#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ptab/bigint.hpp"
#include "ptab/exec.hpp"
#include "ptab/tableau.hpp"

namespace ptab {

inline constexpr int kPermutationEnumerationCap = 10;
inline constexpr int kTreeLikeEnumerationCap = 7;

// One way of growing a permutation tableau by a single border step.
// WEST: the new (leftmost) column gets its topmost 1 in the `topmost`-th
// unrestricted row and further 1s in the unrestricted rows listed in
// `extra_ones`; both are 1-based positions in the unrestricted-row list.
struct ExtensionChoice {
  enum class Kind { South, West };

  Kind kind = Kind::South;
  int topmost = 0;
  std::vector<int> extra_ones;

  static ExtensionChoice south() { return {}; }
  static ExtensionChoice west(int topmost, std::vector<int> extra_ones = {}) {
    return {Kind::West, topmost, std::move(extra_ones)};
  }

  friend bool operator==(const ExtensionChoice&, const ExtensionChoice&) = default;
};

// A tableau together with its unrestricted rows (1-based, ascending),
// maintained incrementally across extensions.
struct TableauNode {
  PermutationTableau tableau;
  std::vector<int> unrestricted;

  int u() const { return static_cast<int>(unrestricted.size()); }
};

// The length-1 tableau: a single empty row.
TableauNode unit_node();

// Throws std::out_of_range when the choice does not fit u(node).
TableauNode extend(const TableauNode& node, const ExtensionChoice& choice);
PermutationTableau extend(const PermutationTableau& t, const ExtensionChoice& choice);

// All 2^u choices, SOUTH first, then WEST ordered by (topmost, extra_ones
// lexicographically).
std::vector<ExtensionChoice> extension_choices(int u);

// Number of extensions of a tableau with u unrestricted rows that end with
// exactly k unrestricted rows; 0 outside 1..u+1.
BigInt extensions_with_k(int u, int k);

using PermutationVisitor = std::function<void(const TableauNode&)>;
using TreeLikeVisitor = std::function<void(const TreeLikeTableau&)>;

// Depth-first over the extension tree in extension_choices order.
// Throws LimitExceeded above `cap`, std::invalid_argument for n < 1.
void enumerate_permutation_tableaux(int n, const PermutationVisitor& visit,
                                    int cap = kPermutationEnumerationCap);
// Shapes in lexicographic path order (SOUTH < WEST), then point sets in
// row-major search order.
void enumerate_tree_like_tableaux(int n, const TreeLikeVisitor& visit,
                                  int cap = kTreeLikeEnumerationCap);

std::vector<PermutationTableau> all_permutation_tableaux(int n);
std::vector<TreeLikeTableau> all_tree_like_tableaux(int n);

enum class Family { permutation, treelike };
enum class Statistic { corners, unrestricted_rows };

std::string to_string(Family f);
std::string to_string(Statistic s);

struct DistributionTable {
  int n = 0;
  Family family = Family::permutation;
  Statistic stat = Statistic::corners;
  std::map<int, BigInt> counts;

  BigInt total() const;
  Rational mean() const;
  // E[X^k] over the uniform measure.
  Rational raw_moment(int k) const;
};

// Unrestricted rows are only defined for the permutation family;
// asking for them on tree-like tableaux throws std::invalid_argument.
DistributionTable distribution(int n, Family family, Statistic stat,
                               Exec exec = Exec::parallel);
DistributionTable corner_distribution(int n, Family family, Exec exec = Exec::parallel);

// counts[c][u] = #{T in P_n : c(T) = c, u(T) = u}.
std::vector<std::vector<BigInt>> brute_force_genfun(int n, Exec exec = Exec::parallel);

}  // namespace ptab
