#pragma once

#include "ptab/tableau.hpp"

namespace fixtures {

// Size-13 tree-like tableau with four corners; its PASEP state has seven
// possible moves.
inline ptab::TreeLikeTableau size13_tableau() {
  ptab::TreeLikeTableau t;
  t.shape = ptab::Shape{{7, 7, 5, 5, 2, 2, 1}, 14};
  t.points = {{1, 1}, {1, 2}, {1, 4}, {1, 7}, {2, 2}, {2, 6}, {3, 2},
              {4, 1}, {4, 3}, {4, 5}, {5, 2}, {6, 1}, {7, 1}};
  return t;
}

inline constexpr const char* kSize13State = "o*oo***oo**o";

// Three example permutation tableaux, one with empty rows.
inline ptab::PermutationTableau example_permutation_tableau(int which) {
  switch (which) {
    case 0:
      return {ptab::Shape{{7, 3, 2, 1}, 11}, {{0, 1, 0, 1, 1, 1, 1}, {0, 0, 1}, {1, 1}, {0}}};
    case 1:
      return {ptab::Shape{{6, 4, 4, 1, 0, 0}, 12},
              {{0, 1, 0, 0, 1, 1}, {0, 0, 1, 1}, {0, 1, 1, 1}, {1}, {}, {}}};
    default:
      return {ptab::Shape{{3, 3, 3, 2}, 7}, {{1, 0, 1}, {0, 0, 0}, {0, 1, 1}, {0, 1}}};
  }
}

}  // namespace fixtures
