#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ptab/tableau.hpp"

namespace ptab {

// Occupancy of the n-1 PASEP nodes attached to a size-n tree-like tableau,
// node 1 leftmost.
struct PasepState {
  std::vector<bool> occupied;

  std::size_t size() const { return occupied.size(); }
  // 'o' for an empty node, '*' for a particle.
  std::string str() const;
  static PasepState parse(std::string_view text);

  friend bool operator==(const PasepState&, const PasepState&) = default;
};

struct MoveSet {
  std::vector<int> right_jumps;  // particles with an empty right neighbour
  std::vector<int> left_jumps;   // particles with an empty left neighbour
  bool can_enter = false;
  bool can_exit = false;

  int right_side() const;  // right jumps, entry and exit
  int total() const;
};

// Reads the border southwest to northeast and drops the first and last
// step; north is an empty node, east a particle.
PasepState to_pasep_state(const BorderPath& path);
PasepState to_pasep_state(const TreeLikeTableau& t);

// A particle enters when node 1 is empty and exits from an occupied last
// node. On the zero-node lattice (size-1 tableau) the single admissible
// move is reported as an entry.
MoveSet moves(const PasepState& state);

// 2 c(T) - 1.
int current_activity(const TreeLikeTableau& t);

}  // namespace ptab
