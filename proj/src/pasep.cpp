#include "ptab/pasep.hpp"

#include <stdexcept>

namespace ptab {

std::string PasepState::str() const {
  std::string out;
  out.reserve(occupied.size());
  for (bool b : occupied) out += b ? '*' : 'o';
  return out;
}

PasepState PasepState::parse(std::string_view text) {
  PasepState state;
  state.occupied.reserve(text.size());
  for (char ch : text) {
    if (ch == '*') {
      state.occupied.push_back(true);
    } else if (ch == 'o') {
      state.occupied.push_back(false);
    } else {
      throw std::invalid_argument(std::string("PASEP state: unexpected character '") + ch + "'");
    }
  }
  return state;
}

int MoveSet::right_side() const {
  return static_cast<int>(right_jumps.size()) + (can_enter ? 1 : 0) + (can_exit ? 1 : 0);
}

int MoveSet::total() const { return right_side() + static_cast<int>(left_jumps.size()); }

PasepState to_pasep_state(const BorderPath& path) {
  PasepState state;
  if (path.size() <= 2) return state;
  // steps[size-1] is the first step read from the southwest end.
  for (std::size_t i = path.size() - 2; i >= 1; --i) {
    state.occupied.push_back(path.steps[i] == Step::West);
  }
  return state;
}

PasepState to_pasep_state(const TreeLikeTableau& t) { return to_pasep_state(border_path(t.shape)); }

MoveSet moves(const PasepState& state) {
  MoveSet m;
  const auto& occ = state.occupied;
  const int size = static_cast<int>(occ.size());
  for (int i = 0; i < size; ++i) {
    if (!occ[i]) continue;
    if (i + 1 < size && !occ[i + 1]) m.right_jumps.push_back(i + 1);
    if (i > 0 && !occ[i - 1]) m.left_jumps.push_back(i + 1);
  }
  m.can_enter = size == 0 || !occ.front();
  m.can_exit = size > 0 && occ.back();
  return m;
}

int current_activity(const TreeLikeTableau& t) { return 2 * corners(t) - 1; }

}  // namespace ptab
