#include "domino/solver_finite.hpp"
#include "retrograde.hpp"

namespace domino {

// Serial memoised recursion over reachable patterns. Kept as the reference the
// retrograde sweep is checked against; both share detail::evaluate_code.
void RegionSolver::solve_reference() {
  const auto& g = *game_;
  const std::size_t R = g.residue_count();
  sparse_.clear();

  // Explicit stack: a pattern is evaluated once every one-tile extension is known.
  struct Frame {
    std::uint64_t code;
    std::size_t next_cell;
  };
  std::vector<Frame> stack{{0, 0}};
  std::vector<std::uint32_t> scratch(R);
  auto child = [this](std::uint64_t c, std::size_t r) { return sparse_.at(c)[r]; };
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next_cell == 0 && sparse_.count(f.code)) {
      ++stats_.memo_hits;
      stack.pop_back();
      continue;
    }
    const auto here = f.code;
    bool pushed = false;
    // Final and full patterns have no successors worth expanding.
    const bool leaf = f.next_cell == 0 && (g.is_final(f.code) || g.is_full(f.code));
    // push_back may reallocate, so the frame is re-read through the stack.
    while (!leaf && stack.back().next_cell < g.cell_count()) {
      const std::size_t j = stack.back().next_cell++;
      if (g.digit(here, j)) continue;
      for (std::size_t a = 0; a < g.sft().alphabet_size(); ++a) {
        const auto k = g.with_tile(here, j, Color{static_cast<std::uint16_t>(a)});
        if (sparse_.count(k)) {
          ++stats_.memo_hits;
          continue;
        }
        stack.push_back(Frame{k, 0});
        pushed = true;
      }
      if (pushed) break;
    }
    if (pushed) continue;
    const auto code = stack.back().code;
    detail::evaluate_code(g, code, child, scratch.data());
    sparse_.emplace(code, scratch);
    ++stats_.nodes;
    stack.pop_back();
  }
  stats_.states = sparse_.size() * R;
}

}  // namespace domino
