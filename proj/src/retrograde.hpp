#pragma once

// Per-pattern evaluation shared by both finite-region engines.

#include <algorithm>
#include <vector>

#include "domino/region_game.hpp"

namespace domino::detail {

/// Fills out[0..R) with the values of `code` under every turn residue. `child(c, r)` must
/// return the (already known) value of pattern code c at residue r.
///
/// Placements only lead to larger patterns; passes stay on the same pattern and walk the
/// residue chain, so the pass cycle is closed with a least-fixpoint iteration starting
/// from "nobody has won yet".
template <class ChildValue>
void evaluate_code(const RegionGame& g, std::uint64_t code, const ChildValue& child, std::uint32_t* out) {
  constexpr auto kInf = RegionGame::kInfinity;
  const std::size_t R = g.residue_count();
  if (g.is_final(code)) {
    std::fill(out, out + R, 0u);
    return;
  }
  if (g.is_full(code)) {  // game over without a forbidden pattern
    std::fill(out, out + R, kInf);
    return;
  }
  thread_local std::vector<std::uint32_t> best;
  thread_local std::vector<std::uint64_t> kids;
  best.assign(R, 0);
  kids.clear();
  const std::size_t alphabet = g.sft().alphabet_size();
  for (std::size_t j = 0; j < g.cell_count(); ++j) {
    if (g.digit(code, j)) continue;
    for (std::size_t a = 0; a < alphabet; ++a) kids.push_back(g.with_tile(code, j, Color{static_cast<std::uint16_t>(a)}));
  }
  for (std::size_t r = 0; r < R; ++r) {
    const std::size_t nr = g.next_residue(r);
    if (g.player(r) == Player::A) {
      std::uint32_t m = kInf;
      for (auto k : kids) m = std::min(m, child(k, nr));
      best[r] = m == kInf ? kInf : m + 1;
    } else {
      std::uint32_t m = 0;
      for (auto k : kids) {
        const auto v = child(k, nr);
        if (v == kInf) {
          m = kInf;
          break;
        }
        m = std::max(m, v);
      }
      best[r] = m == kInf ? kInf : m + 1;
    }
  }
  if (g.variant() == Variant::NoPass) {
    std::copy(best.begin(), best.end(), out);
    return;
  }
  std::fill(out, out + R, kInf);
  for (std::size_t iter = 0; iter <= 2 * R + 1; ++iter) {
    bool changed = false;
    for (std::size_t r = 0; r < R; ++r) {
      const auto via_pass = out[g.next_residue(r)];
      const auto pass_value = via_pass == kInf ? kInf : via_pass + 1;
      std::uint32_t v;
      if (g.player(r) == Player::A) {
        v = std::min(best[r], pass_value);
      } else {
        v = (best[r] == kInf || pass_value == kInf) ? kInf : std::max(best[r], pass_value);
      }
      if (v != out[r]) {
        out[r] = v;
        changed = true;
      }
    }
    if (!changed) return;
  }
  throw InternalError("pass-cycle fixpoint did not stabilise");
}

}  // namespace domino::detail
