#pragma once
// Brute-force occurrence search: every forbidden pattern against every offset that
// maps one of its cells onto a tile.
#include <optional>
#include <set>

#include "domino/sft.hpp"

namespace oracle {

inline std::optional<domino::Occurrence> naive_find(const domino::Pattern& p, const domino::Sft& sft) {
  for (std::size_t i = 0; i < sft.forbidden().size(); ++i) {
    const auto& f = sft.forbidden()[i];
    std::set<domino::Cell> offsets;
    for (const auto& [pc, pcol] : p)
      for (const auto& [fc, fcol] : f) offsets.insert(pc - fc);
    for (const auto& off : offsets) {
      bool all = true;
      for (const auto& [fc, fcol] : f) {
        auto got = p.at(fc + off);
        if (!got || *got != fcol) {
          all = false;
          break;
        }
      }
      if (all) return domino::Occurrence{i, off};
    }
  }
  return std::nullopt;
}

inline bool naive_final(const domino::Pattern& p, const domino::Sft& sft) { return naive_find(p, sft).has_value(); }

}  // namespace oracle
