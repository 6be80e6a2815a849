#pragma once
// Arrow-game window test computed from the colour encoding alone: decode every tile,
// collect each inner cell's candidate colours, then try every choice.
#include <span>
#include <vector>

#include "oracles/naive_forbidden.hpp"

namespace oracle {

inline bool arrow_window_forbidden(const domino::Sft& base, int n, std::span<const domino::Color> window) {
  const int m = static_cast<int>(base.alphabet_size());
  const int black = 2 * m * m;
  auto own = [&](int id) { return id / 2 / m; };
  auto given = [&](int id) { return (id / 2) % m; };
  auto right = [&](int id) { return id % 2 == 1; };
  std::vector<std::vector<int>> sets;
  for (int j = 1; j <= 2 * n + 1; ++j) {
    std::vector<bool> in(static_cast<std::size_t>(m), false);
    const int here = window[static_cast<std::size_t>(j)].id;
    const int left = window[static_cast<std::size_t>(j - 1)].id;
    const int rgt = window[static_cast<std::size_t>(j + 1)].id;
    if (here != black) in[static_cast<std::size_t>(own(here))] = true;
    if (left != black && right(left)) in[static_cast<std::size_t>(given(left))] = true;
    if (rgt != black && !right(rgt)) in[static_cast<std::size_t>(given(rgt))] = true;
    std::vector<int> s;
    for (int c = 0; c < m; ++c)
      if (in[static_cast<std::size_t>(c)]) s.push_back(c);
    if (s.empty()) return true;
    sets.push_back(s);
  }
  std::vector<std::size_t> pick(sets.size(), 0);
  for (;;) {
    std::vector<domino::Pattern::Entry> e;
    for (std::size_t j = 0; j < sets.size(); ++j)
      e.emplace_back(domino::Cell(static_cast<std::int32_t>(j)),
                     domino::Color{static_cast<std::uint16_t>(sets[j][pick[j]])});
    if (!naive_final(domino::Pattern(std::move(e)), base)) return false;
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == sets[k].size()) pick[k++] = 0;
    if (k == pick.size()) return true;
  }
}

}  // namespace oracle
