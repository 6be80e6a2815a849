#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "domino/core.hpp"
#include "domino/sft.hpp"

namespace domino {

/// Set of base colours, one bit per colour id.
using ColorSet = std::uint64_t;

inline constexpr std::size_t kMaxBaseColors = 64;

/// Per-cell interpretation sets; cells not listed have the empty set.
struct Interpretation {
  std::map<Cell, ColorSet> sets;
  ColorSet at(const Cell& c) const {
    auto it = sets.find(c);
    return it == sets.end() ? 0 : it->second;
  }
};

// --- arrow reduction -------------------------------------------------------

enum class Direction : std::uint8_t { Left, Right };

/// Colour table of the arrow game: (c1, c2, dir) has id (c1·m + c2)·2 + dir, and the
/// black tile comes last, for a base alphabet of size m.
struct ArrowLayout {
  std::size_t base_size = 0;

  std::size_t size() const { return 2 * base_size * base_size + 1; }
  Color black() const { return Color{static_cast<std::uint16_t>(2 * base_size * base_size)}; }
  Color arrow(Color c1, Color c2, Direction d) const {
    return Color{static_cast<std::uint16_t>((c1.id * base_size + c2.id) * 2 + (d == Direction::Right ? 1 : 0))};
  }
  bool is_black(Color c) const { return c == black(); }
  Color own(Color c) const { return Color{static_cast<std::uint16_t>(c.id / 2 / base_size)}; }
  Color given(Color c) const { return Color{static_cast<std::uint16_t>(c.id / 2 % base_size)}; }
  Direction direction(Color c) const { return c.id % 2 ? Direction::Right : Direction::Left; }

  std::vector<std::string> names(const std::vector<std::string>& base_names) const;
};

/// Interpretation of one cell: its own first component, plus the second component of a
/// left neighbour pointing right and of a right neighbour pointing left.
/// `lookup(c)` returns the colour id at c or -1.
template <class Lookup>
ColorSet interpret_arrow_at(const ArrowLayout& layout, const Lookup& lookup, const Cell& i) {
  ColorSet s = 0;
  const auto black = static_cast<int>(layout.black().id);
  auto tile = [&](const Cell& c) -> std::optional<Color> {
    const int v = lookup(c);
    if (v < 0 || v == black) return std::nullopt;
    return Color{static_cast<std::uint16_t>(v)};
  };
  if (auto t = tile(i)) s |= ColorSet{1} << layout.own(*t).id;
  if (auto t = tile(i - Cell(1)); t && layout.direction(*t) == Direction::Right) s |= ColorSet{1} << layout.given(*t).id;
  if (auto t = tile(i + Cell(1)); t && layout.direction(*t) == Direction::Left) s |= ColorSet{1} << layout.given(*t).id;
  return s;
}

/// Interpretation of every cell next to or under a tile (1D pattern over the arrow alphabet).
Interpretation interpret_arrow(const Pattern& pattern, const ArrowLayout& layout);

/// Smallest n >= 1 whose window [-n, n] holds every base forbidden pattern.
int arrow_window_radius(const Sft& base);

/// Membership in the derived forbidden set for a full window of length 2n+3: true iff
/// some inner cell has no interpretation or every full interpretation of the inner
/// window [1, 2n+1] contains a base forbidden pattern.
bool arrow_window_forbidden(const Sft& base, const ArrowLayout& layout, int n, std::span<const Color> window);

/// Derived game over 2|A|^2 + 1 colours whose forbidden set is the predicate above, with
/// windows along the first axis of Z^target_dimension. Throws Unsupported for a base of
/// dimension other than 1.
Sft build_arrow_game(const Sft& base, int target_dimension = 1);

// --- voting reductions -----------------------------------------------------

enum class VoteMode : std::uint8_t { Set, Majority };

/// Tuples of width 2r+1 vote for the cells r either side of them.
struct VoteRule {
  int radius = 5;
  int threshold = 4;  // Set mode, inclusive
  VoteMode mode = VoteMode::Set;

  int width() const { return 2 * radius + 1; }
};

inline VoteRule eleven_vote_rule() { return VoteRule{5, 4, VoteMode::Set}; }
inline VoteRule majority_rule() { return VoteRule{4, 0, VoteMode::Majority}; }
inline VoteRule fifteen_vote_rule() { return VoteRule{7, 8, VoteMode::Set}; }

/// Colour table of a voting game: tuple (t_0..t_{w-1}) has id sum t_k m^k, black is m^w.
/// Component k is the vote for the cell at offset k - r from the cell that receives it.
struct VoteLayout {
  std::size_t base_size = 0;
  int width = 0;

  std::size_t size() const;  // m^w + 1; throws Unsupported above the colour-id range
  Color black() const { return Color{static_cast<std::uint16_t>(size() - 1)}; }
  bool is_black(Color c) const { return c == black(); }
  Color component(Color c, int k) const;
  Color tuple(const std::vector<Color>& components) const;
};

/// Interpretation with votes { pi_k p_{i+k} : -r <= k <= r, p_{i+k} not black }. Set mode keeps
/// colours with at least `threshold` votes; Majority mode keeps the most voted colour,
/// ties to the lowest id. No votes gives the empty set.
Interpretation interpret_vote(const Pattern& pattern, std::size_t base_size, const VoteRule& rule);

/// Derived game whose forbidden windows have length inner_offset + n + r, n the base
/// pattern length; the interpreted window starts at inner_offset (default r).
Sft build_vote_game(const Sft& base, const VoteRule& rule, std::optional<int> inner_offset = std::nullopt);

// --- marking games ---------------------------------------------------------

enum class Marking : std::uint8_t { F2, F3 };

/// Words over {a, b} of length 9 with at least 5 a's, or of length 15 with at least 8.
Sft marking_game(Marking which);

// --- one-dimensional emptiness ---------------------------------------------

/// True iff no bi-infinite word avoids the forbidden set (de Bruijn graph without cycles).
bool domino_1d_empty(const Sft& sft);

/// Length of the longest admissible finite word, or none if admissible words of every
/// length exist.
std::optional<std::int64_t> longest_admissible_length(const Sft& sft);

/// Period of some admissible periodic configuration, if the shift is nonempty.
std::optional<std::vector<Color>> periodic_point(const Sft& sft);

/// Installs the "arrow" and "vote" predicate factories used by the SFT file loader.
void register_reduction_factories();

}  // namespace domino
