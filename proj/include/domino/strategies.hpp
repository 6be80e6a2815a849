#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "domino/reductions.hpp"
#include "domino/solver_bounded.hpp"
#include "domino/solver_finite.hpp"
#include "domino/strategy.hpp"

namespace domino {

// --- generic ---------------------------------------------------------------

std::unique_ptr<Strategy> pass_strategy();

/// Plays the listed moves in order on its own turns, then passes.
std::unique_ptr<Strategy> scripted_strategy(std::vector<Move> moves);

/// Uniform over Pass (if allowed), cells within `locality` of a tile and one fresh cell
/// beyond the tiles, times every colour in `colors` (all colours when empty).
std::unique_ptr<Strategy> random_strategy(std::uint64_t seed, int locality, std::vector<Color> colors = {});

/// Looks moves up in a solved region's table; passes (or plays the first legal
/// placement in the no-pass variant) where the table has no entry.
std::unique_ptr<Strategy> table_strategy(std::shared_ptr<const StrategyTable> table);

/// Strategy for the flat game built from the multi-board solver: moves are mapped back
/// through the board anchors, and new boards are opened on the first axis at
/// max(2^(T+2)·k, beyond every tile + 2^(T+2)) for the k-th board (k from 1).
std::unique_ptr<Strategy> reconstruct_strategy(std::shared_ptr<OmegaSolver> solver);

// --- arrow game ------------------------------------------------------------

/// A: black tiles on the first free cell at or right of 0. When B leaves A's latest black
/// tile without an interpretation, A builds a surrounded black cell with an empty
/// interpretation and then fills the window around it.
std::unique_ptr<Strategy> a_black_strategy(const ArrowLayout& layout, int n);

/// Bi-infinite periodic base configuration: x_i = period[(i + shift) mod |period|].
struct PeriodicConfiguration {
  std::vector<Color> period;
  std::int64_t shift = 0;
  Color at(std::int64_t i) const;
};

/// B: answers next to A's latest tile on the side left with an odd uncoloured run (the
/// right side when both runs are infinite), giving every tile the interpretation x_i.
/// Passes on turns that do not directly follow an A placement.
/// Throws InputError when the witness is inadmissible for the base over three periods.
std::unique_ptr<Strategy> b_parity_strategy(const Sft& base, PeriodicConfiguration witness);

/// Before A moves, every finite maximal uncoloured run is of even length (1D).
InvariantMonitor parity_monitor();
/// Every uncoloured cell has an empty interpretation (arrow game, 1D).
InvariantMonitor no_interpretation_monitor(const ArrowLayout& layout);

// --- isolation -------------------------------------------------------------

struct IsolationConfig {
  std::vector<Color> word;   // placed left to right along the first axis
  std::int64_t c = 1;        // occurrences wanted at the end
  std::int64_t delta = 1;    // isolation distance wanted at the end
  std::optional<std::int64_t> k;  // gap bound for AA; scanned from the turn word if empty
};

/// Occurrences of ever longer prefixes of the word. Level j (1..n) runs for
/// c_j(2k+1) turns with c_j = c(k+1)^(n-j); A extends occurrences of length j-1 on the
/// right, preferring ones still isolated, and passes when none can be extended.
/// Level-1 occurrences start on fresh cells beyond every tile. Throws InputError when the
/// turn word has fewer than two AA within the scan depth.
std::unique_ptr<Strategy> a_isolation_strategy(const TurnWord& turns, IsolationConfig config);

/// Total turns of the isolation schedule, equal to v(|w|, c, k).
std::int64_t isolation_turns(std::size_t word_length, std::int64_t c, std::int64_t k);

// --- marking game ----------------------------------------------------------

/// B on the marking games over {a, b}: always plays b; next to an a, else left of baba,
/// else right of b(ba)^n b for n in {3, 4}, else passes. Lowest cell first within a rule.
std::unique_ptr<Strategy> b_four_rule_strategy();

/// Every a sits in bab; every aba sits in bbaba or b(ba)^n bb (n in {3, 4}). Checked
/// before A moves.
std::vector<InvariantMonitor> four_rule_monitors();

// --- palindromes and 1234 --------------------------------------------------

/// Palindrome game on {0..n}: 0 at the origin, then mirror B's move or build three equal
/// colours next to it. Throws StrategyUndefined off its own lines of play.
std::unique_ptr<Strategy> a_palindrome_strategy(int n);
Sft palindrome_game(int n);

/// Game over {0..4} forbidding 1234 on a line.
Sft game_1234();

/// B for the 1234 game: minimises (live windows with two or more tiles, live windows with
/// one tile) after its move, where a live window can still be coloured 1234.
std::unique_ptr<Strategy> b_1234_strategy();
/// A for the 1234 game: extends the fullest live window with its next colour.
std::unique_ptr<Strategy> a_greedy_1234_strategy();

struct WindowCensus {
  int one = 0;
  int two_or_more = 0;
};
WindowCensus census_1234(const Pattern& pattern);

/// At the end of block m of s2 (the block A(AB)^m): at most m one-tile live windows and
/// no live window with two tiles.
InvariantMonitor checkpoint_1234_monitor(std::uint64_t start_index = 0);

}  // namespace domino
