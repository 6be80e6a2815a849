#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "domino/region_game.hpp"

namespace domino {

struct SolveStats {
  std::uint64_t nodes = 0;      // pattern codes evaluated
  std::uint64_t memo_hits = 0;  // reference engine only
  std::uint64_t states = 0;     // (pattern, turn residue) pairs stored
};

struct SolveResult {
  Player winner = Player::B;
  std::optional<std::uint32_t> value;  // empty = infinite (B wins)
  std::vector<Move> principal_line;    // ends in a final position when A wins
  SolveStats stats;
  /// Values for non-alternating turn words extend the alternating definition.
  bool extended_value = false;
};

enum class Engine : std::uint8_t {
  Parallel,   // level-by-level retrograde sweep, OpenMP over each level
  Reference,  // serial memoised depth-first recursion over reachable patterns
};

struct SolveOptions {
  Engine engine = Engine::Parallel;
  std::uint64_t max_entries = std::uint64_t{1} << 26;  // value-table cap (codes x residues)
};

/// Positional strategy for one player on a solved region.
class StrategyTable {
 public:
  StrategyTable(std::shared_ptr<const RegionGame> game, Player player) : game_(std::move(game)), player_(player) {}

  Player player() const { return player_; }
  std::size_t size() const { return moves_.size(); }
  std::optional<Move> lookup(const Pattern& pattern, std::uint64_t turn_index) const;
  std::optional<Move> lookup_code(std::uint64_t code, std::size_t residue) const;
  const RegionGame& game() const { return *game_; }

  void set(std::uint64_t code, std::size_t residue, Move m) { moves_[key(code, residue)] = m; }
  const std::unordered_map<std::uint64_t, Move>& raw() const { return moves_; }

 private:
  std::uint64_t key(std::uint64_t code, std::size_t residue) const { return code * game_->residue_count() + residue; }

  std::shared_ptr<const RegionGame> game_;
  Player player_;
  std::unordered_map<std::uint64_t, Move> moves_;
};

/// Exact solver for the game on [-n, n]^d. A's winning set is the least fixpoint of the
/// reachability attractor; pass cycles outside it are B wins.
class RegionSolver {
 public:
  RegionSolver(const Sft& sft, int radius, Variant variant, const TurnWord& turns, SolveOptions options = {});

  void solve();
  bool solved() const { return solved_; }

  /// RegionGame::kInfinity when B wins.
  std::uint32_t value(std::uint64_t code, std::size_t residue) const;
  std::uint32_t value(const Pattern& pattern, std::uint64_t turn_index) const;

  SolveResult result(std::uint64_t start_index = 0) const;

  /// Defined on every position where `player` moves and wins. A picks the lowest-value
  /// successor; B the first successor that keeps a B win. Ties go to the first move in
  /// canonical order.
  StrategyTable extract_strategy(Player player) const;

  const RegionGame& game() const { return *game_; }
  std::shared_ptr<const RegionGame> game_ptr() const { return game_; }
  const SolveStats& stats() const { return stats_; }

 private:
  void solve_parallel();
  void solve_reference();
  std::optional<Move> choose(std::uint64_t code, std::size_t residue, Player player) const;

  std::shared_ptr<const Sft> sft_;
  std::shared_ptr<const RegionGame> game_;
  SolveOptions options_;
  bool solved_ = false;
  SolveStats stats_;
  std::vector<std::uint32_t> dense_;                                   // parallel engine
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> sparse_;  // reference engine
};

SolveResult solve_region(const Sft& sft, int radius, Variant variant, const TurnWord& turns,
                         std::uint64_t start_index = 0, SolveOptions options = {});

StrategyTable extract_strategy(const Sft& sft, int radius, Variant variant, const TurnWord& turns, Player player,
                               SolveOptions options = {});

struct WindowSearch {
  std::optional<int> n;       // smallest window radius with an A win
  int searched_up_to = -1;    // largest radius fully solved
  bool truncated = false;     // stopped early because a region exceeded the table cap
};

/// Solves [-n, n]^d for n = 0..n_max. Any A win certifies an A win on the whole grid;
/// finding none is inconclusive.
WindowSearch semidecide_A_wins(const Sft& sft, Variant variant, const TurnWord& turns, int n_max,
                               std::uint64_t start_index = 0, SolveOptions options = {});

}  // namespace domino
