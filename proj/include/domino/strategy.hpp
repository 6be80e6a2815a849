#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "domino/game.hpp"

namespace domino {

/// What a strategy sees when asked to move or told about a move.
struct GameView {
  const Sft& sft;
  const Pattern& pattern;
  std::uint64_t ply;  // moves played so far
  const TurnWord& turns;
  Variant variant;
  std::uint64_t start = 0;  // turn-word index of ply 0

  std::uint64_t turn_index() const { return start + ply; }
};

/// Raised by a strategy asked to move from a position its own play never reaches.
struct StrategyUndefined : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Deterministic decision procedure with private memory.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  virtual Move choose(const GameView& view) = 0;
  /// Called after every ply, with `view` showing the pattern after the move.
  virtual void observe(const Move& /*move*/, Player /*who*/, const GameView& /*view*/) {}
  virtual std::unique_ptr<Strategy> clone() const = 0;
};

/// Predicate checked between plies. Returns a description when violated.
struct InvariantMonitor {
  std::string name;
  std::function<std::optional<std::string>(const Pattern& pattern, Player to_move, std::uint64_t ply)> check;
};

struct TracePly {
  Player who;
  Move move;
};

struct GameTrace {
  enum class Outcome : std::uint8_t { AFinal, Survived, IllegalMove, MonitorViolation, StrategyUndefined };
  std::vector<TracePly> plies;
  Pattern final_pattern;
  Outcome outcome = Outcome::Survived;
  std::uint64_t end_ply = 0;            // plies played when the game stopped
  std::optional<Occurrence> witness;    // AFinal
  std::optional<Player> faulting;       // IllegalMove / StrategyUndefined
  std::string message;
};

std::string to_string(GameTrace::Outcome o);

struct RunOptions {
  Variant variant = Variant::PassAllowed;
  std::uint64_t max_plies = 100;
  std::uint64_t start_index = 0;
  std::vector<InvariantMonitor> monitors;
};

/// Plays the two strategies against each other. A strategy returning an illegal move loses
/// on the spot (recorded in the trace, never thrown).
GameTrace run_game(const Sft& sft, Strategy& a, Strategy& b, const TurnWord& turns, const RunOptions& options = {});

}  // namespace domino
