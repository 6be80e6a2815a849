#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "domino/core.hpp"
#include "domino/sft.hpp"
#include "domino/words.hpp"

namespace domino {

/// Move of the multi-board game: pass, place on an open board, or open a new board.
struct OmegaMove {
  enum class Kind : std::uint8_t { Pass, Place, Open };
  Kind kind = Kind::Pass;
  std::size_t board = 0;  // Place only
  Cell cell{};            // board coordinates; Place only
  Color color{};

  static OmegaMove pass() { return OmegaMove{}; }
  static OmegaMove place(std::size_t board, Cell c, Color col) { return OmegaMove{Kind::Place, board, c, col}; }
  static OmegaMove open(Color col) { return OmegaMove{Kind::Open, 0, Cell{}, col}; }

  friend bool operator==(const OmegaMove&, const OmegaMove&) = default;
};

std::string to_string(const OmegaMove& m, int dimension);

/// Position of the bounded multi-board game. `plies` moves have been played, so the next
/// move is turn number plies + 1 and may reach 2^(horizon - plies - 1) cells from a board.
struct MultiBoardPosition {
  std::vector<Pattern> boards;
  int plies = 0;
  int horizon = 0;
  TurnCursor turn;

  int turn_number() const { return plies + 1; }
  bool over() const { return plies >= horizon; }
  Player to_move() const { return turn.current(); }
};

MultiBoardPosition initial_omega_position(int horizon, const TurnWord& turns, std::uint64_t start_index = 0);

/// 2^(T - t) for turn t (1-based); saturates instead of overflowing.
std::int64_t omega_radius(int horizon, int turn);

/// Pass (if allowed), placements by board then cell then colour, then one Open per colour.
/// Empty once the horizon is reached.
std::vector<OmegaMove> omega_legal_moves(const MultiBoardPosition& pos, std::size_t alphabet_size, int dimension,
                                         Variant variant = Variant::PassAllowed);

/// Throws IllegalMove when the move is not in omega_legal_moves.
MultiBoardPosition apply_omega_move(const MultiBoardPosition& pos, const OmegaMove& m, int dimension,
                                    Variant variant = Variant::PassAllowed);

bool omega_is_final(const MultiBoardPosition& pos, const Sft& sft);

/// Boards translated so their smallest cell is the origin, then sorted.
struct CanonicalBoards {
  std::vector<Pattern> boards;
  std::vector<std::size_t> source;  // canonical index -> input index
  std::vector<Cell> shift;          // input board = canonical board translated by shift
};

CanonicalBoards canonicalize(const std::vector<Pattern>& boards);

struct OmegaOptions {
  Variant variant = Variant::PassAllowed;
  std::uint64_t start_index = 0;
  /// 0 = unlimited. Exceeding it makes solve_omega inconclusive.
  std::uint64_t node_budget = 0;
  /// Replace placements that can never join a board's tiles (too far to bridge in the
  /// remaining plies) by the equivalent Open move. Does not change results.
  bool prune_far = true;
};

struct OmegaStats {
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
};

struct OmegaResult {
  std::optional<bool> a_wins;  // empty when the node budget ran out
  int horizon = 0;
  std::vector<OmegaMove> principal_line;  // A's winning line with B's first listed reply
  std::vector<Pattern> final_boards;
  OmegaStats stats;
  bool extension = false;  // non-alternating turn word
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Memoised search of the bounded multi-board game. Thread-safe: queries serialise on an
/// internal lock so strategies sharing one solver can be cloned across workers.
class OmegaSolver {
 public:
  /// Throws InputError when a forbidden pattern is disconnected.
  OmegaSolver(const Sft& sft, int horizon, TurnWord turns, OmegaOptions options = {});

  /// Does A force a final position before the horizon? Throws BudgetExceeded.
  bool a_wins(const MultiBoardPosition& pos);
  /// First A move (in legal-move order) that keeps a forced win; none if A is not winning.
  std::optional<OmegaMove> winning_move(const MultiBoardPosition& pos);

  MultiBoardPosition initial() const { return initial_omega_position(horizon_, turns_, options_.start_index); }
  const Sft& sft() const { return *sft_; }
  int horizon() const { return horizon_; }
  const OmegaStats& stats() const { return stats_; }

 private:
  bool search(const MultiBoardPosition& pos);
  std::vector<OmegaMove> moves(const MultiBoardPosition& pos) const;
  bool completes(const MultiBoardPosition& pos, const OmegaMove& m) const;
  std::string key(const MultiBoardPosition& pos) const;

  std::shared_ptr<const Sft> sft_;
  int horizon_;
  TurnWord turns_;
  OmegaOptions options_;
  OmegaStats stats_;
  std::unordered_map<std::string, bool> memo_;
  std::mutex mutex_;
};

/// Does A win the game within `horizon` plies? Every ply counts, passes included.
OmegaResult solve_omega(const Sft& sft, int horizon, const TurnWord& turns, OmegaOptions options = {});

// --- Trace transformation --------------------------------------------------

/// Board with the anchor z_k it was opened at; `local` holds board coordinates.
struct AnchoredBoard {
  Cell anchor{};
  Pattern local;
};

struct ThetaStep {
  Move flat;
  OmegaMove omega;
  std::vector<AnchoredBoard> boards;  // after the move
};

struct AnchoredTrace {
  int horizon = 0;
  std::vector<ThetaStep> steps;
};

/// One step of the transformation: maps the flat move played at turn `turn` (1-based)
/// onto the boards, updating them in place. Throws InternalError if a near move is
/// close to two boards.
OmegaMove theta_step(std::vector<AnchoredBoard>& boards, const Move& m, int horizon, int turn);

/// Maps a flat game (played from the empty pattern) to the multi-board game.
/// Throws InputError when the trace is longer than the horizon or illegal.
AnchoredTrace theta(const std::vector<Move>& trace, int horizon);

/// Checks support equality, colour agreement and board separation at turn `turn`
/// (0 = before any move). Returns a description of the first violation.
std::optional<std::string> check_theta_invariants(const Pattern& flat, const std::vector<AnchoredBoard>& boards,
                                                  int horizon, int turn);

}  // namespace domino
