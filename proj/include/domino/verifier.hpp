#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "domino/sft.hpp"
#include "domino/strategy.hpp"
#include "domino/words.hpp"

namespace domino {

enum class Objective : std::uint8_t {
  StrategyPlayerWins,  // A: final position by `depth`; B: no final position through `depth`
  NoForbidden,
  MonitorHolds,  // monitors only; final positions end a branch without failing it
};

std::string to_string(Objective o);
Objective parse_objective(std::string_view text);

/// Exhaustive adversary search around one fixed strategy. The adversary may pass (when
/// the variant allows), play any uncoloured cell within L1 distance `locality` of a tile,
/// or play one fresh cell 2L+1 beyond the largest first coordinate (the origin on an empty
/// board). Monitors are checked at every node regardless of the objective.
struct VerifySpec {
  Sft sft;
  std::shared_ptr<const Strategy> strategy;
  Player strategy_player = Player::A;
  TurnWord turns = TurnWord::alternating();
  Variant variant = Variant::PassAllowed;
  std::uint64_t start_index = 0;
  int depth = 0;
  std::optional<int> locality;  // default 2 * max diameter + 4
  Objective objective = Objective::StrategyPlayerWins;
  std::vector<InvariantMonitor> monitors;
  std::uint64_t node_budget = 0;  // 0 = unlimited
  std::optional<std::vector<Color>> adversary_colors;
  bool parallel = true;  // OpenMP over the first adversary branching
};

int default_locality(const Sft& sft);

enum class Verdict : std::uint8_t { Verified, Counterexample, Inconclusive };
std::string to_string(Verdict v);

struct VerifyReport {
  Verdict verdict = Verdict::Verified;
  std::vector<TracePly> counterexample;  // moves from the empty board to the violation
  std::uint64_t violation_ply = 0;       // plies played when the violation was seen
  std::string reason;
  std::uint64_t nodes = 0;
  int locality = 0;
  int depth = 0;
  std::string note;
};

VerifyReport exhaust(const VerifySpec& spec);

// --- semi-decision ---------------------------------------------------------

enum class ProofMode : std::uint8_t { Window, Horizon };
std::string to_string(ProofMode m);

struct Certificate {
  ProofMode kind = ProofMode::Horizon;
  int parameter = 0;  // window radius n or horizon T
};

struct ProveOptions {
  std::vector<ProofMode> modes{ProofMode::Window, ProofMode::Horizon};
  std::uint64_t budget = 1'000'000;  // nodes across all rounds
  Variant variant = Variant::PassAllowed;
  std::uint64_t start_index = 0;
  int max_round = 64;
};

struct ProveResult {
  std::optional<Certificate> certificate;
  int rounds = 0;
  std::uint64_t nodes = 0;
  std::string note;  // why the search stopped without a certificate
};

/// Round r tries horizon T = r, then window n = r - 1, until a certificate appears or the
/// budget runs out. A certificate proves that A wins on the whole grid.
ProveResult prove_A_wins(const Sft& sft, const TurnWord& turns, const ProveOptions& options = {});

}  // namespace domino
