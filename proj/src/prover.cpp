#include <algorithm>

#include "domino/solver_bounded.hpp"
#include "domino/solver_finite.hpp"
#include "domino/verifier.hpp"

namespace domino {

std::string to_string(ProofMode m) { return m == ProofMode::Window ? "window" : "horizon"; }

ProveResult prove_A_wins(const Sft& sft, const TurnWord& turns, const ProveOptions& options) {
  ProveResult out;
  if (!sft.has_rules()) {
    out.note = "no forbidden patterns: B wins by passing or colouring arbitrarily";
    return out;
  }
  auto wants = [&](ProofMode m) { return std::find(options.modes.begin(), options.modes.end(), m) != options.modes.end(); };
  bool window = wants(ProofMode::Window) && turns.finite_state();
  bool horizon = wants(ProofMode::Horizon) && sft.all_connected();
  std::vector<std::string> stops;
  if (wants(ProofMode::Window) && !window) stops.push_back("window mode needs a finite-state turn word");
  if (wants(ProofMode::Horizon) && !horizon) stops.push_back("horizon mode needs connected forbidden patterns");

  auto remaining = [&] { return options.budget > out.nodes ? options.budget - out.nodes : 0; };
  for (int r = 1; r <= options.max_round && (window || horizon) && remaining() > 0; ++r) {
    out.rounds = r;
    if (horizon) {
      OmegaOptions oo;
      oo.variant = options.variant;
      oo.start_index = options.start_index;
      oo.node_budget = remaining();
      const auto res = solve_omega(sft, r, turns, oo);
      out.nodes += res.stats.nodes;
      if (!res.a_wins) {
        horizon = false;
        stops.push_back("horizon mode ran out of budget at T = " + std::to_string(r));
      } else if (*res.a_wins) {
        out.certificate = Certificate{ProofMode::Horizon, r};
        return out;
      }
    }
    if (window && remaining() > 0) {
      SolveOptions so;
      so.max_entries = std::min<std::uint64_t>(so.max_entries, remaining());
      try {
        RegionSolver solver(sft, r - 1, options.variant, turns, so);
        solver.solve();
        out.nodes += std::max<std::uint64_t>(solver.stats().nodes, 1);
        if (solver.result(options.start_index).winner == Player::A) {
          out.certificate = Certificate{ProofMode::Window, r - 1};
          return out;
        }
      } catch (const Unsupported&) {
        window = false;
        stops.push_back("window mode stopped at n = " + std::to_string(r - 1) + " (table larger than the budget)");
      }
    }
  }
  if (remaining() == 0) stops.push_back("node budget spent");
  if (out.rounds == options.max_round) stops.push_back("round limit reached");
  for (const auto& s : stops) out.note += (out.note.empty() ? "" : "; ") + s;
  return out;
}

}  // namespace domino
