#include "domino/strategy.hpp"

namespace domino {

std::string to_string(GameTrace::Outcome o) {
  switch (o) {
    case GameTrace::Outcome::AFinal:
      return "a-final";
    case GameTrace::Outcome::Survived:
      return "survived";
    case GameTrace::Outcome::IllegalMove:
      return "illegal-move";
    case GameTrace::Outcome::MonitorViolation:
      return "monitor-violation";
    case GameTrace::Outcome::StrategyUndefined:
      return "strategy-undefined";
  }
  return "?";
}

GameTrace run_game(const Sft& sft, Strategy& a, Strategy& b, const TurnWord& turns, const RunOptions& options) {
  GameTrace trace;
  Position pos{Pattern{}, TurnCursor{turns, options.start_index}, Region::whole(sft.dimension())};
  auto stop = [&](GameTrace::Outcome o, std::string msg = {}) {
    trace.outcome = o;
    trace.message = std::move(msg);
    trace.final_pattern = pos.pattern;
    trace.end_ply = trace.plies.size();
    return trace;
  };
  std::optional<Cell> last;
  for (std::uint64_t ply = 0;; ++ply) {
    // Only occurrences through the newest tile can be new.
    if (last && occurs_through(pos.pattern, sft, *last)) {
      trace.witness = find_forbidden(pos.pattern, sft);
      return stop(GameTrace::Outcome::AFinal);
    }
    for (const auto& m : options.monitors)
      if (auto bad = m.check(pos.pattern, pos.to_move(), ply)) return stop(GameTrace::Outcome::MonitorViolation, m.name + ": " + *bad);
    if (ply >= options.max_plies) return stop(GameTrace::Outcome::Survived);

    const Player who = pos.to_move();
    Strategy& s = who == Player::A ? a : b;
    const GameView view{sft, pos.pattern, ply, turns, options.variant, options.start_index};
    Move m;
    try {
      m = s.choose(view);
      if (!m.is_pass() && m.color.id >= sft.alphabet_size()) throw IllegalMove("colour outside the alphabet");
      pos = apply_move(pos, m, options.variant);
    } catch (const IllegalMove& e) {
      trace.faulting = who;
      return stop(GameTrace::Outcome::IllegalMove, s.name() + ": " + e.what());
    } catch (const StrategyUndefined& e) {
      trace.faulting = who;
      return stop(GameTrace::Outcome::StrategyUndefined, s.name() + ": " + e.what());
    }
    trace.plies.push_back(TracePly{who, m});
    last = m.is_pass() ? std::nullopt : std::optional<Cell>(m.cell);
    const GameView after{sft, pos.pattern, ply + 1, turns, options.variant, options.start_index};
    a.observe(m, who, after);
    b.observe(m, who, after);
  }
}

}  // namespace domino
