#include "domino/verifier.hpp"

#include <algorithm>
#include <atomic>

#include "domino/game.hpp"

namespace domino {

std::string to_string(Objective o) {
  switch (o) {
    case Objective::StrategyPlayerWins:
      return "strategy-wins";
    case Objective::NoForbidden:
      return "no-forbidden";
    case Objective::MonitorHolds:
      return "monitor-holds";
  }
  return "?";
}

Objective parse_objective(std::string_view text) {
  if (text == "strategy-wins") return Objective::StrategyPlayerWins;
  if (text == "no-forbidden") return Objective::NoForbidden;
  if (text == "monitor-holds") return Objective::MonitorHolds;
  throw InputError("unknown objective '" + std::string(text) + "' (strategy-wins, no-forbidden, monitor-holds)");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified:
      return "verified";
    case Verdict::Counterexample:
      return "counterexample";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

int default_locality(const Sft& sft) { return static_cast<int>(2 * sft.max_diameter() + 4); }

namespace {

struct Failure {
  std::vector<TracePly> path;
  std::string reason;
};

enum class NodeState { Open, Done, Failed };

class Explorer {
 public:
  Explorer(const VerifySpec& spec, int locality, std::atomic<std::uint64_t>& nodes, std::atomic<bool>& exhausted)
      : spec_(spec), locality_(locality), nodes_(nodes), exhausted_(exhausted) {
    if (spec.adversary_colors) {
      colors_ = *spec.adversary_colors;
    } else {
      for (std::size_t c = 0; c < spec.sft.alphabet_size(); ++c) colors_.push_back(Color{static_cast<std::uint16_t>(c)});
    }
  }

  Player mover(std::uint64_t ply) const { return spec_.turns.letter(spec_.start_index + ply); }

  // Terminal tests at a node, in the order run_game applies them.
  NodeState check(const Pattern& p, std::uint64_t ply, const std::optional<Cell>& last, std::string& why) const {
    const bool a_side = spec_.objective == Objective::StrategyPlayerWins && spec_.strategy_player == Player::A;
    if (last && occurs_through(p, spec_.sft, *last)) {
      if (a_side || spec_.objective == Objective::MonitorHolds) return NodeState::Done;
      why = "forbidden pattern completed";
      return NodeState::Failed;
    }
    for (const auto& m : spec_.monitors)
      if (auto bad = m.check(p, mover(ply), ply)) {
        why = m.name + ": " + *bad;
        return NodeState::Failed;
      }
    if (ply >= static_cast<std::uint64_t>(spec_.depth)) {
      if (!a_side) return NodeState::Done;
      why = "no final position within " + std::to_string(spec_.depth) + " plies";
      return NodeState::Failed;
    }
    return NodeState::Open;
  }

  // Plays the strategy's move in place. Returns false (with a reason) on a fault.
  bool strategy_move(Pattern& p, std::uint64_t ply, Strategy& s, Move& out, std::string& why) const {
    const GameView view{spec_.sft, p, ply, spec_.turns, spec_.variant, spec_.start_index};
    try {
      out = s.choose(view);
      if (!out.is_pass() && out.color.id >= spec_.sft.alphabet_size()) throw IllegalMove("colour outside the alphabet");
      place(p, ply, out);
    } catch (const IllegalMove& e) {
      why = s.name() + " played an illegal move: " + e.what();
      return false;
    } catch (const StrategyUndefined& e) {
      why = s.name() + " undefined: " + e.what();
      return false;
    }
    return true;
  }

  void place(Pattern& p, std::uint64_t ply, const Move& m) const {
    Position pos{std::move(p), TurnCursor{spec_.turns, spec_.start_index + ply}, Region::whole(spec_.sft.dimension())};
    p = apply_move(pos, m, spec_.variant).pattern;
  }

  void notify(Strategy& s, const Pattern& p, std::uint64_t ply, const Move& m, Player who) const {
    const GameView after{spec_.sft, p, ply + 1, spec_.turns, spec_.variant, spec_.start_index};
    s.observe(m, who, after);
  }

  std::vector<Move> adversary_moves(const Pattern& p) const {
    std::vector<Move> out;
    if (spec_.variant == Variant::PassAllowed) out.push_back(Move::pass());
    std::vector<Cell> cells;
    const int dim = spec_.sft.dimension();
    for (const auto& e : p) {
      auto ball = l1_ball(e.first, locality_, dim);
      cells.insert(cells.end(), ball.begin(), ball.end());
    }
    Cell fresh{};
    if (!p.empty()) {
      std::int32_t hi = p.begin()->first[0];
      for (const auto& e : p) hi = std::max(hi, e.first[0]);
      fresh[0] = hi + 2 * locality_ + 1;
    }
    cells.push_back(fresh);
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    for (const Cell& c : cells) {
      if (p.contains(c)) continue;
      for (Color col : colors_) out.push_back(Move::place(c, col));
    }
    return out;
  }

  bool tick() {
    const auto n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (spec_.node_budget && n > spec_.node_budget) exhausted_.store(true, std::memory_order_relaxed);
    return !exhausted_.load(std::memory_order_relaxed);
  }

  std::optional<Failure> search(Pattern& p, std::uint64_t ply, Strategy& s, std::vector<TracePly>& path,
                                std::optional<Cell> last) {
    // The strategy's own moves are appended here; drop them again on the way out.
    const auto mark = path.size();
    auto f = walk(p, ply, s, path, last);
    path.resize(mark);
    return f;
  }

 private:
  std::optional<Failure> walk(Pattern& p, std::uint64_t ply, Strategy& s, std::vector<TracePly>& path,
                              std::optional<Cell> last) {
    for (;;) {
      if (!tick()) return std::nullopt;
      std::string why;
      switch (check(p, ply, last, why)) {
        case NodeState::Done:
          return std::nullopt;
        case NodeState::Failed:
          return Failure{path, why};
        case NodeState::Open:
          break;
      }
      const Player who = mover(ply);
      if (who != spec_.strategy_player) break;
      Move m;
      if (!strategy_move(p, ply, s, m, why)) return Failure{path, why};
      path.push_back({who, m});
      notify(s, p, ply, m, who);
      last = m.is_pass() ? std::nullopt : std::optional<Cell>(m.cell);
      ++ply;
    }
    const Player who = mover(ply);
    for (const Move& m : adversary_moves(p)) {
      Pattern child = p;
      place(child, ply, m);
      auto sc = s.clone();
      notify(*sc, child, ply, m, who);
      path.push_back({who, m});
      auto f = search(child, ply + 1, *sc, path, m.is_pass() ? std::nullopt : std::optional<Cell>(m.cell));
      path.pop_back();
      if (f || exhausted_.load(std::memory_order_relaxed)) return f;
    }
    return std::nullopt;
  }

  const VerifySpec& spec_;
  int locality_;
  std::vector<Color> colors_;
  std::atomic<std::uint64_t>& nodes_;
  std::atomic<bool>& exhausted_;
};

}  // namespace

VerifyReport exhaust(const VerifySpec& spec) {
  if (!spec.strategy) throw InputError("verify: no strategy given");
  if (spec.depth < 0) throw InputError("verify: negative depth");
  VerifyReport report;
  report.depth = spec.depth;
  report.locality = spec.locality.value_or(default_locality(spec.sft));
  if (report.locality < 0) throw InputError("verify: negative locality");
  report.note = "adversary limited to cells within L1 distance " + std::to_string(report.locality) +
                " of a tile plus one fresh cell";

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};
  Explorer ex(spec, report.locality, nodes, exhausted);
  Pattern p;
  auto s = spec.strategy->clone();
  std::vector<TracePly> path;
  std::optional<Failure> failure;

  if (!spec.parallel) {
    failure = ex.search(p, 0, *s, path, std::nullopt);
  } else {
    // Walk the strategy's forced prefix serially, then split at the first adversary node.
    std::uint64_t ply = 0;
    std::optional<Cell> last;
    bool open = true;
    while (open) {
      if (!ex.tick()) break;
      std::string why;
      const auto st = ex.check(p, ply, last, why);
      if (st == NodeState::Failed) failure = Failure{path, why};
      if (st != NodeState::Open) break;
      const Player who = ex.mover(ply);
      if (who != spec.strategy_player) {
        open = false;
        break;
      }
      Move m;
      if (!ex.strategy_move(p, ply, *s, m, why)) {
        failure = Failure{path, why};
        break;
      }
      path.push_back({who, m});
      ex.notify(*s, p, ply, m, who);
      last = m.is_pass() ? std::nullopt : std::optional<Cell>(m.cell);
      ++ply;
    }
    if (!open && !failure && !exhausted) {
      const Player who = ex.mover(ply);
      const auto moves = ex.adversary_moves(p);
      const auto count = static_cast<std::int64_t>(moves.size());
      std::vector<std::optional<Failure>> found(moves.size());
      std::atomic<std::int64_t> first_bad{count};
#pragma omp parallel for schedule(dynamic, 1)
      for (std::int64_t i = 0; i < count; ++i) {
        if (i > first_bad.load() || exhausted.load()) continue;
        const Move& m = moves[static_cast<std::size_t>(i)];
        Pattern child = p;
        ex.place(child, ply, m);
        auto sc = s->clone();
        ex.notify(*sc, child, ply, m, who);
        auto local_path = path;
        local_path.push_back({who, m});
        Explorer worker(spec, report.locality, nodes, exhausted);
        found[static_cast<std::size_t>(i)] =
            worker.search(child, ply + 1, *sc, local_path, m.is_pass() ? std::nullopt : std::optional<Cell>(m.cell));
        if (found[static_cast<std::size_t>(i)]) {
          auto cur = first_bad.load();
          while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
          }
        }
      }
      for (auto& f : found)
        if (f) {
          failure = std::move(f);
          break;
        }
    }
  }

  report.nodes = nodes.load();
  if (failure) {
    report.verdict = Verdict::Counterexample;
    report.counterexample = std::move(failure->path);
    report.violation_ply = report.counterexample.size();
    report.reason = std::move(failure->reason);
  } else if (exhausted) {
    report.verdict = Verdict::Inconclusive;
    report.reason = "node budget of " + std::to_string(spec.node_budget) + " exceeded";
  }
  return report;
}

}  // namespace domino
