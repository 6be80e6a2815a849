#include <omp.h>

#include "domino/solver_finite.hpp"
#include "retrograde.hpp"

namespace domino {

namespace {
constexpr auto kInf = RegionGame::kInfinity;
}

std::optional<Move> StrategyTable::lookup(const Pattern& pattern, std::uint64_t turn_index) const {
  return lookup_code(game_->encode(pattern), game_->turns().state_of(turn_index));
}

std::optional<Move> StrategyTable::lookup_code(std::uint64_t code, std::size_t residue) const {
  auto it = moves_.find(key(code, residue));
  if (it == moves_.end()) return std::nullopt;
  return it->second;
}

RegionSolver::RegionSolver(const Sft& sft, int radius, Variant variant, const TurnWord& turns, SolveOptions options)
    : sft_(std::make_shared<const Sft>(sft)), options_(options) {
  game_ = std::make_shared<const RegionGame>(*sft_, radius, variant, turns);
}

void RegionSolver::solve() {
  if (solved_) return;
  const auto entries = static_cast<long double>(game_->code_count()) * game_->residue_count();
  if (entries > static_cast<long double>(options_.max_entries))
    throw Unsupported("region has " + std::to_string(game_->code_count()) + " patterns x " +
                      std::to_string(game_->residue_count()) + " turn states, above the table cap");
  if (options_.engine == Engine::Parallel) solve_parallel();
  else solve_reference();
  solved_ = true;
}

void RegionSolver::solve_parallel() {
  const auto& g = *game_;
  const std::size_t R = g.residue_count();
  const std::size_t N = g.cell_count();
  const std::uint64_t S = g.code_count();
  dense_.assign(S * R, kInf);

  // Bucket codes by tile count: a pattern only depends on patterns with one more tile.
  std::vector<std::vector<std::uint64_t>> levels(N + 1);
  for (std::uint64_t code = 0; code < S; ++code) levels[static_cast<std::size_t>(g.tile_count(code))].push_back(code);

  auto child = [this, R](std::uint64_t c, std::size_t r) { return dense_[c * R + r]; };
  for (std::size_t level = N + 1; level-- > 0;) {
    const auto& codes = levels[level];
    const auto count = static_cast<std::int64_t>(codes.size());
#pragma omp parallel for schedule(dynamic, 512)
    for (std::int64_t i = 0; i < count; ++i) {
      const auto code = codes[static_cast<std::size_t>(i)];
      detail::evaluate_code(g, code, child, &dense_[code * R]);
    }
  }
  stats_.nodes = S;
  stats_.states = S * R;
}

std::uint32_t RegionSolver::value(std::uint64_t code, std::size_t residue) const {
  if (!solved_) throw InternalError("region not solved yet");
  const std::size_t R = game_->residue_count();
  if (options_.engine == Engine::Parallel) return dense_.at(code * R + residue);
  auto it = sparse_.find(code);
  if (it == sparse_.end()) throw InputError("pattern not reachable in the solved region");
  return it->second.at(residue);
}

std::uint32_t RegionSolver::value(const Pattern& pattern, std::uint64_t turn_index) const {
  return value(game_->encode(pattern), game_->turns().state_of(turn_index));
}

std::optional<Move> RegionSolver::choose(std::uint64_t code, std::size_t residue, Player player) const {
  const auto& g = *game_;
  const auto here = value(code, residue);
  if (g.is_final(code) || g.is_full(code)) return std::nullopt;
  if ((player == Player::A) != (here != kInf)) return std::nullopt;  // not winning for `player`
  const std::size_t nr = g.next_residue(residue);
  for (const Move& m : g.moves(code)) {
    const std::uint64_t next = m.is_pass() ? code : g.with_tile(code, g.cell_index(m.cell), m.color);
    const auto v = value(next, nr);
    if (player == Player::A ? (v != kInf && v + 1 == here) : v == kInf) return m;
  }
  throw InternalError("no successor realises the computed value");
}

SolveResult RegionSolver::result(std::uint64_t start_index) const {
  const auto& g = *game_;
  SolveResult res;
  res.stats = stats_;
  res.extended_value = !(g.turns().prefix().empty() && g.turns().period() == "AB");
  std::size_t r = g.turns().state_of(start_index);
  const auto v = value(0, r);
  if (v == kInf) {
    res.winner = Player::B;
    return res;
  }
  res.winner = Player::A;
  res.value = v;
  std::uint64_t code = 0;
  while (!g.is_final(code)) {
    std::optional<Move> m;
    const auto here = value(code, r);
    for (const Move& cand : g.moves(code)) {
      const std::uint64_t next = cand.is_pass() ? code : g.with_tile(code, g.cell_index(cand.cell), cand.color);
      const auto cv = value(next, g.next_residue(r));
      // A realises the minimum, B the maximum; both equal here - 1.
      if (cv != kInf && cv + 1 == here) {
        m = cand;
        break;
      }
    }
    if (!m) throw InternalError("principal line broke off");
    res.principal_line.push_back(*m);
    if (!m->is_pass()) code = g.with_tile(code, g.cell_index(m->cell), m->color);
    r = g.next_residue(r);
  }
  return res;
}

StrategyTable RegionSolver::extract_strategy(Player player) const {
  const auto& g = *game_;
  StrategyTable table(game_, player);
  const std::size_t R = g.residue_count();
  auto visit = [&](std::uint64_t code) {
    for (std::size_t r = 0; r < R; ++r) {
      if (g.player(r) != player) continue;
      const auto v = value(code, r);
      const bool wins = player == Player::A ? v != kInf : v == kInf;
      if (!wins) continue;
      if (auto m = choose(code, r, player)) table.set(code, r, *m);
    }
  };
  if (options_.engine == Engine::Parallel) {
    for (std::uint64_t code = 0; code < g.code_count(); ++code) visit(code);
  } else {
    for (const auto& [code, vals] : sparse_) visit(code);
  }
  return table;
}

SolveResult solve_region(const Sft& sft, int radius, Variant variant, const TurnWord& turns,
                         std::uint64_t start_index, SolveOptions options) {
  RegionSolver solver(sft, radius, variant, turns, options);
  solver.solve();
  return solver.result(start_index);
}

StrategyTable extract_strategy(const Sft& sft, int radius, Variant variant, const TurnWord& turns, Player player,
                               SolveOptions options) {
  RegionSolver solver(sft, radius, variant, turns, options);
  solver.solve();
  return solver.extract_strategy(player);
}

WindowSearch semidecide_A_wins(const Sft& sft, Variant variant, const TurnWord& turns, int n_max,
                               std::uint64_t start_index, SolveOptions options) {
  if (!turns.finite_state()) throw Unsupported("turn word '" + turns.to_string() + "' is not finite-state");
  WindowSearch out;
  for (int n = 0; n <= n_max; ++n) {
    std::optional<RegionSolver> solver;
    try {
      solver.emplace(sft, n, variant, turns, options);
      solver->solve();
    } catch (const Unsupported&) {
      out.truncated = true;
      return out;
    }
    out.searched_up_to = n;
    if (solver->result(start_index).winner == Player::A) {
      out.n = n;
      return out;
    }
  }
  return out;
}

}  // namespace domino
