#include <algorithm>
#include <random>

#include "domino/strategies.hpp"

namespace domino {

namespace {

Color col(std::size_t id) { return Color{static_cast<std::uint16_t>(id)}; }

int color_at(const Pattern& p, std::int32_t x) {
  auto c = p.at(Cell(x));
  return c ? c->id : -1;
}

/// First cell on the first axis past every tile, `gap` cells clear; origin when empty.
Cell fresh_cell(const Pattern& p, std::int64_t gap) {
  if (p.empty()) return Cell{};
  std::int32_t hi = p.entries().front().first[0];
  for (const auto& e : p) hi = std::max(hi, e.first[0]);
  return Cell(hi + static_cast<std::int32_t>(gap));
}

class PassStrategy final : public Strategy {
 public:
  std::string name() const override { return "pass"; }
  Move choose(const GameView&) override { return Move::pass(); }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<PassStrategy>(*this); }
};

class ScriptedStrategy final : public Strategy {
 public:
  explicit ScriptedStrategy(std::vector<Move> moves) : moves_(std::move(moves)) {}
  std::string name() const override { return "scripted"; }
  Move choose(const GameView&) override { return next_ < moves_.size() ? moves_[next_++] : Move::pass(); }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<ScriptedStrategy>(*this); }

 private:
  std::vector<Move> moves_;
  std::size_t next_ = 0;
};

class RandomStrategy final : public Strategy {
 public:
  RandomStrategy(std::uint64_t seed, int locality, std::vector<Color> colors)
      : rng_(seed), locality_(locality), colors_(std::move(colors)) {}
  std::string name() const override { return "random"; }

  Move choose(const GameView& v) override {
    std::vector<Color> colors = colors_;
    if (colors.empty())
      for (std::size_t a = 0; a < v.sft.alphabet_size(); ++a) colors.push_back(col(a));
    std::vector<Cell> cells;
    for (const auto& e : v.pattern) {
      auto ball = l1_ball(e.first, locality_, v.sft.dimension());
      cells.insert(cells.end(), ball.begin(), ball.end());
    }
    cells.push_back(fresh_cell(v.pattern, locality_ + 1));
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    std::erase_if(cells, [&](const Cell& c) { return v.pattern.contains(c); });
    const std::size_t options = cells.size() * colors.size() + (v.variant == Variant::PassAllowed ? 1 : 0);
    std::uniform_int_distribution<std::size_t> pick(0, options - 1);
    const std::size_t r = pick(rng_);
    if (r == cells.size() * colors.size()) return Move::pass();
    return Move::place(cells[r / colors.size()], colors[r % colors.size()]);
  }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<RandomStrategy>(*this); }

 private:
  std::mt19937_64 rng_;
  int locality_;
  std::vector<Color> colors_;
};

class TableStrategy final : public Strategy {
 public:
  explicit TableStrategy(std::shared_ptr<const StrategyTable> t) : table_(std::move(t)) {}
  std::string name() const override { return "table"; }

  Move choose(const GameView& v) override {
    try {
      if (auto m = table_->lookup(v.pattern, v.turn_index())) return *m;
    } catch (const InputError&) {
      // pattern left the solved region; fall through
    }
    if (v.variant == Variant::PassAllowed) return Move::pass();
    for (const Cell& c : table_->game().cells())
      if (!v.pattern.contains(c)) return Move::place(c, Color{});
    throw StrategyUndefined("no legal move in the solved region");
  }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<TableStrategy>(*this); }

 private:
  std::shared_ptr<const StrategyTable> table_;
};

class ReconstructedStrategy final : public Strategy {
 public:
  explicit ReconstructedStrategy(std::shared_ptr<OmegaSolver> s) : solver_(std::move(s)) {}
  std::string name() const override { return "reconstructed"; }

  Move choose(const GameView& v) override {
    const int T = solver_->horizon();
    if (v.ply < static_cast<std::uint64_t>(T)) {
      MultiBoardPosition pos;
      pos.horizon = T;
      pos.plies = static_cast<int>(v.ply);
      pos.turn = TurnCursor{v.turns, v.turn_index()};
      for (const auto& b : boards_) pos.boards.push_back(b.local);
      if (auto m = solver_->winning_move(pos)) {
        switch (m->kind) {
          case OmegaMove::Kind::Pass:
            return Move::pass();
          case OmegaMove::Kind::Place:
            return Move::place(boards_[m->board].anchor + m->cell, m->color);
          case OmegaMove::Kind::Open:
            return Move::place(anchor(v.pattern), m->color);
        }
      }
    }
    if (v.variant == Variant::PassAllowed) return Move::pass();
    return Move::place(anchor(v.pattern), Color{});
  }

  void observe(const Move& m, Player, const GameView& v) override {
    if (v.ply <= static_cast<std::uint64_t>(solver_->horizon()))
      theta_step(boards_, m, solver_->horizon(), static_cast<int>(v.ply));
  }

  std::unique_ptr<Strategy> clone() const override { return std::make_unique<ReconstructedStrategy>(*this); }

 private:
  Cell anchor(const Pattern& p) const {
    const std::int64_t spacing = std::int64_t{1} << (solver_->horizon() + 2);
    std::int64_t x = spacing * static_cast<std::int64_t>(boards_.size() + 1);
    for (const auto& e : p) x = std::max<std::int64_t>(x, e.first[0] + spacing);
    return Cell(static_cast<std::int32_t>(x));
  }

  std::shared_ptr<OmegaSolver> solver_;
  std::vector<AnchoredBoard> boards_;
};

// --- palindromes -----------------------------------------------------------

class PalindromeStrategy final : public Strategy {
 public:
  std::string name() const override { return "a-palindrome"; }

  Move choose(const GameView& v) override {
    if (v.pattern.empty()) return Move::place(Cell{}, Color{});
    if (follow_up_) {
      const auto [first, second, color] = *follow_up_;
      follow_up_.reset();
      if (!v.pattern.contains(first)) return Move::place(first, color);
      if (!v.pattern.contains(second)) return Move::place(second, color);
      throw StrategyUndefined("both follow-up cells are coloured");
    }
    if (!last_b_ || last_b_->is_pass()) throw StrategyUndefined("no B placement to answer");
    const std::int32_t x = last_b_->cell[0];
    const Color a = last_b_->color;
    if (x == 0) throw StrategyUndefined("B played on the centre");
    const std::int32_t s = x > 0 ? 1 : -1;
    const std::int32_t k = x * s;
    if (v.pattern.contains(Cell(s * (k - 1)))) {
      if (v.pattern.contains(Cell(-s * k))) throw StrategyUndefined("mirror cell is coloured");
      return Move::place(Cell(-s * k), a);
    }
    if (v.pattern.contains(Cell(s * (k + 1)))) throw StrategyUndefined("cell next to B's move is coloured");
    follow_up_ = FollowUp{Cell(s * (k + 2)), Cell(s * (k - 1)), a};
    return Move::place(Cell(s * (k + 1)), a);
  }

  void observe(const Move& m, Player who, const GameView&) override {
    if (who == Player::B) last_b_ = m;
  }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<PalindromeStrategy>(*this); }

 private:
  struct FollowUp {
    Cell first, second;
    Color color;
  };
  std::optional<Move> last_b_;
  std::optional<FollowUp> follow_up_;
};

// --- 1234 ------------------------------------------------------------------

/// Live windows (still completable to 1234) that hold at least one tile, by start cell.
std::vector<std::pair<std::int32_t, int>> live_windows(const Pattern& p) {
  std::vector<std::int32_t> starts;
  for (const auto& e : p)
    for (int j = 0; j < 4; ++j) starts.push_back(e.first[0] - j);
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
  std::vector<std::pair<std::int32_t, int>> out;
  for (auto s : starts) {
    int tiles = 0;
    bool live = true;
    for (int j = 0; j < 4 && live; ++j) {
      const int c = color_at(p, s + j);
      if (c < 0) continue;
      if (c != j + 1) live = false;
      ++tiles;
    }
    if (live && tiles) out.emplace_back(s, tiles);
  }
  return out;
}

class B1234Strategy final : public Strategy {
 public:
  std::string name() const override { return "b-1234"; }
  Move choose(const GameView& v) override {
    const auto live = live_windows(v.pattern);
    std::vector<Move> cands;
    if (v.variant == Variant::PassAllowed) cands.push_back(Move::pass());
    std::vector<std::int32_t> cells;
    for (const auto& [s, t] : live)
      for (int j = 0; j < 4; ++j)
        if (!v.pattern.contains(Cell(s + j))) cells.push_back(s + j);
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    for (auto x : cells)
      for (std::size_t c = 0; c < 5; ++c) cands.push_back(Move::place(Cell(x), col(c)));
    if (cands.empty()) return Move::place(fresh_cell(v.pattern, 8), Color{});  // no-pass, nothing live
    std::optional<Move> best;
    std::pair<int, int> best_score{};
    for (const auto& m : cands) {
      Pattern next = v.pattern;
      if (!m.is_pass()) next.insert(m.cell, m.color);
      const auto c = census_1234(next);
      const std::pair<int, int> score{c.two_or_more, c.one};
      if (!best || score < best_score) {
        best = m;
        best_score = score;
      }
    }
    return *best;
  }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<B1234Strategy>(*this); }
};

class Greedy1234Strategy final : public Strategy {
 public:
  std::string name() const override { return "a-greedy-1234"; }
  Move choose(const GameView& v) override {
    const auto live = live_windows(v.pattern);
    std::optional<std::pair<std::int32_t, int>> best;
    for (const auto& w : live)
      if (!best || w.second > best->second) best = w;
    if (best)
      for (int j = 0; j < 4; ++j)
        if (!v.pattern.contains(Cell(best->first + j))) return Move::place(Cell(best->first + j), col(static_cast<std::size_t>(j + 1)));
    return Move::place(fresh_cell(v.pattern, 8), col(1));
  }
  std::unique_ptr<Strategy> clone() const override { return std::make_unique<Greedy1234Strategy>(*this); }
};

}  // namespace

std::unique_ptr<Strategy> pass_strategy() { return std::make_unique<PassStrategy>(); }

std::unique_ptr<Strategy> scripted_strategy(std::vector<Move> moves) {
  return std::make_unique<ScriptedStrategy>(std::move(moves));
}

std::unique_ptr<Strategy> random_strategy(std::uint64_t seed, int locality, std::vector<Color> colors) {
  if (locality < 0) throw InputError("locality must be non-negative");
  return std::make_unique<RandomStrategy>(seed, locality, std::move(colors));
}

std::unique_ptr<Strategy> table_strategy(std::shared_ptr<const StrategyTable> table) {
  return std::make_unique<TableStrategy>(std::move(table));
}

std::unique_ptr<Strategy> reconstruct_strategy(std::shared_ptr<OmegaSolver> solver) {
  if (solver->horizon() > 28) throw Unsupported("horizon too large for board anchors");
  return std::make_unique<ReconstructedStrategy>(std::move(solver));
}

std::unique_ptr<Strategy> a_palindrome_strategy(int n) {
  if (n < 1) throw InputError("palindrome game needs n >= 1");
  return std::make_unique<PalindromeStrategy>();
}

Sft palindrome_game(int n) {
  if (n < 1 || n > 9) throw InputError("palindrome game needs 1 <= n <= 9");
  std::vector<std::string> alphabet;
  for (int i = 0; i <= n; ++i) alphabet.push_back(std::to_string(i));
  const std::size_t m = alphabet.size();
  std::vector<Pattern> forbidden;
  // A palindrome of length 2n+1 is fixed by its first n+1 letters.
  std::size_t count = 1;
  for (int j = 0; j <= n; ++j) count *= m;
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<Color> half(static_cast<std::size_t>(n) + 1);
    std::size_t x = code;
    for (auto& c : half) {
      c = col(x % m);
      x /= m;
    }
    std::vector<Pattern::Entry> e;
    for (int j = 0; j <= 2 * n; ++j) e.emplace_back(Cell(j), half[static_cast<std::size_t>(j <= n ? j : 2 * n - j)]);
    forbidden.emplace_back(std::move(e));
  }
  for (std::size_t i = 0; i < m; ++i)
    forbidden.push_back(Pattern({{Cell(0), col(i)}, {Cell(1), col(i)}, {Cell(2), col(i)}}));
  return Sft(1, std::move(alphabet), std::move(forbidden));
}

Sft game_1234() {
  return Sft(1, {"0", "1", "2", "3", "4"},
             {Pattern({{Cell(0), col(1)}, {Cell(1), col(2)}, {Cell(2), col(3)}, {Cell(3), col(4)}})});
}

WindowCensus census_1234(const Pattern& pattern) {
  WindowCensus c;
  for (const auto& [s, t] : live_windows(pattern)) {
    if (t == 1) ++c.one;
    else ++c.two_or_more;
  }
  return c;
}

std::unique_ptr<Strategy> b_1234_strategy() { return std::make_unique<B1234Strategy>(); }
std::unique_ptr<Strategy> a_greedy_1234_strategy() { return std::make_unique<Greedy1234Strategy>(); }

InvariantMonitor checkpoint_1234_monitor(std::uint64_t start_index) {
  return InvariantMonitor{
      "1234-checkpoint", [start_index](const Pattern& p, Player, std::uint64_t ply) -> std::optional<std::string> {
        // Block m of s2 ends after (m+1)^2 - 1 turns.
        const std::uint64_t t = start_index + ply;
        std::uint64_t m = 1;
        while ((m + 1) * (m + 1) - 1 < t) ++m;
        if ((m + 1) * (m + 1) - 1 != t) return std::nullopt;
        const auto c = census_1234(p);
        if (c.two_or_more > 0 || c.one > static_cast<int>(m))
          return "after block " + std::to_string(m) + ": " + std::to_string(c.one) + " one-tile and " +
                 std::to_string(c.two_or_more) + " multi-tile live windows";
        return std::nullopt;
      }};
}

}  // namespace domino
