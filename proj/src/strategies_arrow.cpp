#include <algorithm>
#include <limits>

#include "domino/strategies.hpp"

namespace domino {

namespace {

auto lookup_in(const Pattern& p) {
  return [&p](const Cell& c) -> int {
    auto col = p.at(c);
    return col ? static_cast<int>(col->id) : -1;
  };
}

class BlackStrategy final : public Strategy {
 public:
  BlackStrategy(ArrowLayout layout, int n) : layout_(layout), n_(n) {}
  std::string name() const override { return "a-black"; }

  Move choose(const GameView& v) override {
    const auto& p = v.pattern;
    const auto lookup = lookup_in(p);
    auto iota = [&](const Cell& c) { return interpret_arrow_at(layout_, lookup, c); };
    auto black = [&](const Cell& c) { return Move::place(c, layout_.black()); };

    if (!punishing_ && b_replied_ && last_black_ && !iota(*last_black_)) punishing_ = true;
    if (!punishing_ && dead_cell(p)) punishing_ = true;

    if (punishing_) {
      // A surrounded cell without interpretation: fill the window around it.
      if (auto c = dead_cell(p))
        for (int d = -n_ - 1; d <= n_ + 1; ++d)
          if (!p.contains(*c + Cell(d))) return black(*c + Cell(d));
      // Make one: colour next to an uninterpreted black tile, or fill an uninterpreted hole.
      for (const auto& [cell, color] : p) {
        if (!layout_.is_black(color) || iota(cell)) continue;
        const bool l = p.contains(cell - Cell(1)), r = p.contains(cell + Cell(1));
        if (l != r) return black(l ? cell + Cell(1) : cell - Cell(1));
      }
      for (const auto& [cell, color] : p)
        for (const Cell h : {cell - Cell(1), cell + Cell(1)})
          if (!p.contains(h) && p.contains(h - Cell(1)) && p.contains(h + Cell(1)) && !iota(h)) return black(h);
      for (const auto& [cell, color] : p)
        if (layout_.is_black(color) && !iota(cell) && !p.contains(cell + Cell(1))) return black(cell + Cell(1));
    }
    Cell c{};
    while (p.contains(c)) c = c + Cell(1);
    last_black_ = c;
    b_replied_ = false;
    return black(c);
  }

  void observe(const Move&, Player who, const GameView&) override {
    if (who == Player::B) b_replied_ = true;
  }

  std::unique_ptr<Strategy> clone() const override { return std::make_unique<BlackStrategy>(*this); }

 private:
  std::optional<Cell> dead_cell(const Pattern& p) const {
    const auto lookup = lookup_in(p);
    for (const auto& [cell, color] : p)
      if (p.contains(cell - Cell(1)) && p.contains(cell + Cell(1)) && !interpret_arrow_at(layout_, lookup, cell))
        return cell;
    return std::nullopt;
  }

  ArrowLayout layout_;
  int n_;
  bool punishing_ = false;
  bool b_replied_ = false;
  std::optional<Cell> last_black_;
};

class ParityStrategy final : public Strategy {
 public:
  ParityStrategy(ArrowLayout layout, PeriodicConfiguration x) : layout_(layout), x_(std::move(x)) {}
  std::string name() const override { return "b-parity"; }

  Move choose(const GameView& v) override {
    if (!pending_) {
      if (v.variant == Variant::PassAllowed) return Move::pass();
      throw StrategyUndefined("parity strategy needs to pass here");
    }
    const std::int32_t i = (*pending_)[0];
    pending_.reset();
    // Uncoloured run lengths either side of i; nullopt = infinite.
    std::optional<std::int64_t> left, right;
    for (const auto& e : v.pattern) {
      const std::int32_t y = e.first[0];
      if (y < i) left = std::min<std::int64_t>(left.value_or(std::numeric_limits<std::int64_t>::max()), i - y - 1);
      if (y > i) right = std::min<std::int64_t>(right.value_or(std::numeric_limits<std::int64_t>::max()), y - i - 1);
    }
    const bool right_odd = right && *right % 2;
    const bool left_odd = left && *left % 2;
    bool go_right;
    if (right_odd) go_right = true;
    else if (left_odd) go_right = false;
    else if (!right) go_right = true;
    else if (!left) go_right = false;
    else go_right = *right > 0 || *left == 0;  // both even: the invariant was already broken
    if (go_right && right && *right == 0) go_right = false;
    if (!go_right && left && *left == 0) {
      if (v.variant == Variant::PassAllowed) return Move::pass();
      throw StrategyUndefined("no free cell next to A's move");
    }
    if (go_right) return Move::place(Cell(i + 1), layout_.arrow(x_.at(i + 1), x_.at(i), Direction::Left));
    return Move::place(Cell(i - 1), layout_.arrow(x_.at(i - 1), x_.at(i), Direction::Right));
  }

  void observe(const Move& m, Player who, const GameView&) override {
    if (who == Player::A) {
      if (m.is_pass()) pending_.reset();
      else pending_ = m.cell;
    } else {
      pending_.reset();
    }
  }

  std::unique_ptr<Strategy> clone() const override { return std::make_unique<ParityStrategy>(*this); }

 private:
  ArrowLayout layout_;
  PeriodicConfiguration x_;
  std::optional<Cell> pending_;
};

}  // namespace

Color PeriodicConfiguration::at(std::int64_t i) const {
  const auto p = static_cast<std::int64_t>(period.size());
  return period[static_cast<std::size_t>(((i + shift) % p + p) % p)];
}

std::unique_ptr<Strategy> a_black_strategy(const ArrowLayout& layout, int n) {
  if (n < 1) throw InputError("window radius must be at least 1");
  return std::make_unique<BlackStrategy>(layout, n);
}

std::unique_ptr<Strategy> b_parity_strategy(const Sft& base, PeriodicConfiguration witness) {
  if (base.dimension() != 1) throw Unsupported("parity strategy needs a one-dimensional base");
  if (witness.period.empty()) throw InputError("witness period is empty");
  for (Color c : witness.period)
    if (c.id >= base.alphabet_size()) throw InputError("witness uses a colour outside the base alphabet");
  const auto len = static_cast<std::int64_t>(3 * witness.period.size());
  std::vector<Pattern::Entry> e;
  for (std::int64_t i = 0; i < len; ++i) e.emplace_back(Cell(static_cast<std::int32_t>(i)), witness.at(i));
  if (is_final(Pattern(std::move(e)), base)) throw InputError("witness configuration is not admissible");
  return std::make_unique<ParityStrategy>(ArrowLayout{base.alphabet_size()}, std::move(witness));
}

InvariantMonitor parity_monitor() {
  return InvariantMonitor{"parity", [](const Pattern& p, Player to_move, std::uint64_t) -> std::optional<std::string> {
                            if (to_move != Player::A) return std::nullopt;
                            for (std::size_t j = 1; j < p.size(); ++j) {
                              const auto gap = p.entries()[j].first[0] - p.entries()[j - 1].first[0] - 1;
                              if (gap % 2)
                                return "odd uncoloured run of length " + std::to_string(gap) + " before cell " +
                                       std::to_string(p.entries()[j].first[0]);
                            }
                            return std::nullopt;
                          }};
}

InvariantMonitor no_interpretation_monitor(const ArrowLayout& layout) {
  return InvariantMonitor{
      "no-interpretation", [layout](const Pattern& p, Player, std::uint64_t) -> std::optional<std::string> {
        const auto lookup = lookup_in(p);
        for (const auto& e : p)
          for (const Cell h : {e.first - Cell(1), e.first + Cell(1)})
            if (!p.contains(h) && interpret_arrow_at(layout, lookup, h))
              return "uncoloured cell " + std::to_string(h[0]) + " has an interpretation";
        return std::nullopt;
      }};
}

}  // namespace domino
