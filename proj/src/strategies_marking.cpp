#include <array>
#include <string_view>

#include "domino/strategies.hpp"

namespace domino {

namespace {

constexpr Color kA{0};
constexpr Color kB{1};

// -1 uncoloured, 0 a, 1 b
int glyph(const Pattern& p, std::int32_t x) {
  auto c = p.at(Cell(x));
  return c ? c->id : -1;
}

bool matches(const Pattern& p, std::int32_t at, std::string_view word) {
  for (std::size_t j = 0; j < word.size(); ++j)
    if (glyph(p, at + static_cast<std::int32_t>(j)) != (word[j] == 'a' ? 0 : 1)) return false;
  return true;
}

class FourRuleStrategy final : public Strategy {
 public:
  std::string name() const override { return "b-four-rule"; }

  Move choose(const GameView& v) override {
    const auto& p = v.pattern;
    auto free = [&](std::int32_t x) { return !p.contains(Cell(x)); };
    std::optional<std::int32_t> best;
    auto offer = [&](std::int32_t x) {
      if (free(x) && (!best || x < *best)) best = x;
    };
    for (const auto& [cell, color] : p)
      if (color == kA) {
        offer(cell[0] - 1);
        offer(cell[0] + 1);
      }
    if (!best)
      for (const auto& e : p)
        if (matches(p, e.first[0], "baba")) offer(e.first[0] - 1);
    if (!best)
      for (const auto& e : p)
        for (std::string_view w : {"bbababab", "bbabababab"})
          if (matches(p, e.first[0], w)) offer(e.first[0] + static_cast<std::int32_t>(w.size()));
    if (best) return Move::place(Cell(*best), kB);
    if (v.variant == Variant::PassAllowed) return Move::pass();
    throw StrategyUndefined("four-rule strategy has nothing to play and cannot pass");
  }

  std::unique_ptr<Strategy> clone() const override { return std::make_unique<FourRuleStrategy>(*this); }
};

}  // namespace

std::unique_ptr<Strategy> b_four_rule_strategy() { return std::make_unique<FourRuleStrategy>(); }

std::vector<InvariantMonitor> four_rule_monitors() {
  InvariantMonitor bab{"every-a-in-bab", [](const Pattern& p, Player to_move, std::uint64_t) -> std::optional<std::string> {
                         if (to_move != Player::A) return std::nullopt;
                         for (const auto& [cell, color] : p)
                           if (color == kA && !matches(p, cell[0] - 1, "bab"))
                             return "a at " + std::to_string(cell[0]) + " not inside bab";
                         return std::nullopt;
                       }};
  InvariantMonitor aba{
      "every-aba-guarded", [](const Pattern& p, Player to_move, std::uint64_t) -> std::optional<std::string> {
        if (to_move != Player::A) return std::nullopt;
        static constexpr std::array<std::string_view, 3> guards{"bbaba", "bbabababb", "bbababababb"};
        for (const auto& e : p) {
          const std::int32_t x = e.first[0];
          if (!matches(p, x, "aba")) continue;
          bool ok = false;
          for (auto g : guards)
            for (std::size_t j = 0; !ok && j + 3 <= g.size(); ++j)
              if (g.substr(j, 3) == "aba" && matches(p, x - static_cast<std::int32_t>(j), g)) ok = true;
          if (!ok) return "aba at " + std::to_string(x) + " not guarded";
        }
        return std::nullopt;
      }};
  return {bab, aba};
}

}  // namespace domino
