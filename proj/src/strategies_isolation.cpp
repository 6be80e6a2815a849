#include <algorithm>
#include <limits>

#include "domino/strategies.hpp"

namespace domino {

namespace {

struct Occurrence1D {
  Cell start;
  std::int64_t length = 0;
};

class IsolationStrategy final : public Strategy {
 public:
  IsolationStrategy(IsolationConfig cfg, std::int64_t k) : cfg_(std::move(cfg)), k_(k) {
    const auto n = static_cast<std::int64_t>(cfg_.word.size());
    // phase j (1..n): c_j (2k+1) turns, c_j = c (k+1)^(n-j); radius[j] wanted at the end of level j
    radius_.assign(static_cast<std::size_t>(n + 1), cfg_.delta);
    for (std::int64_t j = n; j >= 1; --j) radius_[static_cast<std::size_t>(j - 1)] = 2 * radius_[static_cast<std::size_t>(j)] + 3;
    std::int64_t cj = cfg_.c, end = v_bound(n, cfg_.c, k_);
    phase_end_.assign(static_cast<std::size_t>(n + 1), 0);
    for (std::int64_t j = n; j >= 1; --j) {
      phase_end_[static_cast<std::size_t>(j)] = end;
      end -= cj * (2 * k_ + 1);
      cj *= k_ + 1;
    }
  }

  std::string name() const override { return "a-isolation"; }

  Move choose(const GameView& v) override {
    const auto n = static_cast<std::int64_t>(cfg_.word.size());
    const auto ply = static_cast<std::int64_t>(v.ply);
    std::int64_t level = 1;
    while (level <= n && ply >= phase_end_[static_cast<std::size_t>(level)]) ++level;
    if (level > n) return idle(v);
    const auto& p = v.pattern;
    const auto letter = [&](std::int64_t i) { return cfg_.word[static_cast<std::size_t>(i)]; };

    if (level == 1) {
      std::int64_t far = std::numeric_limits<std::int32_t>::min();
      for (const auto& e : p) far = std::max<std::int64_t>(far, e.first[0]);
      const std::int64_t x = p.empty() ? 0 : far + radius_[0] + n + 1;
      Cell c{};
      c[0] = static_cast<std::int32_t>(x);
      occ_.push_back({c, 1});
      return Move::place(c, letter(0));
    }
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < occ_.size(); ++i) {
      if (occ_[i].length != level - 1 || p.contains(tip(occ_[i]))) continue;
      if (isolated(p, occ_[i], radius_[static_cast<std::size_t>(level - 1)])) {
        pick = i;
        break;
      }
      if (!pick) pick = i;
    }
    if (!pick) return idle(v);
    auto& o = occ_[*pick];
    const Cell c = tip(o);
    ++o.length;
    return Move::place(c, letter(level - 1));
  }

  std::unique_ptr<Strategy> clone() const override { return std::make_unique<IsolationStrategy>(*this); }

 private:
  static Cell tip(const Occurrence1D& o) {
    Cell c = o.start;
    c[0] += static_cast<std::int32_t>(o.length);
    return c;
  }

  // No tile outside the occurrence within L1 distance `r` of it.
  static bool isolated(const Pattern& p, const Occurrence1D& o, std::int64_t r) {
    for (const auto& [cell, color] : p) {
      bool inside = cell[1] == o.start[1] && cell[2] == o.start[2] && cell[0] >= o.start[0] &&
                    cell[0] < o.start[0] + o.length;
      if (inside) continue;
      for (std::int64_t i = 0; i < o.length; ++i) {
        Cell q = o.start;
        q[0] += static_cast<std::int32_t>(i);
        if (l1_distance(cell, q) <= r) return false;
      }
    }
    return true;
  }

  Move idle(const GameView& v) const {
    if (v.variant == Variant::PassAllowed) return Move::pass();
    std::int64_t far = 0;
    for (const auto& e : v.pattern) far = std::max<std::int64_t>(far, e.first[0] + 2 * radius_[0]);
    Cell c{};
    c[0] = static_cast<std::int32_t>(far + 1);
    return Move::place(c, cfg_.word.empty() ? Color{} : cfg_.word.front());
  }

  IsolationConfig cfg_;
  std::int64_t k_;
  std::vector<std::int64_t> radius_;
  std::vector<std::int64_t> phase_end_;
  std::vector<Occurrence1D> occ_;
};

}  // namespace

std::int64_t isolation_turns(std::size_t word_length, std::int64_t c, std::int64_t k) {
  return v_bound(static_cast<std::int64_t>(word_length), c, k);
}

std::unique_ptr<Strategy> a_isolation_strategy(const TurnWord& turns, IsolationConfig config) {
  if (config.c < 1) throw InputError("isolation needs c >= 1");
  if (config.delta < 1) throw InputError("isolation needs delta >= 1");
  const std::int64_t k = config.k ? *config.k : gap_bound(turns, "AA", default_scan_depth(turns));
  if (k < 1) throw InputError("gap bound must be at least 1");
  isolation_turns(config.word.size(), config.c, k);  // rejects overflow up front
  return std::make_unique<IsolationStrategy>(std::move(config), k);
}

}  // namespace domino
