#pragma once
// Direct search of the flat game on Z^d: does A force a forbidden pattern within T plies?
// A new tile farther than T from every tile can never join an occurrence in time, so all
// such cells are represented by one fresh cell. Positions are memoised up to translation.
#include <algorithm>
#include <map>
#include <utility>

#include "domino/core.hpp"
#include "domino/words.hpp"
#include "oracles/naive_forbidden.hpp"

namespace oracle {

class FlatGame {
 public:
  FlatGame(const domino::Sft& sft, int horizon, domino::TurnWord turns, domino::Variant variant,
           std::uint64_t start = 0)
      : sft_(sft), horizon_(horizon), turns_(std::move(turns)), variant_(variant), start_(start) {}

  bool a_wins() { return wins(domino::Pattern{}, 0); }
  std::uint64_t positions() const { return memo_.size(); }

 private:
  bool wins(const domino::Pattern& p, int plies) {
    if (naive_final(p, sft_)) return true;
    if (plies >= horizon_) return false;
    auto key = std::make_pair(p.normalized(), plies);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const bool a = turns_.letter(start_ + static_cast<std::uint64_t>(plies)) == domino::Player::A;
    bool result = !a;
    auto try_child = [&](const domino::Pattern& c) {
      if (wins(c, plies + 1) == a) {
        result = a;
        return true;
      }
      return false;
    };
    bool done = variant_ == domino::Variant::PassAllowed && try_child(p);
    if (!done) {
      for (const auto& cell : candidates(p)) {
        for (std::size_t c = 0; c < sft_.alphabet_size() && !done; ++c) {
          auto q = p;
          q.insert(cell, domino::Color{static_cast<std::uint16_t>(c)});
          done = try_child(q);
        }
        if (done) break;
      }
    }
    memo_[key] = result;
    return result;
  }

  std::vector<domino::Cell> candidates(const domino::Pattern& p) const {
    std::vector<domino::Cell> out;
    const int d = sft_.dimension();
    for (const auto& e : p) {
      auto ball = domino::l1_ball(e.first, horizon_, d);
      out.insert(out.end(), ball.begin(), ball.end());
    }
    domino::Cell fresh{};
    if (!p.empty()) {
      std::int32_t hi = p.begin()->first[0];
      for (const auto& e : p) hi = std::max(hi, e.first[0]);
      fresh[0] = hi + 2 * horizon_ + 2;
    }
    out.push_back(fresh);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::erase_if(out, [&](const domino::Cell& c) { return p.contains(c); });
    return out;
  }

  domino::Sft sft_;
  int horizon_;
  domino::TurnWord turns_;
  domino::Variant variant_;
  std::uint64_t start_;
  std::map<std::pair<domino::Pattern, int>, bool> memo_;
};

}  // namespace oracle
