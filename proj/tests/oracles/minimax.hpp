#pragma once
// Depth-bounded minimax on a box: A wins within d plies iff some A move (every B move)
// leads to a position won within d-1. The value is the least such d. Terminal rules:
// final position = A win; a full board that is not final = B win.
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "domino/core.hpp"
#include "domino/words.hpp"
#include "oracles/naive_forbidden.hpp"

namespace oracle {

class BoxMinimax {
 public:
  BoxMinimax(const domino::Sft& sft, int radius, domino::Variant variant, domino::TurnWord turns, bool memo = true)
      : sft_(sft), cells_(domino::Region::box(sft.dimension(), radius).cells()), variant_(variant),
        turns_(std::move(turns)), memo_(memo) {}

  bool wins_within(const std::vector<int>& board, std::uint64_t turn, int d) {
    const auto key = std::make_tuple(board, turns_.state_of(turn), d);
    if (memo_) {
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    const bool r = compute(board, turn, d);
    if (memo_) cache_[key] = r;
    return r;
  }

  std::optional<int> value(std::uint64_t start, int max_depth) {
    std::vector<int> empty(cells_.size(), -1);
    for (int d = 0; d <= max_depth; ++d)
      if (wins_within(empty, start, d)) return d;
    return std::nullopt;
  }

  /// Enough plies to cover every attractor rank: positions times turn states.
  int depth_bound() const {
    std::size_t codes = 1;
    for (std::size_t i = 0; i < cells_.size(); ++i) codes *= sft_.alphabet_size() + 1;
    return static_cast<int>(codes * turns_.state_count()) + 1;
  }

 private:
  domino::Pattern to_pattern(const std::vector<int>& board) const {
    std::vector<domino::Pattern::Entry> e;
    for (std::size_t i = 0; i < board.size(); ++i)
      if (board[i] >= 0) e.emplace_back(cells_[i], domino::Color{static_cast<std::uint16_t>(board[i])});
    return domino::Pattern(std::move(e));
  }

  bool compute(const std::vector<int>& board, std::uint64_t turn, int d) {
    if (naive_final(to_pattern(board), sft_)) return true;
    if (d == 0) return false;
    bool full = true;
    for (int v : board) full = full && v >= 0;
    if (full) return false;
    const bool a = turns_.letter(turn) == domino::Player::A;
    auto child = [&](const std::vector<int>& b) { return wins_within(b, turn + 1, d - 1); };
    if (variant_ == domino::Variant::PassAllowed) {
      if (child(board) == a) return a;
    }
    auto b = board;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] >= 0) continue;
      for (std::size_t c = 0; c < sft_.alphabet_size(); ++c) {
        b[i] = static_cast<int>(c);
        const bool w = child(b);
        b[i] = -1;
        if (w == a) return a;
      }
    }
    return !a;
  }

  domino::Sft sft_;
  std::vector<domino::Cell> cells_;
  domino::Variant variant_;
  domino::TurnWord turns_;
  bool memo_;
  std::map<std::tuple<std::vector<int>, std::size_t, int>, bool> cache_;
};

}  // namespace oracle
