#include <algorithm>

#include "domino/region_game.hpp"

namespace domino {

RegionGame::RegionGame(const Sft& sft, int radius, Variant variant, const TurnWord& turns)
    : sft_(&sft), radius_(radius), variant_(variant), turns_(turns) {
  if (radius < 0) throw InputError("region radius must be non-negative");
  if (sft.alphabet_size() == 0) throw InputError("alphabet is empty");
  if (!turns.finite_state()) throw Unsupported("turn word '" + turns.to_string() + "' is not finite-state");
  cells_ = Region::box(sft.dimension(), radius).cells();
  base_ = sft.alphabet_size() + 1;
  pow_.resize(cells_.size() + 1);
  pow_[0] = 1;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (pow_[i] > std::numeric_limits<std::uint64_t>::max() / base_)
      throw Unsupported("region too large for packed pattern codes");
    pow_[i + 1] = pow_[i] * base_;
  }
  code_count_ = pow_[cells_.size()];

  residues_ = turns_.state_count();
  next_.resize(residues_);
  players_.resize(residues_);
  for (std::size_t r = 0; r < residues_; ++r) {
    next_[r] = turns_.next_state(r);
    players_[r] = turns_.player_in_state(r);
  }

  const Region box = Region::box(sft.dimension(), radius);
  for (const auto& f : sft.forbidden()) {
    for (const Cell& anchor : cells_) {
      Placement pl;
      bool inside = true;
      for (const auto& [cell, color] : f) {
        const Cell at = anchor + cell;
        if (!box.contains(at)) {
          inside = false;
          break;
        }
        pl.cells.push_back(static_cast<std::uint32_t>(cell_index(at)));
        pl.colors.push_back(color.id);
      }
      if (inside) placements_.push_back(std::move(pl));
    }
  }
  for (const auto& w : sft.predicates()) {
    for (const Cell& anchor : cells_) {
      Placement pl;
      pl.predicate = &w;
      bool inside = true;
      for (const Cell& cell : w.shape) {
        const Cell at = anchor + cell;
        if (!box.contains(at)) {
          inside = false;
          break;
        }
        pl.cells.push_back(static_cast<std::uint32_t>(cell_index(at)));
      }
      if (inside) placements_.push_back(std::move(pl));
    }
  }
}

std::size_t RegionGame::cell_index(const Cell& c) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
  if (it == cells_.end() || *it != c) throw InputError("cell outside the region");
  return static_cast<std::size_t>(it - cells_.begin());
}

std::uint64_t RegionGame::encode(const Pattern& p) const {
  std::uint64_t code = 0;
  for (const auto& [cell, color] : p) {
    if (color.id >= sft_->alphabet_size()) throw InputError("colour outside the alphabet");
    code += pow_[cell_index(cell)] * (static_cast<std::uint64_t>(color.id) + 1);
  }
  return code;
}

Pattern RegionGame::decode(std::uint64_t code) const {
  std::vector<Pattern::Entry> entries;
  for (std::size_t j = 0; j < cells_.size(); ++j) {
    const int d = digit(code, j);
    if (d) entries.emplace_back(cells_[j], Color{static_cast<std::uint16_t>(d - 1)});
  }
  return Pattern(std::move(entries));
}

bool RegionGame::is_final(std::uint64_t code) const {
  thread_local std::vector<int> digits;
  thread_local std::vector<Color> buf;
  digits.resize(cells_.size());
  for (std::size_t j = 0; j < cells_.size(); ++j) {
    digits[j] = static_cast<int>(code % base_);
    code /= base_;
  }
  for (const auto& pl : placements_) {
    if (pl.predicate) {
      buf.resize(pl.cells.size());
      bool full = true;
      for (std::size_t k = 0; k < pl.cells.size(); ++k) {
        const int d = digits[pl.cells[k]];
        if (!d) {
          full = false;
          break;
        }
        buf[k] = Color{static_cast<std::uint16_t>(d - 1)};
      }
      if (full && pl.predicate->forbidden(std::span<const Color>(buf))) return true;
    } else {
      bool match = true;
      for (std::size_t k = 0; k < pl.cells.size(); ++k) {
        if (digits[pl.cells[k]] != pl.colors[k] + 1) {
          match = false;
          break;
        }
      }
      if (match) return true;
    }
  }
  return false;
}

int RegionGame::tile_count(std::uint64_t code) const {
  int n = 0;
  for (std::size_t j = 0; j < cells_.size(); ++j) {
    if (code % base_) ++n;
    code /= base_;
  }
  return n;
}

bool RegionGame::is_full(std::uint64_t code) const {
  return tile_count(code) == static_cast<int>(cells_.size());
}

std::vector<Move> RegionGame::moves(std::uint64_t code) const {
  std::vector<Move> out;
  if (variant_ == Variant::PassAllowed) out.push_back(Move::pass());
  for (std::size_t j = 0; j < cells_.size(); ++j) {
    if (digit(code, j)) continue;
    for (std::size_t a = 0; a < sft_->alphabet_size(); ++a)
      out.push_back(Move::place(cells_[j], Color{static_cast<std::uint16_t>(a)}));
  }
  return out;
}

}  // namespace domino
