#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "domino/core.hpp"
#include "domino/sft.hpp"
#include "domino/words.hpp"

namespace domino {

/// Game on the box [-n, n]^d with patterns packed into integers: digit j of the code
/// (base |alphabet| + 1) is 0 for an empty cell j and c + 1 for colour c.
class RegionGame {
 public:
  static constexpr std::uint32_t kInfinity = std::numeric_limits<std::uint32_t>::max();

  /// Throws Unsupported when the turn word is not finite-state or the code space overflows.
  RegionGame(const Sft& sft, int radius, Variant variant, const TurnWord& turns);

  const Sft& sft() const { return *sft_; }
  int radius() const { return radius_; }
  Variant variant() const { return variant_; }
  const TurnWord& turns() const { return turns_; }

  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t cell_count() const { return cells_.size(); }
  std::uint64_t base() const { return base_; }
  std::uint64_t code_count() const { return code_count_; }
  std::size_t residue_count() const { return residues_; }
  std::size_t next_residue(std::size_t r) const { return next_[r]; }
  Player player(std::size_t r) const { return players_[r]; }

  int digit(std::uint64_t code, std::size_t cell) const {
    return static_cast<int>((code / pow_[cell]) % base_);
  }
  std::uint64_t with_tile(std::uint64_t code, std::size_t cell, Color c) const {
    return code + pow_[cell] * (static_cast<std::uint64_t>(c.id) + 1);
  }
  std::size_t cell_index(const Cell& c) const;  // throws InputError outside the box

  std::uint64_t encode(const Pattern& p) const;
  Pattern decode(std::uint64_t code) const;

  bool is_final(std::uint64_t code) const;
  bool is_full(std::uint64_t code) const;
  int tile_count(std::uint64_t code) const;

  /// Legal moves in canonical order: Pass (when allowed), then empty cells x colours.
  std::vector<Move> moves(std::uint64_t code) const;

 private:
  struct Placement {
    std::vector<std::uint32_t> cells;
    std::vector<std::uint16_t> colors;  // empty for predicate windows
    const WindowPredicate* predicate = nullptr;
  };

  const Sft* sft_;
  int radius_;
  Variant variant_;
  TurnWord turns_;
  std::vector<Cell> cells_;
  std::vector<std::uint64_t> pow_;
  std::uint64_t base_ = 0;
  std::uint64_t code_count_ = 0;
  std::size_t residues_ = 0;
  std::vector<std::size_t> next_;
  std::vector<Player> players_;
  std::vector<Placement> placements_;
};

}  // namespace domino
