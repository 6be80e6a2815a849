#pragma once

#include <vector>

#include "domino/core.hpp"
#include "domino/sft.hpp"
#include "domino/words.hpp"

namespace domino {

/// Board state plus whose turn it is.
struct Position {
  Pattern pattern;
  TurnCursor turn;
  Region region = Region::whole(1);

  Player to_move() const { return turn.current(); }
};

/// Throws IllegalMove for a Pass in the no-pass variant, or a Place on a coloured or
/// out-of-region cell.
Position apply_move(const Position& position, const Move& move, Variant variant = Variant::PassAllowed);

/// Pass (when allowed) first, then every uncoloured candidate cell in lexicographic order,
/// each with every colour in id order.
std::vector<Move> legal_moves(const Position& position, const std::vector<Cell>& candidates,
                              std::size_t alphabet_size, Variant variant);

bool is_final(const Position& position, const Sft& sft);

}  // namespace domino
