#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "domino/core.hpp"
#include "domino/game.hpp"

namespace domino {

std::string to_string(const Cell& c, int dimension) {
  std::ostringstream os;
  for (int i = 0; i < dimension; ++i) {
    if (i) os << ' ';
    os << c[static_cast<std::size_t>(i)];
  }
  return os.str();
}

std::string to_string(Variant v) { return v == Variant::PassAllowed ? "pass" : "no-pass"; }

Pattern::Pattern(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i - 1].first == entries_[i].first) throw InputError("pattern lists a cell twice");
}

std::optional<Color> Pattern::at(const Cell& c) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                             [](const Entry& e, const Cell& key) { return e.first < key; });
  if (it == entries_.end() || it->first != c) return std::nullopt;
  return it->second;
}

void Pattern::insert(const Cell& c, Color color) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                             [](const Entry& e, const Cell& key) { return e.first < key; });
  if (it != entries_.end() && it->first == c) throw IllegalMove("cell already coloured");
  entries_.insert(it, Entry{c, color});
}

void Pattern::erase(const Cell& c) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                             [](const Entry& e, const Cell& key) { return e.first < key; });
  if (it != entries_.end() && it->first == c) entries_.erase(it);
}

std::vector<Cell> Pattern::support() const {
  std::vector<Cell> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.first);
  return out;
}

Pattern Pattern::translated(const Cell& by) const {
  Pattern p;
  p.entries_.reserve(entries_.size());
  for (const auto& e : entries_) p.entries_.emplace_back(e.first + by, e.second);
  return p;  // translation preserves lexicographic order
}

Pattern Pattern::normalized() const {
  if (entries_.empty()) return *this;
  return translated(Cell{} - entries_.front().first);
}

bool Pattern::matches_at(const Pattern& sub, const Cell& offset) const {
  for (const auto& [cell, color] : sub) {
    auto c = at(cell + offset);
    if (!c || *c != color) return false;
  }
  return true;
}

bool is_connected(const Pattern& p) {
  if (p.size() <= 1) return true;
  const auto cells = p.support();
  std::vector<bool> seen(cells.size(), false);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    const std::size_t i = todo.front();
    todo.pop();
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (!seen[j] && l1_distance(cells[i], cells[j]) == 1) {
        seen[j] = true;
        ++reached;
        todo.push(j);
      }
    }
  }
  return reached == cells.size();
}

std::int64_t diameter(const Pattern& p) {
  std::int64_t d = 0;
  for (const auto& a : p)
    for (const auto& b : p) d = std::max(d, l1_distance(a.first, b.first));
  return d;
}

bool Region::contains(const Cell& c) const {
  for (std::size_t i = static_cast<std::size_t>(dimension); i < kMaxDim; ++i)
    if (c[i] != 0) return false;
  if (!radius) return true;
  for (int i = 0; i < dimension; ++i) {
    const auto v = c[static_cast<std::size_t>(i)];
    if (v < -*radius || v > *radius) return false;
  }
  return true;
}

std::vector<Cell> Region::cells() const {
  if (!radius) throw Unsupported("the whole grid has no finite cell list");
  std::vector<Cell> out;
  const int n = *radius;
  Cell c;
  for (int i = 0; i < dimension; ++i) c[static_cast<std::size_t>(i)] = -n;
  while (true) {
    out.push_back(c);
    int axis = dimension - 1;
    while (axis >= 0 && c[static_cast<std::size_t>(axis)] == n) {
      c[static_cast<std::size_t>(axis)] = -n;
      --axis;
    }
    if (axis < 0) break;
    ++c[static_cast<std::size_t>(axis)];
  }
  return out;
}

std::vector<Cell> l1_ball(const Cell& center, int radius, int dimension) {
  std::vector<Cell> out;
  if (radius < 0) return out;
  Region box = Region::box(dimension, radius);
  for (const Cell& off : box.cells())
    if (l1_distance(off, Cell{}) <= radius) out.push_back(center + off);
  return out;
}

Position apply_move(const Position& position, const Move& move, Variant variant) {
  Position next = position;
  if (move.is_pass()) {
    if (variant == Variant::NoPass) throw IllegalMove("passing is not allowed in this variant");
  } else {
    if (!position.region.contains(move.cell)) throw IllegalMove("cell outside the playable region");
    next.pattern.insert(move.cell, move.color);
  }
  next.turn = position.turn.advanced();
  return next;
}

std::vector<Move> legal_moves(const Position& position, const std::vector<Cell>& candidates,
                              std::size_t alphabet_size, Variant variant) {
  std::vector<Move> out;
  if (variant == Variant::PassAllowed) out.push_back(Move::pass());
  std::vector<Cell> cells = candidates;
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  for (const Cell& c : cells) {
    if (position.pattern.contains(c) || !position.region.contains(c)) continue;
    for (std::size_t a = 0; a < alphabet_size; ++a)
      out.push_back(Move::place(c, Color{static_cast<std::uint16_t>(a)}));
  }
  return out;
}

bool is_final(const Position& position, const Sft& sft) { return is_final(position.pattern, sft); }

}  // namespace domino
