#include <algorithm>
#include <limits>

#include "domino/sft.hpp"

namespace domino {

Sft::Sft(int dimension, std::vector<std::string> alphabet, std::vector<Pattern> forbidden,
         std::vector<WindowPredicate> predicates)
    : dimension_(dimension),
      alphabet_(std::move(alphabet)),
      forbidden_(std::move(forbidden)),
      predicates_(std::move(predicates)) {
  if (dimension_ < 1 || static_cast<std::size_t>(dimension_) > kMaxDim)
    throw InputError("dimension must be between 1 and " + std::to_string(kMaxDim));
  if (alphabet_.size() > std::numeric_limits<std::uint16_t>::max())
    throw InputError("alphabet too large");
  for (auto& p : forbidden_) {
    if (p.empty()) throw InputError("forbidden patterns must be nonempty");
    for (const auto& [cell, color] : p) {
      if (color.id >= alphabet_.size()) throw InputError("forbidden pattern uses a colour outside the alphabet");
      for (std::size_t i = static_cast<std::size_t>(dimension_); i < kMaxDim; ++i)
        if (cell[i] != 0) throw InputError("forbidden pattern offset exceeds the dimension");
    }
    p = p.normalized();
  }
  for (auto& w : predicates_) {
    if (w.shape.empty()) throw InputError("predicate window must be nonempty");
    std::sort(w.shape.begin(), w.shape.end());
    const Cell origin = w.shape.front();
    for (auto& c : w.shape) c = c - origin;
  }
  compile();
}

void Sft::compile() {
  groups_.clear();
  for (std::size_t i = 0; i < forbidden_.size(); ++i) {
    const auto shape = forbidden_[i].support();
    auto it = std::find_if(groups_.begin(), groups_.end(),
                           [&](const ShapeGroup& g) { return !g.predicate && g.shape == shape; });
    if (it == groups_.end()) {
      long double space = 1;
      for (std::size_t j = 0; j < shape.size(); ++j) space *= static_cast<long double>(alphabet_.size());
      if (space > static_cast<long double>(std::numeric_limits<std::uint64_t>::max()))
        throw Unsupported("forbidden pattern too large to index");
      groups_.push_back(ShapeGroup{shape, {}, std::nullopt});
      it = std::prev(groups_.end());
    }
    std::uint64_t code = 0;
    for (const auto& e : forbidden_[i]) code = code * alphabet_.size() + e.second.id;
    it->tuples.emplace(code, i);  // keeps the first index on duplicates
  }
  for (std::size_t i = 0; i < predicates_.size(); ++i)
    groups_.push_back(ShapeGroup{predicates_[i].shape, {}, i});
}

Color Sft::color(std::string_view name) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i)
    if (alphabet_[i] == name) return Color{static_cast<std::uint16_t>(i)};
  throw InputError("unknown colour '" + std::string(name) + "'");
}

const std::string& Sft::name(Color c) const {
  if (c.id >= alphabet_.size()) throw InputError("colour outside the alphabet");
  return alphabet_[c.id];
}

bool Sft::all_connected() const {
  for (const auto& p : forbidden_)
    if (!is_connected(p)) return false;
  for (const auto& w : predicates_) {
    std::vector<Pattern::Entry> entries;
    for (const auto& c : w.shape) entries.emplace_back(c, Color{});
    if (!is_connected(Pattern(entries))) return false;
  }
  return true;
}

std::int64_t Sft::max_diameter() const {
  std::int64_t d = 0;
  for (const auto& p : forbidden_) d = std::max(d, diameter(p));
  for (const auto& w : predicates_)
    for (const auto& a : w.shape)
      for (const auto& b : w.shape) d = std::max(d, l1_distance(a, b));
  return d;
}

namespace {

void check_alphabet(const Pattern& pattern, const Sft& sft) {
  for (const auto& e : pattern)
    if (e.second.id >= sft.alphabet_size()) throw InputError("pattern uses a colour outside the alphabet");
}

}  // namespace

std::optional<Occurrence> find_forbidden(const Pattern& pattern, const Sft& sft) {
  check_alphabet(pattern, sft);
  const auto support = pattern.support();  // sorted, so offsets come out lexicographically
  for (std::size_t i = 0; i < sft.forbidden().size(); ++i) {
    // The forbidden pattern's anchor (its smallest cell) sits at the origin, so every
    // occurrence maps the origin onto some support cell.
    for (const Cell& s : support)
      if (pattern.matches_at(sft.forbidden()[i], s)) return Occurrence{i, s};
  }
  std::vector<Color> buf;
  for (std::size_t w = 0; w < sft.predicates().size(); ++w) {
    const auto& pred = sft.predicates()[w];
    buf.resize(pred.shape.size());
    for (const Cell& s : support) {
      bool full = true;
      for (std::size_t j = 0; j < pred.shape.size() && full; ++j) {
        auto c = pattern.at(s + pred.shape[j]);
        if (!c) full = false;
        else buf[j] = *c;
      }
      if (full && pred.forbidden(std::span<const Color>(buf)))
        return Occurrence{sft.forbidden().size() + w, s};
    }
  }
  return std::nullopt;
}

bool is_final(const Pattern& pattern, const Sft& sft) { return find_forbidden(pattern, sft).has_value(); }

bool occurs_through(const Pattern& pattern, const Sft& sft, const Cell& cell) {
  return sft.occurs_through(
      [&](const Cell& c) -> int {
        auto col = pattern.at(c);
        return col ? static_cast<int>(col->id) : -1;
      },
      cell);
}

}  // namespace domino
