#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "domino/core.hpp"

namespace domino {

/// Forbidden set given by a membership test on fully coloured windows of a fixed shape.
/// Used for derived games whose forbidden sets are too large to materialise.
struct WindowPredicate {
  std::vector<Cell> shape;  // normalised: lexicographic minimum at the origin
  std::function<bool(std::span<const Color>)> forbidden;
  /// Construction name and parameters; written to SFT files so the game can be rebuilt.
  nlohmann::json descriptor;
};

struct Occurrence {
  std::size_t index = 0;  // forbidden-pattern index, or forbidden().size() + predicate index
  Cell offset{};
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Subshift of finite type: alphabet, dimension and forbidden patterns.
class Sft {
 public:
  /// Validates colours, rejects empty forbidden patterns, stores each one normalised.
  Sft(int dimension, std::vector<std::string> alphabet, std::vector<Pattern> forbidden,
      std::vector<WindowPredicate> predicates = {});

  int dimension() const { return dimension_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  std::size_t alphabet_size() const { return alphabet_.size(); }
  const std::vector<Pattern>& forbidden() const { return forbidden_; }
  const std::vector<WindowPredicate>& predicates() const { return predicates_; }

  /// Throws InputError for an unknown name.
  Color color(std::string_view name) const;
  const std::string& name(Color c) const;

  bool all_connected() const;
  /// Largest diameter over forbidden patterns and predicate windows.
  std::int64_t max_diameter() const;
  bool has_rules() const { return !forbidden_.empty() || !predicates_.empty(); }

  /// True iff some forbidden occurrence contains `cell`. `lookup(c)` returns the colour id at c or -1.
  template <class Lookup>
  bool occurs_through(const Lookup& lookup, const Cell& cell) const;

  /// Same test for the occurrence-by-anchor scan: any occurrence at all within `cells`.
  template <class Lookup>
  bool occurs_anywhere(const Lookup& lookup, const std::vector<Cell>& cells) const;

 private:
  struct ShapeGroup {
    std::vector<Cell> shape;
    std::unordered_map<std::uint64_t, std::size_t> tuples;  // colour tuple code -> pattern index
    std::optional<std::size_t> predicate;                  // predicate groups carry no tuples
  };
  void compile();

  int dimension_ = 1;
  std::vector<std::string> alphabet_;
  std::vector<Pattern> forbidden_;
  std::vector<WindowPredicate> predicates_;
  std::vector<ShapeGroup> groups_;
};

/// First occurrence in scan order: lowest forbidden index, then lexicographically smallest offset.
/// Predicate windows are scanned after the explicit patterns. Throws InputError on colours
/// outside the alphabet.
std::optional<Occurrence> find_forbidden(const Pattern& pattern, const Sft& sft);

bool is_final(const Pattern& pattern, const Sft& sft);

/// Incremental test used by the solvers: does the tile at `cell` complete a forbidden occurrence?
bool occurs_through(const Pattern& pattern, const Sft& sft, const Cell& cell);

// --- SFT text format -------------------------------------------------------

/// Builds the derived game named by a `predicate` descriptor; installed by module reductions.
using PredicateFactory = std::function<Sft(const nlohmann::json& descriptor)>;
void register_predicate_factory(std::string construction, PredicateFactory factory);

Sft sft_from_json(const nlohmann::json& doc);
nlohmann::json sft_to_json(const Sft& sft);
Sft parse_sft(std::string_view text);
Sft load_sft(const std::string& path);
std::string dump_sft(const Sft& sft);

// --- template definitions --------------------------------------------------

template <class Lookup>
bool Sft::occurs_through(const Lookup& lookup, const Cell& cell) const {
  std::vector<Color> buf;
  for (const auto& g : groups_) {
    const std::size_t len = g.shape.size();
    buf.resize(len);
    for (const Cell& anchor_cell : g.shape) {
      const Cell base = cell - anchor_cell;
      bool full = true;
      std::uint64_t code = 0;
      for (std::size_t j = 0; j < len; ++j) {
        const int c = lookup(base + g.shape[j]);
        if (c < 0) {
          full = false;
          break;
        }
        buf[j] = Color{static_cast<std::uint16_t>(c)};
        code = code * alphabet_.size() + static_cast<std::uint64_t>(c);
      }
      if (!full) continue;
      if (g.predicate) {
        if (predicates_[*g.predicate].forbidden(std::span<const Color>(buf))) return true;
      } else if (g.tuples.count(code)) {
        return true;
      }
    }
  }
  return false;
}

template <class Lookup>
bool Sft::occurs_anywhere(const Lookup& lookup, const std::vector<Cell>& cells) const {
  for (const Cell& c : cells)
    if (occurs_through(lookup, c)) return true;
  return false;
}

}  // namespace domino
