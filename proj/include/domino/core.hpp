#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace domino {

/// Highest grid dimension supported. Coordinates past the game's dimension stay 0.
inline constexpr std::size_t kMaxDim = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IllegalMove : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an invariant the construction guarantees turns out false.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

struct Cell {
  std::array<std::int32_t, kMaxDim> x{};

  constexpr Cell() = default;
  constexpr explicit Cell(std::int32_t a, std::int32_t b = 0, std::int32_t c = 0) : x{a, b, c} {}

  constexpr std::int32_t operator[](std::size_t i) const { return x[i]; }
  constexpr std::int32_t& operator[](std::size_t i) { return x[i]; }

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
  friend constexpr bool operator==(const Cell&, const Cell&) = default;

  friend constexpr Cell operator+(Cell a, const Cell& b) {
    for (std::size_t i = 0; i < kMaxDim; ++i) a.x[i] += b.x[i];
    return a;
  }
  friend constexpr Cell operator-(Cell a, const Cell& b) {
    for (std::size_t i = 0; i < kMaxDim; ++i) a.x[i] -= b.x[i];
    return a;
  }
};

constexpr std::int64_t l1_distance(const Cell& a, const Cell& b) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < kMaxDim; ++i) {
    const std::int64_t v = std::int64_t{a.x[i]} - b.x[i];
    d += v < 0 ? -v : v;
  }
  return d;
}

std::string to_string(const Cell& c, int dimension);

struct CellHash {
  std::size_t operator()(const Cell& c) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto v : c.x) h = (h ^ static_cast<std::uint32_t>(v)) * 0x100000001b3ULL;
    return static_cast<std::size_t>(h);
  }
};

/// Index into an alphabet's name table.
struct Color {
  std::uint16_t id = 0;
  friend constexpr auto operator<=>(const Color&, const Color&) = default;
  friend constexpr bool operator==(const Color&, const Color&) = default;
};

enum class Player : std::uint8_t { A, B };

constexpr Player opponent(Player p) { return p == Player::A ? Player::B : Player::A; }
constexpr char to_char(Player p) { return p == Player::A ? 'A' : 'B'; }

/// Pass-allowed game (Γ) or the no-pass variant (Γ*).
enum class Variant : std::uint8_t { PassAllowed, NoPass };

std::string to_string(Variant v);

struct Move {
  enum class Kind : std::uint8_t { Pass, Place };
  Kind kind = Kind::Pass;
  Cell cell{};
  Color color{};

  static constexpr Move pass() { return Move{}; }
  static constexpr Move place(Cell c, Color col) { return Move{Kind::Place, c, col}; }
  constexpr bool is_pass() const { return kind == Kind::Pass; }

  friend constexpr auto operator<=>(const Move&, const Move&) = default;
  friend constexpr bool operator==(const Move&, const Move&) = default;
};

/// Finite partial colouring of the grid, kept as a sorted cell -> colour map.
class Pattern {
 public:
  using Entry = std::pair<Cell, Color>;

  Pattern() = default;
  /// Throws InputError if a cell is listed twice.
  explicit Pattern(std::vector<Entry> entries);

  std::optional<Color> at(const Cell& c) const;
  bool contains(const Cell& c) const { return at(c).has_value(); }

  /// Throws IllegalMove if the cell is already coloured.
  void insert(const Cell& c, Color color);
  void erase(const Cell& c);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  std::vector<Cell> support() const;
  Pattern translated(const Cell& by) const;
  /// Translate so that the lexicographically smallest cell sits at the origin.
  Pattern normalized() const;

  /// True when every tile of `sub`, shifted by `offset`, is present with the same colour.
  bool matches_at(const Pattern& sub, const Cell& offset) const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern& a, const Pattern& b) { return a.entries_ <=> b.entries_; }

 private:
  std::vector<Entry> entries_;
};

/// 4-connectivity (L1 distance one) of the support. The empty pattern counts as connected.
bool is_connected(const Pattern& p);

/// Largest L1 distance between two support cells.
std::int64_t diameter(const Pattern& p);

/// Playable area: either all of Z^d or the box [-n, n]^d.
struct Region {
  int dimension = 1;
  std::optional<int> radius;  // empty = whole grid

  static Region whole(int dimension) { return Region{dimension, std::nullopt}; }
  static Region box(int dimension, int n) { return Region{dimension, n}; }

  bool contains(const Cell& c) const;
  /// Cells of a box region in lexicographic order; throws Unsupported for the whole grid.
  std::vector<Cell> cells() const;
};

/// All cells within L1 distance `radius` of `center` in the first `dimension` axes, lexicographic.
std::vector<Cell> l1_ball(const Cell& center, int radius, int dimension);

}  // namespace domino
