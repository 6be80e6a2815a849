#include <algorithm>
#include <functional>
#include <limits>
#include <memory>

#include "domino/reductions.hpp"

namespace domino {

using nlohmann::json;

namespace {

/// Cells 0..len-1 of a word along the first axis.
std::vector<Cell> line_shape(int len) {
  std::vector<Cell> out;
  for (int j = 0; j < len; ++j) out.emplace_back(j);
  return out;
}

/// Length of the span of a normalised 1D pattern.
int span_length(const Pattern& p) {
  int hi = 0;
  for (const auto& e : p) hi = std::max(hi, e.first[0]);
  return hi + 1;
}

int base_window_length(const Sft& base) {
  int len = 1;
  for (const auto& p : base.forbidden()) len = std::max(len, span_length(p));
  for (const auto& w : base.predicates())
    for (const auto& c : w.shape) len = std::max(len, c[0] + 1);
  return len;
}

/// True when the word contains a forbidden pattern of the 1D SFT.
bool word_inadmissible(const Sft& sft, std::span<const Color> word) {
  auto lookup = [&](const Cell& c) -> int {
    if (c[0] < 0 || c[0] >= static_cast<std::int32_t>(word.size()) || c[1] != 0 || c[2] != 0) return -1;
    return word[static_cast<std::size_t>(c[0])].id;
  };
  for (std::size_t i = 0; i < word.size(); ++i)
    if (sft.occurs_through(lookup, Cell(static_cast<std::int32_t>(i)))) return true;
  return false;
}

/// Does every choice of one colour per cell from `sets` give an inadmissible base word?
/// An empty set anywhere counts as no admissible choice.
bool all_choices_inadmissible(const Sft& base, const std::vector<ColorSet>& sets) {
  for (ColorSet s : sets)
    if (!s) return true;
  std::vector<Color> word(sets.size());
  // Depth-first over choices; a prefix that is already inadmissible closes its subtree.
  std::function<bool(std::size_t)> rec = [&](std::size_t j) -> bool {
    if (j == sets.size()) return word_inadmissible(base, word);
    for (std::size_t c = 0; c < base.alphabet_size(); ++c) {
      if (!(sets[j] >> c & 1)) continue;
      word[j] = Color{static_cast<std::uint16_t>(c)};
      if (word_inadmissible(base, std::span<const Color>(word.data(), j + 1))) continue;
      if (!rec(j + 1)) return false;
    }
    return true;
  };
  return rec(0);
}

void require_line(const Sft& base) {
  if (base.dimension() != 1) throw Unsupported("reductions take a one-dimensional base SFT");
  if (base.alphabet_size() == 0) throw InputError("base alphabet is empty");
  if (base.alphabet_size() > kMaxBaseColors) throw Unsupported("base alphabet too large for colour sets");
}

}  // namespace

// --- arrow -----------------------------------------------------------------

std::vector<std::string> ArrowLayout::names(const std::vector<std::string>& base_names) const {
  std::vector<std::string> out(size());
  for (std::size_t a = 0; a < base_size; ++a)
    for (std::size_t b = 0; b < base_size; ++b)
      for (Direction d : {Direction::Left, Direction::Right}) {
        const Color c = arrow(Color{static_cast<std::uint16_t>(a)}, Color{static_cast<std::uint16_t>(b)}, d);
        out[c.id] = base_names[a] + ":" + base_names[b] + (d == Direction::Left ? ":<" : ":>");
      }
  out[black().id] = "#";
  return out;
}

Interpretation interpret_arrow(const Pattern& pattern, const ArrowLayout& layout) {
  auto lookup = [&](const Cell& c) -> int {
    auto col = pattern.at(c);
    return col ? static_cast<int>(col->id) : -1;
  };
  Interpretation out;
  for (const auto& e : pattern)
    for (int d = -1; d <= 1; ++d) {
      const Cell c = e.first + Cell(d);
      if (!out.sets.count(c)) out.sets[c] = interpret_arrow_at(layout, lookup, c);
    }
  return out;
}

int arrow_window_radius(const Sft& base) {
  const int len = base_window_length(base);
  return std::max(1, len / 2);  // 2n+1 >= len
}

bool arrow_window_forbidden(const Sft& base, const ArrowLayout& layout, int n, std::span<const Color> window) {
  const auto len = static_cast<std::size_t>(2 * n + 3);
  if (window.size() != len) throw InputError("arrow window has the wrong length");
  auto lookup = [&](const Cell& c) -> int {
    if (c[0] < 0 || c[0] >= static_cast<std::int32_t>(len)) return -1;
    return window[static_cast<std::size_t>(c[0])].id;
  };
  std::vector<ColorSet> sets;
  for (int j = 1; j <= 2 * n + 1; ++j) sets.push_back(interpret_arrow_at(layout, lookup, Cell(j)));
  return all_choices_inadmissible(base, sets);
}

Sft build_arrow_game(const Sft& base, int target_dimension) {
  require_line(base);
  if (target_dimension < 1 || static_cast<std::size_t>(target_dimension) > kMaxDim)
    throw InputError("target dimension out of range");
  const ArrowLayout layout{base.alphabet_size()};
  if (layout.size() > std::numeric_limits<std::uint16_t>::max()) throw Unsupported("derived alphabet too large");
  const int n = arrow_window_radius(base);
  const int len = 2 * n + 3;

  WindowPredicate pred;
  pred.shape = line_shape(len);
  pred.descriptor = json{{"construction", "arrow"}, {"base", sft_to_json(base)}, {"dimension", target_dimension}};

  // Tabulate when the window space is small; the table is shared by every copy.
  long double space = 1;
  for (int j = 0; j < len; ++j) space *= static_cast<long double>(layout.size());
  if (space <= static_cast<long double>(1 << 22)) {
    auto table = std::make_shared<std::vector<std::uint8_t>>(static_cast<std::size_t>(space));
    std::vector<Color> w(static_cast<std::size_t>(len));
    for (std::size_t code = 0; code < table->size(); ++code) {
      std::size_t x = code;
      for (auto& c : w) {
        c = Color{static_cast<std::uint16_t>(x % layout.size())};
        x /= layout.size();
      }
      (*table)[code] = arrow_window_forbidden(base, layout, n, w);
    }
    const std::size_t m = layout.size();
    pred.forbidden = [table, m](std::span<const Color> w) {
      std::size_t code = 0;
      for (std::size_t j = w.size(); j-- > 0;) code = code * m + w[j].id;
      return (*table)[code] != 0;
    };
  } else {
    auto base_copy = std::make_shared<const Sft>(base);
    pred.forbidden = [base_copy, layout, n](std::span<const Color> w) {
      return arrow_window_forbidden(*base_copy, layout, n, w);
    };
  }
  return Sft(target_dimension, layout.names(base.alphabet()), {}, {std::move(pred)});
}

// --- voting ----------------------------------------------------------------

std::size_t VoteLayout::size() const {
  std::uint64_t s = 1;
  for (int k = 0; k < width; ++k) {
    s *= base_size;
    if (s >= std::numeric_limits<std::uint16_t>::max()) throw Unsupported("voting alphabet exceeds the colour-id range");
  }
  return static_cast<std::size_t>(s + 1);
}

Color VoteLayout::component(Color c, int k) const {
  std::size_t v = c.id;
  for (int j = 0; j < k; ++j) v /= base_size;
  return Color{static_cast<std::uint16_t>(v % base_size)};
}

Color VoteLayout::tuple(const std::vector<Color>& components) const {
  if (components.size() != static_cast<std::size_t>(width)) throw InputError("tuple width differs from the rule");
  std::size_t v = 0;
  for (std::size_t k = components.size(); k-- > 0;) v = v * base_size + components[k].id;
  return Color{static_cast<std::uint16_t>(v)};
}

namespace {

template <class Lookup>
ColorSet vote_at(const VoteLayout& layout, const VoteRule& rule, const Lookup& lookup, const Cell& i) {
  std::vector<int> votes(layout.base_size, 0);
  const auto black = static_cast<int>(layout.black().id);
  int total = 0;
  for (int k = -rule.radius; k <= rule.radius; ++k) {
    const int v = lookup(i + Cell(k));
    if (v < 0 || v == black) continue;
    ++votes[layout.component(Color{static_cast<std::uint16_t>(v)}, k + rule.radius).id];
    ++total;
  }
  if (!total) return 0;
  ColorSet s = 0;
  if (rule.mode == VoteMode::Set) {
    for (std::size_t c = 0; c < votes.size(); ++c)
      if (votes[c] >= rule.threshold) s |= ColorSet{1} << c;
  } else {
    const auto best = std::max_element(votes.begin(), votes.end());  // first maximum = lowest id
    s = ColorSet{1} << (best - votes.begin());
  }
  return s;
}

}  // namespace

Interpretation interpret_vote(const Pattern& pattern, std::size_t base_size, const VoteRule& rule) {
  if (base_size == 0 || base_size > kMaxBaseColors) throw InputError("base alphabet size out of range");
  const VoteLayout layout{base_size, rule.width()};
  const auto black = layout.black();
  for (const auto& e : pattern)
    if (e.second.id > black.id) throw InputError("tile colour is not a tuple of width " + std::to_string(rule.width()));
  auto lookup = [&](const Cell& c) -> int {
    auto col = pattern.at(c);
    return col ? static_cast<int>(col->id) : -1;
  };
  Interpretation out;
  for (const auto& e : pattern)
    for (int d = -rule.radius; d <= rule.radius; ++d) {
      const Cell c = e.first + Cell(d);
      if (!out.sets.count(c)) out.sets[c] = vote_at(layout, rule, lookup, c);
    }
  return out;
}

Sft build_vote_game(const Sft& base, const VoteRule& rule, std::optional<int> inner_offset) {
  require_line(base);
  if (rule.radius < 0) throw InputError("vote radius must be non-negative");
  const VoteLayout layout{base.alphabet_size(), rule.width()};
  const int n = base_window_length(base);
  const int offset = inner_offset.value_or(rule.radius);
  if (offset < 0) throw InputError("inner offset must be non-negative");
  const int len = offset + n + rule.radius;

  std::vector<std::string> names(layout.size());
  for (std::size_t id = 0; id + 1 < names.size(); ++id) {
    std::string s;
    for (int k = 0; k < layout.width; ++k)
      s += base.alphabet()[layout.component(Color{static_cast<std::uint16_t>(id)}, k).id] + (k + 1 < layout.width ? "." : "");
    names[id] = s;
  }
  names.back() = "#";

  WindowPredicate pred;
  pred.shape = line_shape(len);
  pred.descriptor = json{{"construction", "vote"},
                         {"base", sft_to_json(base)},
                         {"radius", rule.radius},
                         {"threshold", rule.threshold},
                         {"mode", rule.mode == VoteMode::Set ? "set" : "majority"},
                         {"inner_offset", offset}};
  auto base_copy = std::make_shared<const Sft>(base);
  pred.forbidden = [base_copy, layout, rule, offset, n, len](std::span<const Color> w) {
    auto lookup = [&](const Cell& c) -> int {
      if (c[0] < 0 || c[0] >= len) return -1;
      return w[static_cast<std::size_t>(c[0])].id;
    };
    std::vector<ColorSet> sets;
    for (int j = offset; j < offset + n; ++j) sets.push_back(vote_at(layout, rule, lookup, Cell(j)));
    return all_choices_inadmissible(*base_copy, sets);
  };
  return Sft(1, std::move(names), {}, {std::move(pred)});
}

// --- marking ---------------------------------------------------------------

Sft marking_game(Marking which) {
  const int len = which == Marking::F2 ? 9 : 15;
  const int need = which == Marking::F2 ? 5 : 8;
  std::vector<Pattern> forbidden;
  for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
    if (std::popcount(bits) < need) continue;
    std::vector<Pattern::Entry> e;
    for (int j = 0; j < len; ++j) e.emplace_back(Cell(j), Color{static_cast<std::uint16_t>(bits >> j & 1 ? 0 : 1)});
    forbidden.emplace_back(std::move(e));
  }
  return Sft(1, {"a", "b"}, std::move(forbidden));
}

// --- 1D emptiness ----------------------------------------------------------

namespace {

/// De Bruijn graph on admissible words of length k = max(window - 1, 1).
struct DeBruijn {
  std::size_t k = 1;
  std::size_t m = 0;
  std::vector<std::uint64_t> nodes;                // admissible word codes
  std::vector<std::vector<std::size_t>> edges;     // indices into nodes
  std::vector<std::vector<Color>> words;
};

std::vector<Color> decode_word(std::uint64_t code, std::size_t k, std::size_t m) {
  std::vector<Color> w(k);
  for (std::size_t j = k; j-- > 0;) {
    w[j] = Color{static_cast<std::uint16_t>(code % m)};
    code /= m;
  }
  return w;
}

DeBruijn de_bruijn(const Sft& sft) {
  if (sft.dimension() != 1) throw Unsupported("one-dimensional emptiness needs a 1D SFT");
  DeBruijn g;
  g.m = sft.alphabet_size();
  g.k = static_cast<std::size_t>(std::max(base_window_length(sft) - 1, 1));
  long double space = 1;
  for (std::size_t j = 0; j < g.k; ++j) space *= static_cast<long double>(g.m);
  if (space > static_cast<long double>(1 << 22)) throw Unsupported("de Bruijn graph too large");
  const auto total = static_cast<std::uint64_t>(space);
  std::vector<std::int64_t> index(total, -1);
  for (std::uint64_t code = 0; code < total; ++code) {
    auto w = decode_word(code, g.k, g.m);
    if (word_inadmissible(sft, w)) continue;
    index[code] = static_cast<std::int64_t>(g.nodes.size());
    g.nodes.push_back(code);
    g.words.push_back(std::move(w));
  }
  g.edges.resize(g.nodes.size());
  std::uint64_t high = total / g.m;  // weight of the leading letter
  for (std::size_t u = 0; u < g.nodes.size(); ++u) {
    const std::uint64_t tail = g.nodes[u] % high;
    std::vector<Color> w = g.words[u];
    w.push_back(Color{});
    for (std::size_t c = 0; c < g.m; ++c) {
      const std::uint64_t v = tail * g.m + c;
      if (index[v] < 0) continue;
      w.back() = Color{static_cast<std::uint16_t>(c)};
      if (word_inadmissible(sft, w)) continue;
      g.edges[u].push_back(static_cast<std::size_t>(index[v]));
    }
  }
  return g;
}

/// Topological order of the graph, or none if it has a cycle.
std::optional<std::vector<std::size_t>> topological(const DeBruijn& g) {
  std::vector<std::size_t> indeg(g.nodes.size(), 0);
  for (const auto& out : g.edges)
    for (auto v : out) ++indeg[v];
  std::vector<std::size_t> order, stack;
  for (std::size_t u = 0; u < indeg.size(); ++u)
    if (!indeg[u]) stack.push_back(u);
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (auto v : g.edges[u])
      if (!--indeg[v]) stack.push_back(v);
  }
  if (order.size() != g.nodes.size()) return std::nullopt;
  return order;
}

}  // namespace

bool domino_1d_empty(const Sft& sft) {
  if (sft.alphabet_size() == 0) return true;
  return topological(de_bruijn(sft)).has_value();
}

std::optional<std::int64_t> longest_admissible_length(const Sft& sft) {
  if (sft.alphabet_size() == 0) return 0;
  const auto g = de_bruijn(sft);
  const auto order = topological(g);
  if (!order) return std::nullopt;
  // Admissible words shorter than k are not represented by nodes; check them directly.
  std::int64_t best = 0;
  for (std::size_t len = 1; len < g.k; ++len) {
    long double space = 1;
    for (std::size_t j = 0; j < len; ++j) space *= static_cast<long double>(g.m);
    for (std::uint64_t code = 0; code < static_cast<std::uint64_t>(space); ++code)
      if (!word_inadmissible(sft, decode_word(code, len, g.m))) {
        best = static_cast<std::int64_t>(len);
        break;
      }
  }
  if (g.nodes.empty()) return best;
  std::vector<std::int64_t> longest(g.nodes.size(), 0);  // edges on the longest path ending here
  for (auto u : *order)
    for (auto v : g.edges[u]) longest[v] = std::max(longest[v], longest[u] + 1);
  return static_cast<std::int64_t>(g.k) + *std::max_element(longest.begin(), longest.end());
}

std::optional<std::vector<Color>> periodic_point(const Sft& sft) {
  if (sft.alphabet_size() == 0) return std::nullopt;
  const auto g = de_bruijn(sft);
  // Iterative DFS; the first back edge closes a cycle.
  enum : std::uint8_t { White, Grey, Black };
  std::vector<std::uint8_t> state(g.nodes.size(), White);
  std::vector<std::size_t> parent(g.nodes.size());
  for (std::size_t root = 0; root < g.nodes.size(); ++root) {
    if (state[root] != White) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    state[root] = Grey;
    while (!stack.empty()) {
      auto& [u, i] = stack.back();
      if (i == g.edges[u].size()) {
        state[u] = Black;
        stack.pop_back();
        continue;
      }
      const auto v = g.edges[u][i++];
      if (state[v] == Grey) {
        // Cycle v -> ... -> u -> v; read off the last letter of each node along it.
        std::vector<Color> period;
        for (std::size_t w = u;; w = parent[w]) {
          period.push_back(g.words[w].back());
          if (w == v) break;
        }
        std::reverse(period.begin(), period.end());
        return period;
      }
      if (state[v] == White) {
        state[v] = Grey;
        parent[v] = u;
        stack.emplace_back(v, 0);
      }
    }
  }
  return std::nullopt;
}

// --- file format -----------------------------------------------------------

void register_reduction_factories() {
  register_predicate_factory("arrow", [](const json& d) {
    try {
      return build_arrow_game(sft_from_json(d.at("base")), d.value("dimension", 1));
    } catch (const json::exception& e) {
      throw InputError(std::string("arrow predicate: ") + e.what());
    }
  });
  register_predicate_factory("vote", [](const json& d) {
    try {
      VoteRule rule{d.at("radius").get<int>(), d.value("threshold", 0),
                    d.value("mode", std::string("set")) == "majority" ? VoteMode::Majority : VoteMode::Set};
      return build_vote_game(sft_from_json(d.at("base")), rule, d.value("inner_offset", rule.radius));
    } catch (const json::exception& e) {
      throw InputError(std::string("vote predicate: ") + e.what());
    }
  });
}

}  // namespace domino
