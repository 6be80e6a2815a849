#include "domino/catalog.hpp"

#include <charconv>
#include <filesystem>

#include "domino/reductions.hpp"
#include "domino/strategies.hpp"

namespace domino {

namespace {

Color col(std::size_t i) { return Color{static_cast<std::uint16_t>(i)}; }

Pattern line(std::initializer_list<std::size_t> colors) {
  std::vector<Pattern::Entry> e;
  std::int32_t x = 0;
  for (auto c : colors) e.emplace_back(Cell(x++), col(c));
  return Pattern(std::move(e));
}

std::int64_t to_int(const std::string& key, const std::string& s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw InputError("parameter " + key + ": '" + s + "' is not an integer");
  return v;
}

std::vector<std::string> split(std::string_view s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto comma = s.find(',', pos);
    const auto piece = s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (!piece.empty()) out.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

Sft arrow_of(const Sft& base) {
  register_reduction_factories();
  return build_arrow_game(base);
}

const Sft& require_arrow(const StrategyContext& ctx, std::optional<Sft>& hold) {
  hold = arrow_base(ctx.sft);
  if (!hold) throw InputError("strategy needs an arrow-derived game");
  return *hold;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"single", "zugzwang", "xx", "aa", "f2", "f3", "palindrome:<n>", "1234", "arrow-empty", "arrow-11"};
}

Sft preset_sft(std::string_view name) {
  if (name == "single") return Sft(1, {"x", "o"}, {line({0})});
  if (name == "zugzwang") return Sft(1, {"0", "1"}, {line({0, 0, 0}), line({1, 1, 1})});
  if (name == "xx") return Sft(2, {"x", "o"}, {line({0, 0})});
  if (name == "aa") return Sft(1, {"a", "b"}, {line({0, 0})});
  if (name == "f2") return marking_game(Marking::F2);
  if (name == "f3") return marking_game(Marking::F3);
  if (name == "1234") return game_1234();
  if (name == "arrow-empty")
    return arrow_of(Sft(1, {"0", "1"}, {line({0, 0}), line({0, 1}), line({1, 0}), line({1, 1})}));
  if (name == "arrow-11") return arrow_of(Sft(1, {"0", "1"}, {line({1, 1})}));
  if (name.rfind("palindrome:", 0) == 0) {
    const std::string n(name.substr(11));
    return palindrome_game(static_cast<int>(to_int("palindrome", n)));
  }
  std::string known;
  for (const auto& p : preset_names()) known += (known.empty() ? "" : ", ") + p;
  throw InputError("unknown game '" + std::string(name) + "' (not a file; presets: " + known + ")");
}

Sft resolve_sft(const std::string& ref) {
  register_reduction_factories();
  std::error_code ec;
  if (std::filesystem::is_regular_file(ref, ec)) return load_sft(ref);
  return preset_sft(ref);
}

std::optional<Sft> arrow_base(const Sft& derived) {
  for (const auto& p : derived.predicates())
    if (p.descriptor.is_object() && p.descriptor.value("construction", "") == "arrow")
      return sft_from_json(p.descriptor.at("base"));
  return std::nullopt;
}

std::string StrategyContext::param(const std::string& key, const std::string& fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

std::int64_t StrategyContext::int_param(const std::string& key, std::int64_t fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : to_int(key, it->second);
}

std::vector<Color> parse_colors(const Sft& sft, std::string_view names) {
  std::vector<Color> out;
  for (const auto& n : split(names)) out.push_back(sft.color(n));
  return out;
}

std::vector<std::string> strategy_names() {
  return {"pass",     "random",      "table",       "reconstruct", "a-black", "b-parity",      "a-isolation",
          "b-four-rule", "a-palindrome", "b-1234", "a-greedy-1234"};
}

std::unique_ptr<Strategy> make_strategy(std::string_view name, const StrategyContext& ctx) {
  if (name == "pass") return pass_strategy();
  if (name == "random") {
    std::vector<Color> colors;
    if (ctx.params.count("colors")) colors = parse_colors(ctx.sft, ctx.params.at("colors"));
    return random_strategy(static_cast<std::uint64_t>(ctx.int_param("seed", 1)),
                           static_cast<int>(ctx.int_param("locality", 2)), colors);
  }
  if (name == "table") {
    const int n = static_cast<int>(ctx.int_param("n", 1));
    auto table = std::make_shared<const StrategyTable>(extract_strategy(ctx.sft, n, ctx.variant, ctx.turns, ctx.side));
    return table_strategy(std::move(table));
  }
  if (name == "reconstruct") {
    OmegaOptions o;
    o.variant = ctx.variant;
    o.start_index = ctx.start_index;
    o.node_budget = static_cast<std::uint64_t>(ctx.int_param("budget", 0));
    auto solver = std::make_shared<OmegaSolver>(ctx.sft, static_cast<int>(ctx.int_param("T", 3)), ctx.turns, o);
    return reconstruct_strategy(std::move(solver));
  }
  if (name == "a-black") {
    std::optional<Sft> base;
    const Sft& b = require_arrow(ctx, base);
    return a_black_strategy(ArrowLayout{b.alphabet_size()},
                            static_cast<int>(ctx.int_param("n", arrow_window_radius(b))));
  }
  if (name == "b-parity") {
    std::optional<Sft> base;
    const Sft& b = require_arrow(ctx, base);
    PeriodicConfiguration x;
    if (ctx.params.count("witness")) {
      x.period = parse_colors(b, ctx.params.at("witness"));
    } else {
      auto p = periodic_point(b);
      if (!p) throw InputError("base game has no admissible configuration; b-parity has no witness");
      x.period = *p;
    }
    x.shift = ctx.int_param("shift", 0);
    return b_parity_strategy(b, std::move(x));
  }
  if (name == "a-isolation") {
    IsolationConfig cfg;
    if (ctx.params.count("word")) {
      cfg.word = parse_colors(ctx.sft, ctx.params.at("word"));
    } else {
      if (ctx.sft.forbidden().empty()) throw InputError("a-isolation needs word= or an explicit forbidden pattern");
      const auto& f = ctx.sft.forbidden().front();
      std::int32_t x = 0;
      for (const auto& [cell, color] : f) {
        if (cell != Cell(x++)) throw InputError("first forbidden pattern is not a word along the first axis; pass word=");
        cfg.word.push_back(color);
      }
    }
    cfg.c = ctx.int_param("c", 1);
    cfg.delta = ctx.int_param("delta", 1);
    if (ctx.params.count("k")) cfg.k = ctx.int_param("k", 1);
    return a_isolation_strategy(ctx.turns, std::move(cfg));
  }
  if (name == "b-four-rule") return b_four_rule_strategy();
  if (name == "a-palindrome")
    return a_palindrome_strategy(static_cast<int>(ctx.int_param("n", static_cast<std::int64_t>(ctx.sft.alphabet_size()) - 1)));
  if (name == "b-1234") return b_1234_strategy();
  if (name == "a-greedy-1234") return a_greedy_1234_strategy();
  std::string known;
  for (const auto& s : strategy_names()) known += (known.empty() ? "" : ", ") + s;
  throw InputError("unknown strategy '" + std::string(name) + "' (known: " + known + ")");
}

std::vector<std::string> monitor_names() { return {"parity", "no-interpretation", "four-rule", "checkpoint-1234"}; }

std::vector<InvariantMonitor> make_monitors(std::string_view names, const StrategyContext& ctx) {
  std::vector<InvariantMonitor> out;
  for (const auto& n : split(names)) {
    if (n == "parity") {
      out.push_back(parity_monitor());
    } else if (n == "no-interpretation") {
      std::optional<Sft> base;
      out.push_back(no_interpretation_monitor(ArrowLayout{require_arrow(ctx, base).alphabet_size()}));
    } else if (n == "four-rule") {
      for (auto& m : four_rule_monitors()) out.push_back(std::move(m));
    } else if (n == "checkpoint-1234") {
      out.push_back(checkpoint_1234_monitor(ctx.start_index));
    } else {
      throw InputError("unknown monitor '" + n + "'");
    }
  }
  return out;
}

}  // namespace domino
