#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "domino/sft.hpp"
#include "domino/strategy.hpp"
#include "domino/words.hpp"

namespace domino {

/// Built-in games: single, zugzwang, xx, aa, f2, f3, palindrome:<n>, 1234, arrow-empty,
/// arrow-11. Throws InputError for an unknown name.
Sft preset_sft(std::string_view name);
std::vector<std::string> preset_names();

/// An existing file is loaded; anything else is looked up as a preset.
Sft resolve_sft(const std::string& ref);

/// Base game of an arrow-derived SFT, if it is one.
std::optional<Sft> arrow_base(const Sft& derived);

using Params = std::map<std::string, std::string>;

struct StrategyContext {
  const Sft& sft;
  TurnWord turns = TurnWord::alternating();
  Variant variant = Variant::PassAllowed;
  Player side = Player::A;
  std::uint64_t start_index = 0;
  Params params;

  std::string param(const std::string& key, const std::string& fallback) const;
  std::int64_t int_param(const std::string& key, std::int64_t fallback) const;
};

std::vector<std::string> strategy_names();
/// Throws InputError for unknown names or bad parameters.
std::unique_ptr<Strategy> make_strategy(std::string_view name, const StrategyContext& ctx);

std::vector<std::string> monitor_names();
/// Comma-separated list of monitor names.
std::vector<InvariantMonitor> make_monitors(std::string_view names, const StrategyContext& ctx);

/// Colour list from comma-separated names.
std::vector<Color> parse_colors(const Sft& sft, std::string_view names);

}  // namespace domino
