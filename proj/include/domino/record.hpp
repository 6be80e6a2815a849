#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace domino {

/// Ordered `key = value` result record. Keys under `stats.` hold timing and counters and
/// are left out of comparisons.
class Record {
 public:
  Record& set(std::string key, std::string value);
  Record& set(std::string key, const char* value) { return set(std::move(key), std::string(value)); }
  Record& set(std::string key, bool value) { return set(std::move(key), std::string(value ? "true" : "false")); }
  Record& set(std::string key, std::int64_t value) { return set(std::move(key), std::to_string(value)); }
  Record& set(std::string key, std::uint64_t value) { return set(std::move(key), std::to_string(value)); }
  Record& set(std::string key, int value) { return set(std::move(key), std::to_string(value)); }

  const std::string* get(std::string_view key) const;
  const std::vector<std::pair<std::string, std::string>>& fields() const { return fields_; }

  std::string to_text() const;
  nlohmann::json to_json() const;
  /// Throws InputError on a line without `=`. Blank lines and `#` comments are skipped.
  static Record parse(std::string_view text);

  /// Equality ignoring `stats.` keys.
  bool same_result(const Record& other) const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

}  // namespace domino
