#include "domino/record.hpp"

#include <sstream>

#include "domino/core.hpp"

namespace domino {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool is_stat(const std::string& key) { return key.rfind("stats.", 0) == 0; }

}  // namespace

Record& Record::set(std::string key, std::string value) {
  for (auto& [k, v] : fields_)
    if (k == key) {
      v = std::move(value);
      return *this;
    }
  fields_.emplace_back(std::move(key), std::move(value));
  return *this;
}

const std::string* Record::get(std::string_view key) const {
  for (const auto& [k, v] : fields_)
    if (k == key) return &v;
  return nullptr;
}

std::string Record::to_text() const {
  std::string out;
  for (const auto& [k, v] : fields_) out += k + " = " + v + "\n";
  return out;
}

nlohmann::json Record::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : fields_) j[k] = v;
  return j;
}

Record Record::parse(std::string_view text) {
  Record r;
  std::istringstream in{std::string(text)};
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    const auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw InputError("line " + std::to_string(no) + ": expected `key = value`");
    auto key = trim(std::string_view(t).substr(0, eq));
    if (key.empty()) throw InputError("line " + std::to_string(no) + ": empty key");
    r.set(std::move(key), trim(std::string_view(t).substr(eq + 1)));
  }
  return r;
}

bool Record::same_result(const Record& other) const {
  auto strip = [](const Record& r) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& f : r.fields_)
      if (!is_stat(f.first)) out.push_back(f);
    return out;
  };
  return strip(*this) == strip(other);
}

}  // namespace domino
