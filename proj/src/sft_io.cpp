#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "domino/sft.hpp"

namespace domino {

using nlohmann::json;

namespace {

std::mutex& factory_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, PredicateFactory>& factories() {
  static std::map<std::string, PredicateFactory> f;
  return f;
}

}  // namespace

void register_predicate_factory(std::string construction, PredicateFactory factory) {
  std::lock_guard lock(factory_mutex());
  factories()[std::move(construction)] = std::move(factory);
}

Sft sft_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("SFT document must be an object");
  if (doc.contains("predicate")) {
    const auto& pred = doc.at("predicate");
    if (!pred.is_object() || !pred.contains("construction"))
      throw InputError("predicate field needs a 'construction' name");
    const auto name = pred.at("construction").get<std::string>();
    PredicateFactory f;
    {
      std::lock_guard lock(factory_mutex());
      auto it = factories().find(name);
      if (it == factories().end()) throw InputError("unknown predicate construction '" + name + "'");
      f = it->second;
    }
    return f(pred);
  }
  try {
    const int dimension = doc.at("dimension").get<int>();
    auto alphabet = doc.at("alphabet").get<std::vector<std::string>>();
    std::map<std::string, std::uint16_t> ids;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      if (!ids.emplace(alphabet[i], static_cast<std::uint16_t>(i)).second)
        throw InputError("duplicate colour '" + alphabet[i] + "'");
    }
    std::vector<Pattern> forbidden;
    std::size_t index = 0;
    for (const auto& pj : doc.value("forbidden", json::array())) {
      std::vector<Pattern::Entry> entries;
      for (const auto& tile : pj) {
        auto offset = tile.at("offset").get<std::vector<int>>();
        if (offset.size() != static_cast<std::size_t>(dimension))
          throw InputError("forbidden[" + std::to_string(index) + "]: offset length differs from dimension");
        Cell c;
        for (std::size_t i = 0; i < offset.size() && i < kMaxDim; ++i) c[i] = offset[i];
        const auto name = tile.at("color").get<std::string>();
        auto it = ids.find(name);
        if (it == ids.end())
          throw InputError("forbidden[" + std::to_string(index) + "]: unknown colour '" + name + "'");
        entries.emplace_back(c, Color{it->second});
      }
      forbidden.emplace_back(std::move(entries));
      ++index;
    }
    return Sft(dimension, std::move(alphabet), std::move(forbidden));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed SFT document: ") + e.what());
  }
}

json sft_to_json(const Sft& sft) {
  json doc;
  doc["dimension"] = sft.dimension();
  doc["alphabet"] = sft.alphabet();
  json forb = json::array();
  for (const auto& p : sft.forbidden()) {
    json pj = json::array();
    for (const auto& [cell, color] : p) {
      std::vector<int> off(cell.x.begin(), cell.x.begin() + sft.dimension());
      pj.push_back({{"offset", off}, {"color", sft.name(color)}});
    }
    forb.push_back(pj);
  }
  doc["forbidden"] = forb;
  if (!sft.predicates().empty()) doc["predicate"] = sft.predicates().front().descriptor;
  return doc;
}

Sft parse_sft(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("SFT file: ") + e.what());
  }
  return sft_from_json(doc);
}

Sft load_sft(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open SFT file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_sft(ss.str());
}

std::string dump_sft(const Sft& sft) { return sft_to_json(sft).dump(2) + "\n"; }

}  // namespace domino
