#include "stochsub/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "stochsub/error.hpp"

namespace stochsub {

using nlohmann::json;

RawRule parse_rule_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError({std::string("malformed JSON: ") + e.what()});
  }
  std::vector<std::string> problems;
  RawRule raw;
  if (!doc.is_object()) throw ValidationError({"config must be a JSON object"});

  if (!doc.contains("alphabet") || !doc["alphabet"].is_array()) {
    problems.push_back("\"alphabet\" must be an array of strings");
  } else {
    for (const auto& s : doc["alphabet"]) {
      if (s.is_string())
        raw.alphabet.push_back(s.get<std::string>());
      else
        problems.push_back("alphabet entries must be strings");
    }
  }

  if (!doc.contains("rules") || !doc["rules"].is_object()) {
    problems.push_back("\"rules\" must be an object keyed by letter");
  } else {
    for (const auto& [letter, options] : doc["rules"].items()) {
      std::vector<RawImage> images;
      if (!options.is_array()) {
        problems.push_back("rules for '" + letter + "' must be an array");
        continue;
      }
      for (const auto& opt : options) {
        if (!opt.is_object() || !opt.contains("word") || !opt["word"].is_string() ||
            !opt.contains("prob") || !opt["prob"].is_string()) {
          problems.push_back("rules for '" + letter +
                             "': each image needs string fields \"word\" and \"prob\"");
          continue;
        }
        images.push_back({opt["word"].get<std::string>(), opt["prob"].get<std::string>()});
      }
      raw.rules.emplace_back(letter, std::move(images));
    }
  }
  if (!problems.empty()) throw ValidationError(std::move(problems));

  // nlohmann objects iterate in key order; restore alphabet order for stable output.
  std::vector<std::pair<std::string, std::vector<RawImage>>> ordered;
  for (const auto& symbol : raw.alphabet)
    for (auto& entry : raw.rules)
      if (entry.first == symbol) ordered.push_back(entry);
  for (auto& entry : raw.rules) {
    bool known = false;
    for (const auto& symbol : raw.alphabet) known = known || entry.first == symbol;
    if (!known) ordered.push_back(entry);
  }
  raw.rules = std::move(ordered);
  return raw;
}

std::string rule_to_json(const RawRule& rule) {
  json doc;
  doc["alphabet"] = rule.alphabet;
  doc["rules"] = json::object();
  for (const auto& [letter, options] : rule.rules) {
    json list = json::array();
    for (const auto& opt : options) list.push_back({{"word", opt.word}, {"prob", opt.prob}});
    doc["rules"][letter] = list;
  }
  return doc.dump(2);
}

SubstitutionRule load_rule(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError({"cannot open config file '" + path.string() + "'"});
  std::stringstream buffer;
  buffer << in.rdbuf();
  return validate_rule(parse_rule_json(buffer.str()));
}

}  // namespace stochsub
