#pragma once

#include <filesystem>
#include <string>

#include "stochsub/substitution.hpp"

namespace stochsub {

// Rule file format:
//   {"alphabet": ["a", "b"],
//    "rules": {"a": [{"word": "ab", "prob": "1/2"}, {"word": "ba", "prob": "1/2"}],
//              "b": [{"word": "a", "prob": "1"}]}}
// Structural problems are reported as ValidationError, like rule violations.
RawRule parse_rule_json(const std::string& text);
std::string rule_to_json(const RawRule& rule);

SubstitutionRule load_rule(const std::filesystem::path& path);

}  // namespace stochsub
