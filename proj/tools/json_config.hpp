#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "curvop/errors.hpp"
#include "json.hpp"

namespace curvop_cli {

/// Expands `--config FILE` (or --config=FILE) into ordinary option tokens
/// inserted right after the subcommand name, so a flat JSON object
/// {"abc": [0, 0, 1], "alpha": 3.5} behaves exactly like typed flags.
/// Explicitly typed flags keep their position after the injected tokens and
/// win under the take-last option policy.
inline std::vector<std::string> merge_config_tokens(std::vector<std::string> tokens) {
  std::string path;
  for (std::size_t i = 0; i < tokens.size();) {
    if (tokens[i] == "--config") {
      if (i + 1 >= tokens.size())
        throw curvop::InvalidInput("--config needs a file path");
      if (!path.empty()) throw curvop::InvalidInput("--config given twice");
      path = tokens[i + 1];
      tokens.erase(tokens.begin() + long(i), tokens.begin() + long(i) + 2);
    } else if (tokens[i].rfind("--config=", 0) == 0) {
      if (!path.empty()) throw curvop::InvalidInput("--config given twice");
      path = tokens[i].substr(9);
      tokens.erase(tokens.begin() + long(i));
    } else {
      ++i;
    }
  }
  if (path.empty()) return tokens;
  if (tokens.empty() || tokens[0].rfind("-", 0) == 0)
    throw curvop::InvalidInput("--config requires a subcommand");

  std::ifstream in(path, std::ios::binary);
  if (!in) throw curvop::InvalidInput("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw curvop::InvalidInput(std::string("config parse error: ") + e.what());
  }
  if (!j.is_object())
    throw curvop::InvalidInput("config must be a flat JSON object");

  auto scalar = [](const nlohmann::json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  std::vector<std::string> injected;
  for (const auto& [key, value] : j.items()) {  // alphabetical, deterministic
    injected.push_back("--" + key);
    if (value.is_array())
      for (const auto& el : value) injected.push_back(scalar(el));
    else
      injected.push_back(scalar(value));
  }
  tokens.insert(tokens.begin() + 1, injected.begin(), injected.end());
  return tokens;
}

}  // namespace curvop_cli
