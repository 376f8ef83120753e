#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "dfrieze/io.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(DFRIEZE_FIXTURES) + "/" + name; }

inline dfrieze::TriangulationFile load(const std::string& name) { return dfrieze::load_triangulation(path(name)); }

inline std::vector<std::string> lines(const std::string& name) {
  std::ifstream in(path(name));
  std::vector<std::string> out;
  for (std::string s; std::getline(in, s);)
    if (!s.empty()) out.push_back(s);
  return out;
}

inline nlohmann::json json(const std::string& name) { return nlohmann::json::parse(dfrieze::read_file(path(name))); }

inline std::map<dfrieze::Label, dfrieze::BigInt> values(const nlohmann::json& j) {
  std::map<dfrieze::Label, dfrieze::BigInt> out;
  for (const auto& [k, v] : j.items()) out[dfrieze::parse_label(k)] = dfrieze::big_from_json(v);
  return out;
}

}  // namespace fixtures
