#include "latcon/io.hpp"

#include <fstream>

namespace latcon {

using nlohmann::json;

LatticeInput lattice_input_from_json(const json& j) {
  LatticeInput in;
  if (j.contains("name")) in.name = j.at("name").get<std::string>();
  if (j.contains("elements"))
    in.labels = j.at("elements").get<std::vector<std::string>>();
  bool has_covers = j.contains("covers");
  bool has_leq = j.contains("leq");
  if (has_covers == has_leq)
    throw error(errc::bad_input, "expected exactly one of \"covers\" or \"leq\"");
  if (has_covers) {
    for (const auto& e : j.at("covers")) {
      if (!e.is_array() || e.size() != 2)
        throw error(errc::bad_input, "cover entries are [lower, upper] pairs");
      in.covers.push_back({e[0].get<int>(), e[1].get<int>()});
    }
  } else {
    for (const auto& row : j.at("leq"))
      in.leq.push_back(row.get<std::vector<uint8_t>>());
    in.has_leq = true;
    if (in.labels.empty())
      for (size_t i = 0; i < in.leq.size(); ++i)
        in.labels.push_back("e" + std::to_string(i));
  }
  return in;
}

Lattice lattice_from_json(const json& j) {
  return validate_lattice(lattice_input_from_json(j));
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw error(errc::bad_input, "cannot open " + path);
  json j;
  try {
    f >> j;
  } catch (const std::exception& e) {
    throw error(errc::bad_input, "bad JSON in " + path + ": " + e.what());
  }
  return j;
}

Lattice load_lattice_file(const std::string& path) {
  return lattice_from_json(read_json_file(path));
}

json lattice_to_json(const Lattice& L) {
  json j;
  j["name"] = L.name;
  j["elements"] = L.labels;
  json covers = json::array();
  for (auto [a, b] : hasse(L)) covers.push_back(json::array({a, b}));
  j["covers"] = covers;
  return j;
}

json partition_to_json(const Partition& p) {
  json j = json::array();
  for (const auto& blk : p.blocks()) j.push_back(blk);
  return j;
}

Partition partition_from_json(int n, const json& j) {
  std::vector<std::vector<int>> blocks;
  for (const auto& b : j) blocks.push_back(b.get<std::vector<int>>());
  return Partition::from_blocks(n, blocks);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw error(errc::bad_input, "cannot write " + path);
  f << content;
}

}  // namespace latcon
