#pragma once

#include <string>

#include "json.hpp"
#include "latcon/core.hpp"
#include "latcon/partition.hpp"

namespace latcon {

/// Interchange form:
///   { "name": str, "elements": [str], "covers": [[lo,hi], ...] }
/// or
///   { "name": str, "elements": [str], "leq": [[0/1, ...], ...] }
LatticeInput lattice_input_from_json(const nlohmann::json& j);
Lattice lattice_from_json(const nlohmann::json& j);
Lattice load_lattice_file(const std::string& path);
nlohmann::json lattice_to_json(const Lattice& L);

/// Blocks as sorted lists, e.g. [[0,1],[2],[3,4]].
nlohmann::json partition_to_json(const Partition& p);
Partition partition_from_json(int n, const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace latcon
