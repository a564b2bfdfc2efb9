#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "latcon/morphism.hpp"

namespace latcon {

/// A named lattice or morphism shipped with the project, together with
/// the values it is expected to produce. Everything loads through the
/// regular validation path except the one map that is stored precisely
/// because it fails it.
struct Fixture {
  std::string name;
  bool is_morphism = false;
  std::shared_ptr<const Lattice> lattice;  // set for both kinds (dom for morphisms)
  std::optional<Morphism> morphism;
  nlohmann::json expected;
  std::map<std::string, Partition> aliases;  // display name -> congruence
};

std::string default_data_dir();

std::vector<std::string> lattice_fixture_names(const std::string& data_dir = default_data_dir());
std::vector<std::string> morphism_fixture_names(const std::string& data_dir = default_data_dir());

Fixture load_fixture(const std::string& name, const std::string& data_dir = default_data_dir());

/// Greek-letter display names for the congruences of a fixture lattice.
std::map<std::string, std::string> alias_by_blocktext(const Fixture& fix);

struct RegressionReport {
  struct Item {
    std::string fixture;
    std::string field;
    bool pass = false;
    std::string got, want;
  };
  std::vector<Item> items;
  bool all_pass = true;
  std::string text() const;
};

/// Recomputes every fixture's expectations and compares.
RegressionReport run_regression(const std::string& data_dir = default_data_dir());

}  // namespace latcon
