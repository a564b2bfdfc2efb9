#pragma once

#include <string>
#include <vector>

#include "latcon/congruence.hpp"

namespace latcon {

/// Per-congruence classification evidence plus the three classified sets
/// (indices into the ConLattice, ascending).
struct SpectrumReport {
  uint64_t lattice_id = 0;
  struct Evidence {
    bool meet_irreducible = false;
    int unique_successor = -1;  // -1 when none or several
    int class_count = 0;
  };
  std::vector<Evidence> evidence;
  std::vector<int> spec;  // proper meet-irreducible == strictly meet-irreducible
  std::vector<int> max;   // maximal proper
  std::vector<int> con2;  // exactly two classes

  bool in_spec(int i) const;
  bool in_max(int i) const;
  bool in_con2(int i) const;
};

bool meet_irreducible(const ConLattice& conL, int theta);
bool strictly_meet_irreducible(const ConLattice& conL, int theta);

/// Computes spec both ways (proper+meet-irreducible, unique-successor)
/// and cross-checks them; max is cross-checked against [theta) = {theta, nabla}.
SpectrumReport classify(const Lattice& L, const ConLattice& conL);

bool con_is_boolean(const ConLattice& conL);

/// Which structural hypotheses L satisfies and whether the corresponding
/// Spec/Max/Con2 identities hold. A failing identity is an implementation
/// bug, surfaced as a witness here rather than silently.
struct ClassTheoremReport {
  struct Item {
    std::string hypothesis;
    std::string identity;
    bool pass = false;
    std::string witness;
  };
  std::vector<Item> items;
  bool all_pass = true;
};

ClassTheoremReport verify_class_theorems(const Lattice& L, const ConLattice& conL,
                                         bool pentagon_composed = false);

std::string spectrum_text(const Lattice& L, const ConLattice& conL,
                          const SpectrumReport& sr);

/// DOT of the congruence lattice, nodes colored by classification.
std::string con_dot(const Lattice& L, const ConLattice& conL, const SpectrumReport& sr);

}  // namespace latcon
