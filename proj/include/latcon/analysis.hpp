#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "latcon/congruence.hpp"
#include "latcon/core.hpp"
#include "latcon/morphism.hpp"

namespace latcon {

enum class Family {
  chain,            // chains of increasing size within bounds
  downset,          // down-set lattices of seeded random posets (distributive)
  mk,               // bounds plus a k-antichain
  small_random,     // seeded picks from the exhaustive n<=7 catalog
  modular_mix,      // products/ordinal sums over M_k leaves
};

/// Same seed and spec give the same instance stream, byte for byte.
struct GeneratorSpec {
  Family family = Family::chain;
  int min_size = 2;
  int max_size = 8;
  uint64_t seed = 1;
};

std::vector<Lattice> generate(const GeneratorSpec& spec, int count);

/// All lattices on n elements up to isomorphism (n <= 7; the counts are
/// 1,1,1,2,5,15,53). Cached after the first call.
const std::vector<Lattice>& all_lattices(int n);

bool lattices_isomorphic(const Lattice& A, const Lattice& B);

struct SubdirectResult {
  bool irreducible = false;
  int monolith = -1;  // ConLattice index of the minimum of Con \ {delta}
};

/// Throws TrivialAlgebra on one-element lattices. Cross-checks the
/// minimum-above-delta test against strict meet-irreducibility of delta
/// and membership of delta in Spec.
SubdirectResult subdirectly_irreducible(const Lattice& L, const ConLattice& conL);

/// All lattice morphisms dom -> cod as raw maps.
std::vector<std::vector<int>> enumerate_morphism_maps(const Lattice& dom, const Lattice& cod,
                                                      bool surjective_only,
                                                      bool bounded_only);

/// Sublattices of L (as ascending element lists), nonempty and closed
/// under meet and join.
std::vector<std::vector<int>> enumerate_sublattices(const Lattice& L);

struct SweepReport {
  std::string property;
  int instances = 0;
  int failures = 0;
  std::string first_counterexample;
  bool pass() const { return failures == 0 && instances > 0; }
  std::string text() const;
};

/// Named theorem sweeps; unknown ids throw UnknownProperty.
SweepReport sweep(const std::string& property_id, const GeneratorSpec& spec, int count);
std::vector<std::string> sweep_property_names();

}  // namespace latcon
