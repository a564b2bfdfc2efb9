#pragma once

#include <cstdint>
#include <vector>

#include "latcon/congruence.hpp"
#include "latcon/core.hpp"

namespace latcon {

/// Filter or ideal of a lattice with at most 64 elements, as a member
/// bitmask. In a finite lattice every filter is principal, so `generator`
/// is the minimum (filters) or maximum (ideals) of the set.
struct FilterSet {
  uint64_t mask = 0;
  bool is_filter = true;  // false: ideal
  int generator = -1;

  bool contains(int x) const { return (mask >> x) & 1u; }
  std::vector<int> elements() const;
};

std::vector<FilterSet> all_filters(const Lattice& L);
std::vector<FilterSet> proper_filters(const Lattice& L);
std::vector<FilterSet> prime_filters(const Lattice& L);
std::vector<FilterSet> maximal_filters(const Lattice& L);

std::vector<FilterSet> all_ideals(const Lattice& L);
std::vector<FilterSet> proper_ideals(const Lattice& L);
std::vector<FilterSet> prime_ideals(const Lattice& L);
std::vector<FilterSet> maximal_ideals(const Lattice& L);

FilterSet principal_filter(const Lattice& L, int x);
FilterSet principal_ideal(const Lattice& L, int x);

/// phi_L(F) = {(x,y) | exists a in F, x^a = y^a}: the least congruence of
/// a distributive L having F as a class. Throws NotDistributive otherwise.
Partition phi_embedding(const Lattice& L, const FilterSet& F);

/// chi_L(I), the ideal-side dual.
Partition chi_embedding(const Lattice& L, const FilterSet& I);

/// {eq(P, L \ P) : P prime filter}; coincides with the two-class
/// congruences of L.
std::vector<Partition> con2_via_prime_filters(const Lattice& L);

}  // namespace latcon
