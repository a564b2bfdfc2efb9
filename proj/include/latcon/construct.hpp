#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "latcon/congruence.hpp"
#include "latcon/core.hpp"
#include "latcon/morphism.hpp"

namespace latcon {

/// Direct product with mixed-radix element encoding, first factor most
/// significant. index = sum tuple[i] * stride[i], stride[last] = 1.
struct Product {
  std::vector<std::shared_ptr<const Lattice>> factors;
  std::shared_ptr<const Lattice> lat;
  std::vector<int> stride;

  int index_of(std::span<const int> tuple) const;
  std::vector<int> tuple_of(int index) const;
};

Product direct_product(std::vector<std::shared_ptr<const Lattice>> factors);

/// Blocks are products of the factor blocks; class count multiplies.
Partition product_congruence(const Product& P, std::span<const Partition> parts);

/// Ordinal sum; the top of each summand is identified with the bottom of
/// the next one, so |sum| = sum of sizes - (k-1). All summands are
/// (finite, hence) bounded.
struct OrdinalSum {
  std::vector<std::shared_ptr<const Lattice>> summands;
  std::shared_ptr<const Lattice> lat;
  std::vector<int> offset;  // global index = offset[i] + local, minus glue shift

  int index_of(int summand, int local) const;
};

OrdinalSum ordinal_sum(std::vector<std::shared_ptr<const Lattice>> summands);

/// Glued-block combination; class count = sum of class counts - (k-1).
Partition sum_congruence(const OrdinalSum& S, std::span<const Partition> parts);

/// Checks Con(construction) against the combined congruences of the
/// parts and the one-nontrivial-coordinate description of Spec/Max/Con2.
struct DecompReport {
  std::string construction;
  int con_size = 0;
  bool con_matches = false;
  bool spec_ok = false, max_ok = false, con2_ok = false;
  std::string witness;
  bool pass() const { return con_matches && spec_ok && max_ok && con2_ok; }
  std::string text() const;
};

DecompReport verify_product_con(const Product& P, int max_size = 12);
DecompReport verify_sum_con(const OrdinalSum& S, int max_size = 12);

/// Componentwise morphism between products of the doms and cods.
struct ProductMorphism {
  Product dom, cod;
  Morphism f;
};
ProductMorphism product_morphism(std::span<const Morphism> fs);

/// Stacked morphism between ordinal sums; needs bounded components.
struct SumMorphism {
  OrdinalSum dom, cod;
  Morphism f;
};
SumMorphism sum_morphism(std::span<const Morphism> fs);

}  // namespace latcon
