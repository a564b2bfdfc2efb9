#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "latcon/error.hpp"

namespace latcon {

/// A validated finite lattice on elements 0..n-1.
///
/// The order is kept as per-element up/down bitsets and the meet/join
/// tables are precomputed at validation time, so every pairwise query
/// downstream is O(1). Instances are immutable once built.
class Lattice {
 public:
  int n = 0;
  std::string name;
  std::vector<std::string> labels;
  int words = 0;                   // 64-bit words per bitset row
  std::vector<uint64_t> up_;       // up_[i*words + w]: bit j set iff i <= j
  std::vector<uint64_t> down_;     // down_[i*words + w]: bit j set iff j <= i
  std::vector<int32_t> meet_;      // n*n glb table
  std::vector<int32_t> join_;      // n*n lub table
  std::vector<int> topo;           // a linear extension, topo[k] = element
  std::vector<int> pos;            // pos[e] = position of e in topo
  int bottom = 0;
  int top = 0;
  uint64_t id = 0;                 // fresh per validation, copied with the value

  bool leq(int a, int b) const {
    return (up_[size_t(a) * words + (b >> 6)] >> (b & 63)) & 1u;
  }
  bool lt(int a, int b) const { return a != b && leq(a, b); }
  int meet(int a, int b) const { return meet_[size_t(a) * n + b]; }
  int join(int a, int b) const { return join_[size_t(a) * n + b]; }

  const uint64_t* up_row(int a) const { return &up_[size_t(a) * words]; }
  const uint64_t* down_row(int a) const { return &down_[size_t(a) * words]; }

  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
};

/// Raw order data as supplied by files or generators; exactly one of
/// `covers` / `leq` describes the order (leq wins when has_leq is set).
struct LatticeInput {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;  // (lower, upper)
  std::vector<std::vector<uint8_t>> leq;
  bool has_leq = false;
  int n = 0;  // element count; inferred from labels/leq when 0
};

/// Checks the poset axioms and totality of glb/lub, then freezes the
/// meet/join tables. Throws error{not_a_poset|no_meet|no_join} naming
/// the first offending pair.
Lattice validate_lattice(const LatticeInput& input);

/// Convenience builders used all over the tests and generators.
Lattice lattice_from_covers(std::string name, std::vector<std::string> labels,
                            std::vector<std::pair<int, int>> covers);
Lattice chain_lattice(int k);  // the k-element chain
Lattice mk_lattice(int k);     // bounds plus a k-element antichain

using CoverList = std::vector<std::pair<int, int>>;

/// Transitive reduction of the strict order.
CoverList hasse(const Lattice& L);

bool is_distributive(const Lattice& L);
bool is_modular(const Lattice& L);
bool is_chain(const Lattice& L);
bool is_complemented(const Lattice& L);
bool is_relatively_complemented(const Lattice& L);
bool is_boolean_lattice(const Lattice& L);

/// Non-extremal elements comparable to every other element; each such c
/// splits L as the ordinal sum of (c] and [c).
std::vector<int> cut_points(const Lattice& L);

/// Hasse diagram in DOT form, edges pointing lower -> upper, nodes in
/// index order.
std::string to_dot(const Lattice& L);

uint64_t next_lattice_id();

}  // namespace latcon
