#pragma once

#include <span>
#include <utility>
#include <vector>

#include "latcon/core.hpp"
#include "latcon/partition.hpp"

namespace latcon {

/// A congruence is a partition tied to the lattice it lives on.
struct Congruence {
  uint64_t lattice_id = 0;
  Partition part;

  int classes() const { return part.classes(); }
};

bool is_congruence(const Lattice& L, const Partition& p);

/// Least congruence identifying a and b: a worklist over union-find,
/// every merge (x,y) enqueues (x^z, y^z) and (x v z, y v z) for all z.
Partition principal_congruence(const Lattice& L, int a, int b);

Partition generated_congruence(const Lattice& L,
                               std::span<const std::pair<int, int>> pairs);

/// Block pairs generating a partition, fed to generated_congruence when
/// transporting congruences across morphisms.
std::vector<std::pair<int, int>> partition_pairs(const Partition& p);

Partition partition_meet(const Partition& p, const Partition& q);
Partition partition_join(const Partition& p, const Partition& q);

Congruence congruence_meet(const Lattice& L, const Congruence& c1, const Congruence& c2);
Congruence congruence_join(const Lattice& L, const Congruence& c1, const Congruence& c2);

/// Con(L) with its refinement order materialized as a Lattice, so the
/// order-theoretic classifiers apply to it directly.
struct ConLattice {
  uint64_t lattice_id = 0;
  std::vector<Partition> cons;  // sorted by rep array
  Lattice order;                // element i of `order` is cons[i]
  int delta = -1;
  int nabla = -1;

  int size() const { return int(cons.size()); }
  int index_of(const Partition& p) const;  // -1 when absent
  /// Indices of [theta): all congruences above cons[theta].
  std::vector<int> interval_above(int theta) const;
};

/// Join-closure of the principal congruences; equals all of Con(L).
ConLattice enumerate_con(const Lattice& L);

/// The interval [theta) of conL materialized as a lattice of its own,
/// plus the indices it came from.
struct IntervalLattice {
  std::vector<int> members;  // conL indices, ascending
  Lattice order;
};
IntervalLattice interval_lattice(const ConLattice& conL, int theta);

struct Quotient {
  Lattice lat;
  std::vector<int> proj;  // element -> block index
};

/// L/theta with blocks ordered by their minimum element; labels are
/// "{a,b,...}" over member labels.
Quotient quotient(const Lattice& L, const Partition& theta);

/// lambda/theta as a partition of the quotient's elements (requires
/// theta refines lambda).
Partition project_congruence(const Quotient& q, const Partition& lambda);

}  // namespace latcon
