#pragma once

#include <memory>

#include "latcon/core.hpp"

namespace latcon::testing {

inline Lattice pentagon() {
  return lattice_from_covers("pentagon", {"0", "x", "y", "z", "1"},
                             {{0, 1}, {0, 2}, {2, 3}, {1, 4}, {3, 4}});
}

inline Lattice diamond() {
  return lattice_from_covers("diamond", {"0", "x", "y", "z", "1"},
                             {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

inline Lattice square() {
  return lattice_from_covers("square", {"0", "x", "y", "1"},
                             {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

inline Lattice lat_e() {
  return lattice_from_covers("E", {"0", "x", "y", "t", "z", "1"},
                             {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {3, 5}, {1, 5}, {4, 5}});
}

inline Lattice d_plus_l2() {
  return lattice_from_covers("d_plus_l2", {"0", "a", "b", "c", "x", "1"},
                             {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 5}});
}

inline std::shared_ptr<const Lattice> share(Lattice L) {
  return std::make_shared<const Lattice>(std::move(L));
}

}  // namespace latcon::testing
