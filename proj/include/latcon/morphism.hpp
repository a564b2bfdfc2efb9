#pragma once

#include <memory>
#include <string>
#include <vector>

#include "latcon/congruence.hpp"
#include "latcon/core.hpp"
#include "latcon/spectra.hpp"

namespace latcon {

/// A total map between two lattices. `validated` records whether it
/// preserves meet and join; congruence pullbacks are defined for any
/// total map, so classification can still run on unvalidated maps (the
/// fixture catalog contains one such map), but every pullback that is used
/// as a congruence gets checked.
struct Morphism {
  std::shared_ptr<const Lattice> dom;
  std::shared_ptr<const Lattice> cod;
  std::vector<int> map;
  bool bounded = false;    // 0 -> 0 and 1 -> 1
  bool validated = false;  // meet/join preserving
  std::string defect;      // first violated equation when not validated

  int operator()(int a) const { return map[a]; }
  bool surjective() const;
  std::vector<int> image() const;  // sorted distinct values
};

/// Throws NotMeetPreserving/NotJoinPreserving/NotBounded with the first
/// witness pair.
Morphism validate_morphism(std::shared_ptr<const Lattice> dom,
                           std::shared_ptr<const Lattice> cod,
                           std::vector<int> map, bool require_bounded);

/// Builds the map without insisting it is a morphism; records the defect.
Morphism unchecked_map(std::shared_ptr<const Lattice> dom,
                       std::shared_ptr<const Lattice> cod, std::vector<int> map);

/// f*(psi): pullback partition on dom. Always an equivalence; a
/// congruence whenever f is a morphism.
Partition inverse_image(const Morphism& f, const Partition& psi);

Partition kernel(const Morphism& f);

/// f(phi) closed to a congruence of cod. `exact` tags the surjective
/// case, where the transitive closure of the image is already the whole
/// generated congruence.
struct DirectImage {
  Partition part;
  bool exact = false;
};
DirectImage direct_image(const Morphism& f, const Partition& phi);

struct AnalyzedLattice {
  std::shared_ptr<const Lattice> lat;
  ConLattice con;
  SpectrumReport sr;
};
AnalyzedLattice analyze(std::shared_ptr<const Lattice> L);

/// Admissibility verdicts with a witness for each failing direction:
/// the codomain congruence psi whose pullback leaves Spec (resp. Max).
struct AdmissibilityReport {
  bool admissible = true;
  bool max_admissible = true;
  std::string spec_witness;
  std::string max_witness;
};
AdmissibilityReport check_admissibility(const Morphism& f, const AnalyzedLattice& dom,
                                        const AnalyzedLattice& cod);

/// g after f; domains must agree by lattice identity.
Morphism compose(const Morphism& g, const Morphism& f);

Morphism identity_morphism(std::shared_ptr<const Lattice> L);

/// f = embed . onto through the image sublattice.
struct Factorization {
  std::shared_ptr<const Lattice> image;
  std::vector<int> image_elements;  // cod indices, ascending
  Morphism onto;                    // dom -> image, surjective
  Morphism embed;                   // image -> cod
};
Factorization embedding_factorization(const Morphism& f);

/// f_(theta): dom/theta -> cod/Cg(f(theta)), with the commuting square
/// p_Cg . f = f_(theta) . p_theta checked at construction.
struct InducedQuotient {
  Quotient dom_q;
  Quotient cod_q;
  Partition cg_image;  // Cg_cod(f(theta))
  Morphism f_theta;
};
InducedQuotient induced_quotient_morphism(const Morphism& f, const Partition& theta);

}  // namespace latcon
