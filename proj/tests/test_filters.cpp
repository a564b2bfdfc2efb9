#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "latcon/analysis.hpp"
#include "latcon/filters.hpp"
#include "latcon/spectra.hpp"

using namespace latcon;
using namespace latcon::testing;

namespace {

// Exhaustive oracle: nonempty, upward closed, meet-closed subsets.
std::set<uint64_t> filters_by_scan(const Lattice& L) {
  std::set<uint64_t> out;
  for (uint64_t s = 1; s < (uint64_t(1) << L.n); ++s) {
    bool ok = true;
    for (int a = 0; ok && a < L.n; ++a) {
      if (!(s >> a & 1)) continue;
      for (int b = 0; ok && b < L.n; ++b) {
        if (L.leq(a, b) && !(s >> b & 1)) ok = false;
        if ((s >> b & 1) && !(s >> L.meet(a, b) & 1)) ok = false;
      }
    }
    if (ok) out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("every filter of a finite lattice is principal") {
  std::vector<Lattice> samples{pentagon(), diamond(), square(), lat_e(), chain_lattice(4)};
  for (int n = 1; n <= 5; ++n)
    for (const Lattice& L : all_lattices(n)) samples.push_back(L);
  for (const Lattice& L : samples) {
    std::set<uint64_t> got;
    for (const auto& f : all_filters(L)) got.insert(f.mask);
    CHECK(got == filters_by_scan(L));
    CHECK(int(got.size()) == L.n);
  }
}

TEST_CASE("prime filters of chains and the diamond") {
  Lattice C3 = chain_lattice(3);
  auto primes = prime_filters(C3);
  CHECK(primes.size() == 2);  // [1) and [2); [0) = L is excluded
  std::set<int> gens;
  for (auto& p : primes) gens.insert(p.generator);
  CHECK(gens == std::set<int>{1, 2});
  // on a chain, every proper filter is prime
  CHECK(primes.size() == proper_filters(C3).size());

  CHECK(prime_filters(diamond()).empty());

  Lattice t = lattice_from_covers("t", {"*"}, {});
  CHECK(all_filters(t).size() == 1);
  CHECK(proper_filters(t).empty());
}

TEST_CASE("maximal filters are the atom filters") {
  auto mf = maximal_filters(diamond());
  CHECK(mf.size() == 3);
  auto mp = maximal_filters(pentagon());
  CHECK(mp.size() == 2);  // [x) and [y)
}

TEST_CASE("ideals mirror filters downward") {
  Lattice D = diamond();
  CHECK(all_ideals(D).size() == 5);
  CHECK(maximal_ideals(D).size() == 3);  // coatom ideals
  CHECK(maximal_ideals(chain_lattice(3)).size() == 1);
  for (const auto& I : all_ideals(pentagon())) {
    Lattice P = pentagon();
    for (int a : I.elements()) {
      for (int b : I.elements()) CHECK(I.contains(P.join(a, b)));
      for (int b = 0; b < P.n; ++b)
        if (P.leq(b, a)) CHECK(I.contains(b));
    }
  }
}

TEST_CASE("prime filters and prime ideals are complementary") {
  for (const Lattice& L : {pentagon(), square(), chain_lattice(5), lat_e()}) {
    std::set<uint64_t> ideal_masks;
    for (auto& I : prime_ideals(L)) ideal_masks.insert(I.mask);
    std::set<uint64_t> complements;
    uint64_t full = (uint64_t(1) << L.n) - 1;
    for (auto& P : prime_filters(L)) complements.insert(full & ~P.mask);
    CHECK(ideal_masks == complements);
  }
}

TEST_CASE("boolean lattices: prime filters are the maximal ones") {
  LatticeInput in;
  in.name = "cube";
  in.n = 8;
  in.has_leq = true;
  in.leq.assign(8, std::vector<uint8_t>(8, 0));
  for (int a = 0; a < 8; ++a) {
    in.labels.push_back(std::to_string(a));
    for (int b = 0; b < 8; ++b) in.leq[a][b] = (a & ~b) == 0 ? 1 : 0;
  }
  Lattice cube = validate_lattice(in);
  std::set<int> pf, mf;
  for (auto& f : prime_filters(cube)) pf.insert(f.generator);
  for (auto& f : maximal_filters(cube)) mf.insert(f.generator);
  CHECK(pf == mf);
  CHECK(pf.size() == 3);
}

TEST_CASE("phi embedding on the square") {
  Lattice S = square();
  CHECK(phi_embedding(S, principal_filter(S, 1)) ==
        Partition::from_blocks(4, {{0, 2}, {1, 3}}));  // sigma
  CHECK(phi_embedding(S, principal_filter(S, S.top)) == Partition::singletons(4));
  CHECK(phi_embedding(S, principal_filter(S, S.bottom)) == Partition::one_block(4));
  CHECK_THROWS_AS(phi_embedding(diamond(), principal_filter(diamond(), 1)), error);
}

TEST_CASE("chi embedding on the square") {
  Lattice S = square();
  CHECK(chi_embedding(S, principal_ideal(S, 1)) ==
        Partition::from_blocks(4, {{0, 1}, {2, 3}}));  // rho
  CHECK(chi_embedding(S, principal_ideal(S, S.bottom)) == Partition::singletons(4));
  CHECK(chi_embedding(S, principal_ideal(S, S.top)) == Partition::one_block(4));
  // chi is the least congruence having the ideal as the bottom class
  Lattice C5 = chain_lattice(5);
  ConLattice con = enumerate_con(C5);
  for (const auto& I : all_ideals(C5)) {
    Partition chi = chi_embedding(C5, I);
    for (const auto& c : con.cons) {
      uint64_t cls = 0;
      for (int i = 0; i < C5.n; ++i)
        if (c.same(i, C5.bottom)) cls |= uint64_t(1) << i;
      if (cls == I.mask) CHECK(chi.refines(c));
    }
  }
}

TEST_CASE("phi(F) is the least congruence with class F") {
  for (const Lattice& L : {square(), chain_lattice(5)}) {
    ConLattice con = enumerate_con(L);
    for (const auto& F : all_filters(L)) {
      Partition phi = phi_embedding(L, F);
      for (const auto& c : con.cons) {
        uint64_t cls = 0;
        for (int i = 0; i < L.n; ++i)
          if (c.same(i, L.top)) cls |= uint64_t(1) << i;
        if (cls == F.mask) CHECK(phi.refines(c));
      }
      CHECK(is_congruence(L, phi));
    }
  }
}

TEST_CASE("two-class congruences through prime filters") {
  auto check = [](const Lattice& L) {
    ConLattice con = enumerate_con(L);
    SpectrumReport sr = classify(L, con);
    std::set<Partition> want;
    for (int i : sr.con2) want.insert(con.cons[i]);
    auto via = con2_via_prime_filters(L);
    CHECK(std::set<Partition>(via.begin(), via.end()) == want);
  };
  check(pentagon());
  check(diamond());
  check(chain_lattice(2));
  check(lat_e());
  for (int n = 1; n <= 5; ++n)
    for (const Lattice& L : all_lattices(n)) check(L);
}

TEST_CASE("in a distributive lattice every proper filter is an intersection of primes") {
  GeneratorSpec gs;
  gs.family = Family::downset;
  gs.max_size = 8;
  gs.seed = 7;
  auto lats = generate(gs, 25);
  lats.push_back(square());
  lats.push_back(chain_lattice(6));
  for (const Lattice& L : lats) {
    auto primes = prime_filters(L);
    for (const auto& F : proper_filters(L)) {
      uint64_t inter = (uint64_t(1) << L.n) - 1;
      for (const auto& P : primes)
        if ((F.mask & ~P.mask) == 0) inter &= P.mask;
      CHECK(inter == F.mask);
    }
  }
}
