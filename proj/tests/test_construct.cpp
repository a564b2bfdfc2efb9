#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "latcon/analysis.hpp"
#include "latcon/construct.hpp"
#include "latcon/spectra.hpp"

using namespace latcon;
using namespace latcon::testing;

TEST_CASE("direct products and their codecs") {
  auto L2 = share(chain_lattice(2));
  Product sq = direct_product({L2, L2});
  CHECK(sq.lat->n == 4);
  CHECK(lattices_isomorphic(*sq.lat, square()));

  auto D = share(diamond());
  Product DL2 = direct_product({D, L2});
  CHECK(DL2.lat->n == 10);
  for (int i = 0; i < DL2.lat->n; ++i)
    CHECK(DL2.index_of(DL2.tuple_of(i)) == i);

  // ternary product agrees with the nested binary one
  auto L3 = share(chain_lattice(3));
  Product flat = direct_product({L2, L3, L2});
  Product nested = direct_product({direct_product({L2, L3}).lat, L2});
  CHECK(flat.lat->n == nested.lat->n);
  CHECK(lattices_isomorphic(*flat.lat, *nested.lat));
}

TEST_CASE("product congruences multiply class counts") {
  auto D = share(diamond());
  auto L2 = share(chain_lattice(2));
  Product P = direct_product({D, L2});
  Partition nn = product_congruence(P, std::vector<Partition>{
                                           Partition::one_block(5), Partition::one_block(2)});
  CHECK(nn == Partition::one_block(10));
  Partition dd = product_congruence(P, std::vector<Partition>{
                                           Partition::singletons(5), Partition::singletons(2)});
  CHECK(dd == Partition::singletons(10));
  Partition half = product_congruence(P, std::vector<Partition>{
                                             Partition::one_block(5), Partition::singletons(2)});
  CHECK(half.classes() == 2);

  auto L3 = share(chain_lattice(3));
  Product Q = direct_product({L3, L2});
  Partition six = product_congruence(Q, std::vector<Partition>{
                                            Partition::singletons(3), Partition::singletons(2)});
  CHECK(six.classes() == 6);
  CHECK_THROWS_AS(product_congruence(Q, std::vector<Partition>{Partition::singletons(2),
                                                               Partition::singletons(2)}),
                  error);
}

TEST_CASE("product decomposition theorem") {
  auto L2 = share(chain_lattice(2));
  auto D = share(diamond());
  Product sq = direct_product({L2, L2});
  DecompReport r1 = verify_product_con(sq);
  CHECK(r1.pass());
  CHECK(r1.con_size == 4);

  DecompReport r2 = verify_product_con(direct_product({D, L2}));
  CHECK(r2.pass());
  // Spec(D x L2) has exactly two members
  AnalyzedLattice an = analyze(direct_product({D, L2}).lat);
  CHECK(an.sr.spec.size() == 2);

  auto L1 = share(chain_lattice(1));
  auto P5 = share(pentagon());
  DecompReport r3 = verify_product_con(direct_product({P5, L1}));
  CHECK(r3.pass());
  CHECK(r3.con_size == 5);

  CHECK_THROWS_AS(verify_product_con(direct_product({D, D})), error);  // 25 > 12
}

TEST_CASE("ordinal sums and their congruences") {
  auto L2 = share(chain_lattice(2));
  OrdinalSum l3 = ordinal_sum({L2, L2});
  CHECK(l3.lat->n == 3);
  CHECK(lattices_isomorphic(*l3.lat, chain_lattice(3)));

  auto D = share(diamond());
  OrdinalSum dl2 = ordinal_sum({D, L2});
  CHECK(dl2.lat->n == 6);
  CHECK(lattices_isomorphic(*dl2.lat, d_plus_l2()));

  OrdinalSum single = ordinal_sum({D});
  CHECK(single.lat->n == 5);
  CHECK(lattices_isomorphic(*single.lat, *D));

  OrdinalSum l4 = ordinal_sum({L2, L2, L2});
  CHECK(l4.lat->n == 4);
  CHECK(lattices_isomorphic(*l4.lat, chain_lattice(4)));

  // a trivial middle summand only contributes its glue element
  auto L1 = share(chain_lattice(1));
  OrdinalSum glued = ordinal_sum({L2, L1, L2});
  CHECK(glued.lat->n == 3);
  CHECK(lattices_isomorphic(*glued.lat, chain_lattice(3)));
  Partition all3 = sum_congruence(glued, std::vector<Partition>{Partition::singletons(2),
                                                                Partition::singletons(1),
                                                                Partition::singletons(2)});
  CHECK(all3 == Partition::singletons(3));

  Partition dd = sum_congruence(l3, std::vector<Partition>{Partition::singletons(2),
                                                           Partition::singletons(2)});
  CHECK(dd == Partition::singletons(3));
  Partition nd = sum_congruence(l3, std::vector<Partition>{Partition::one_block(2),
                                                           Partition::singletons(2)});
  CHECK(nd.classes() == 2);
  CHECK(nd == Partition::from_blocks(3, {{0, 1}, {2}}));

  Partition gd = sum_congruence(dl2, std::vector<Partition>{Partition::one_block(5),
                                                            Partition::singletons(2)});
  CHECK(gd.classes() == 2);  // 1 + 2 - 1
}

TEST_CASE("sum decomposition theorem") {
  auto L2 = share(chain_lattice(2));
  auto D = share(diamond());
  auto P = share(pentagon());

  DecompReport r1 = verify_sum_con(ordinal_sum({L2, L2}));
  CHECK(r1.pass());
  CHECK(r1.con_size == 4);
  CHECK(lattices_isomorphic(enumerate_con(chain_lattice(3)).order, square()));

  DecompReport r2 = verify_sum_con(ordinal_sum({D, L2}));
  CHECK(r2.pass());
  CHECK(r2.con_size == 4);
  CHECK(lattices_isomorphic(enumerate_con(*ordinal_sum({D, L2}).lat).order, square()));

  DecompReport r3 = verify_sum_con(ordinal_sum({L2, P}));
  CHECK(r3.pass());
  CHECK(r3.con_size == 10);
}

TEST_CASE("product and sum morphisms") {
  auto P = share(pentagon());
  auto S = share(square());
  auto D = share(diamond());
  auto E = share(lat_e());
  Morphism g = validate_morphism(P, S, {0, 1, 2, 2, 3}, true);
  Morphism k = validate_morphism(D, E, {0, 1, 2, 4, 5}, true);

  Morphism ids[2] = {identity_morphism(S), identity_morphism(S)};
  ProductMorphism pid = product_morphism(ids);
  for (int a = 0; a < pid.dom.lat->n; ++a) CHECK(pid.f.map[a] == a);

  Morphism gk[2] = {g, k};
  SumMorphism sgk = sum_morphism(gk);
  CHECK(sgk.f.validated);
  CHECK(sgk.f.bounded);
  CHECK(sgk.dom.lat->n == 9);   // pentagon (+) diamond
  CHECK(sgk.cod.lat->n == 9);   // square (+) E

  Morphism gg[2] = {g, g};
  ProductMorphism pgg = product_morphism(gg);
  auto adm = check_admissibility(pgg.f, analyze(pgg.dom.lat), analyze(pgg.cod.lat));
  CHECK(adm.admissible);
  CHECK(adm.max_admissible);

  // a morphism that moves the top cannot enter an ordinal sum
  auto L2 = share(chain_lattice(2));
  auto L3 = share(chain_lattice(3));
  Morphism low = validate_morphism(L2, L3, {0, 1}, false);
  Morphism bad[2] = {low, identity_morphism(L2)};
  CHECK_THROWS_AS(sum_morphism(bad), error);
}
