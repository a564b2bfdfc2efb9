#include "doctest.h"
#include "fixtures.hpp"
#include "latcon/analysis.hpp"
#include "latcon/catalog.hpp"
#include "latcon/construct.hpp"

using namespace latcon;

TEST_CASE("the catalog loads and the figures have the right shapes") {
  auto names = lattice_fixture_names();
  CHECK(names.size() == 14);

  Fixture E = load_fixture("E");
  CHECK(E.lattice->n == 6);
  CHECK(hasse(*E.lattice).size() == 7);

  Fixture N = load_fixture("N");
  CHECK(N.lattice->n == 18);
  CHECK(hasse(*N.lattice).size() == 28);
  CHECK(!is_modular(*N.lattice));
  CHECK(!is_relatively_complemented(*N.lattice));

  Fixture V = load_fixture("V");
  CHECK(V.lattice->n == 7);
  CHECK(hasse(*V.lattice).size() == 9);

  Fixture W = load_fixture("W");
  CHECK(W.lattice->n == 7);
  CHECK(hasse(*W.lattice).size() == 8);

  Fixture K = load_fixture("K");
  CHECK(K.lattice->n == 9);
  CHECK(is_distributive(*K.lattice));

  Fixture P = load_fixture("pentagon");
  CHECK(P.aliases.size() == 3);
  CHECK(alias_by_blocktext(P).count("[[0],[1],[2,3],[4]]") == 1);

  CHECK_THROWS_AS(load_fixture("no_such_fixture"), error);
}

TEST_CASE("morphism fixtures load with their lattices") {
  Fixture g = load_fixture("g");
  CHECK(g.is_morphism);
  CHECK(g.morphism->validated);
  CHECK(g.morphism->bounded);
  CHECK(g.morphism->dom->name == "pentagon");
  CHECK(g.morphism->cod->name == "square");

  Fixture h = load_fixture("h");
  CHECK(!h.morphism->validated);
  CHECK(!h.morphism->defect.empty());

  Fixture v = load_fixture("v_embed");
  CHECK(v.morphism->validated);
  CHECK(!v.morphism->surjective());
}

TEST_CASE("full fixture regression is green") {
  RegressionReport rep = run_regression();
  if (!rep.all_pass) MESSAGE(rep.text());
  CHECK(rep.all_pass);
  CHECK(rep.items.size() > 80);
}

TEST_CASE("catalog lattices match the generator constructions") {
  Fixture dl2 = load_fixture("d_plus_l2");
  CHECK(lattices_isomorphic(*dl2.lattice, testing::d_plus_l2()));
  Fixture m3 = load_fixture("M3");
  CHECK(lattices_isomorphic(*m3.lattice, mk_lattice(3)));
  CHECK(lattices_isomorphic(*load_fixture("diamond").lattice, mk_lattice(3)));
}

TEST_CASE("congruence lattices of V and W have the advertised shapes") {
  ConLattice conV = enumerate_con(*load_fixture("V").lattice);
  CHECK(lattices_isomorphic(conV.order, testing::square()));

  ConLattice conW = enumerate_con(*load_fixture("W").lattice);
  ConLattice conP = enumerate_con(*load_fixture("pentagon").lattice);
  auto two = std::make_shared<const Lattice>(chain_lattice(2));
  auto conp = std::make_shared<const Lattice>(conP.order);
  Product prod = direct_product({two, conp});
  CHECK(lattices_isomorphic(conW.order, *prod.lat));
}
