#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "latcon/analysis.hpp"
#include "latcon/core.hpp"
#include "latcon/io.hpp"

using namespace latcon;
using namespace latcon::testing;

TEST_CASE("pentagon validates with the right tables") {
  Lattice P = pentagon();
  CHECK(P.n == 5);
  CHECK(P.bottom == 0);
  CHECK(P.top == 4);
  CHECK(P.meet(1, 3) == 0);   // x ^ z
  CHECK(P.join(1, 2) == 4);   // x v y
  CHECK(P.meet(2, 3) == 2);   // y ^ z = y
  CHECK(P.join(2, 3) == 3);
  CHECK(P.leq(2, 3));
  CHECK(!P.comparable(1, 2));
}

TEST_CASE("one-element lattice is valid") {
  Lattice t = lattice_from_covers("t", {"*"}, {});
  CHECK(t.n == 1);
  CHECK(t.bottom == t.top);
}

TEST_CASE("poset without joins is rejected with a witness") {
  // bottom 0 < 1 < {2, 3}: the two maximal elements have no lub
  try {
    lattice_from_covers("bad", {"0", "1", "2", "3"}, {{0, 1}, {1, 2}, {1, 3}});
    FAIL("expected NoJoin");
  } catch (const error& e) {
    CHECK(e.code == errc::no_join);
    CHECK(e.a == 2);
    CHECK(e.b == 3);
  }
}

TEST_CASE("poset without meets is rejected") {
  try {
    lattice_from_covers("bad", {"a", "b", "t"}, {{0, 2}, {1, 2}});
    FAIL("expected NoMeet");
  } catch (const error& e) {
    CHECK(e.code == errc::no_meet);
  }
}

TEST_CASE("cover cycles and broken matrices are not posets") {
  CHECK_THROWS_AS(lattice_from_covers("cyc", {"a", "b"}, {{0, 1}, {1, 0}}), error);
  LatticeInput in;
  in.labels = {"a", "b"};
  in.has_leq = true;
  in.leq = {{1, 1}, {1, 1}};  // antisymmetry fails
  CHECK_THROWS_AS(validate_lattice(in), error);
}

TEST_CASE("hasse is the transitive reduction") {
  CHECK(hasse(chain_lattice(3)) == CoverList{{0, 1}, {1, 2}});
  CHECK(hasse(diamond()).size() == 6);

  // Boolean cube via subset order; covers flip exactly one bit
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
  auto covers = hasse(cube);
  CHECK(covers.size() == 12);
  std::set<std::pair<int, int>> expect;
  for (int a = 0; a < 8; ++a)
    for (int bit = 0; bit < 3; ++bit)
      if (!(a >> bit & 1)) expect.insert({a, a | (1 << bit)});
  CHECK(std::set<std::pair<int, int>>(covers.begin(), covers.end()) == expect);
}

TEST_CASE("structure predicates match the standard examples") {
  Lattice D = diamond(), P = pentagon(), S = square();
  CHECK(is_modular(D));
  CHECK(!is_distributive(D));
  CHECK(!is_modular(P));
  CHECK(is_distributive(S));
  CHECK(is_boolean_lattice(S));
  CHECK(is_chain(chain_lattice(4)));
  CHECK(!is_chain(S));
  CHECK(is_relatively_complemented(D));
  CHECK(!is_complemented(chain_lattice(3)));
  CHECK(!is_modular(lat_e()));
}

TEST_CASE("order, meet and join agree") {
  for (const Lattice& L : {pentagon(), diamond(), square(), lat_e(), chain_lattice(5)})
    for (int a = 0; a < L.n; ++a)
      for (int b = 0; b < L.n; ++b) {
        CHECK(L.leq(a, b) == (L.meet(a, b) == a));
        CHECK(L.leq(a, b) == (L.join(a, b) == b));
      }
}

TEST_CASE("hasse closure reproduces the strict order") {
  for (const Lattice& L : {pentagon(), lat_e(), d_plus_l2()}) {
    auto covers = hasse(L);
    std::vector<std::vector<char>> lt(L.n, std::vector<char>(L.n, 0));
    for (auto [a, b] : covers) lt[a][b] = 1;
    for (int k = 0; k < L.n; ++k)
      for (int i = 0; i < L.n; ++i)
        for (int j = 0; j < L.n; ++j)
          if (lt[i][k] && lt[k][j]) lt[i][j] = 1;
    for (int i = 0; i < L.n; ++i)
      for (int j = 0; j < L.n; ++j) CHECK(bool(lt[i][j]) == L.lt(i, j));
  }
}

TEST_CASE("distributive implies modular on the small catalog") {
  for (int n = 1; n <= 5; ++n)
    for (const Lattice& L : all_lattices(n))
      if (is_distributive(L)) CHECK(is_modular(L));
}

TEST_CASE("a lattice is a chain exactly when its diagram is a path") {
  for (int n = 2; n <= 5; ++n)
    for (const Lattice& L : all_lattices(n)) {
      auto covers = hasse(L);
      bool path = int(covers.size()) == L.n - 1;
      if (path) {
        std::vector<int> deg(L.n, 0);
        for (auto [a, b] : covers) {
          ++deg[a];
          ++deg[b];
        }
        for (int d : deg) path = path && d <= 2;
      }
      CHECK(is_chain(L) == path);
    }
}

TEST_CASE("cut points split ordinal sums") {
  CHECK(cut_points(chain_lattice(3)) == std::vector<int>{1});
  CHECK(cut_points(diamond()).empty());
  CHECK(cut_points(d_plus_l2()) == std::vector<int>{4});  // x
}

TEST_CASE("M_k builder") {
  Lattice m1 = mk_lattice(1);
  CHECK(m1.n == 3);
  CHECK(is_chain(m1));
  Lattice m4 = mk_lattice(4);
  CHECK(m4.n == 6);
  CHECK(is_modular(m4));
  CHECK(!is_distributive(m4));
}

TEST_CASE("json round trip preserves the order") {
  for (const Lattice& L : {pentagon(), lat_e(), chain_lattice(4)}) {
    Lattice back = lattice_from_json(lattice_to_json(L));
    CHECK(back.labels == L.labels);
    REQUIRE(back.n == L.n);
    for (int a = 0; a < L.n; ++a)
      for (int b = 0; b < L.n; ++b) CHECK(back.leq(a, b) == L.leq(a, b));
  }
}

TEST_CASE("dot export is deterministic and edges point upward") {
  Lattice P = pentagon();
  std::string d1 = to_dot(P), d2 = to_dot(P);
  CHECK(d1 == d2);
  CHECK(d1.find("n0 -> n1") != std::string::npos);
  CHECK(d1.find("label=\"z\"") != std::string::npos);
  CHECK(d1.find("rankdir=BT") != std::string::npos);
}
