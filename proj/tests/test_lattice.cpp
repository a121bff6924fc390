#include "tsys/lattice.hpp"

#include "doctest.h"
#include "oracle.hpp"

#include <numeric>
#include <sstream>

using namespace tsys;

namespace {

OrderMatrix order_of(int size, const std::function<bool(int, int)>& leq) {
  OrderMatrix m(size, std::vector<bool>(size));
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) m[x][y] = leq(x, y);
  return m;
}

void check_against_oracle(const Lattice& l, const oracle::Poset& p) {
  REQUIRE(static_cast<int>(l.size()) == p.size);
  for (int x = 0; x < p.size; ++x)
    for (int y = 0; y < p.size; ++y) {
      CHECK(l.leq(x, y) == p.leq(x, y));
      CHECK(static_cast<int>(l.meet(x, y)) == oracle::meet(p, x, y));
      CHECK(static_cast<int>(l.join(x, y)) == oracle::join(p, x, y));
    }
}

}  // namespace

TEST_CASE("chains") {
  const Lattice c0 = make_chain(0);
  CHECK(c0.size() == 1);
  CHECK(c0.bottom() == c0.top_element());

  const Lattice c2 = make_chain(2);
  CHECK(c2.size() == 3);
  CHECK(c2.meet(0, 2) == 0);
  CHECK(c2.join(1, 2) == 2);

  const Lattice c5 = make_chain(5);
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y) CHECK(c5.leq(x, y) == (x <= y));
  check_against_oracle(c5, oracle::chain(5));
}

TEST_CASE("grids match the componentwise order") {
  for (int n = 0; n <= 7; ++n) {
    const Lattice g = make_grid(n);
    CHECK(g.size() == static_cast<std::size_t>(2 * (n + 1)));
    CHECK(g.grid_n() == n);
    CHECK(g.bottom() == GridElement{0, 0}.index(n));
    CHECK(g.top_element() == GridElement{1, n}.index(n));
    check_against_oracle(g, oracle::grid(n));
  }
  const Lattice g3 = make_grid(3);
  CHECK(g3.meet(GridElement{0, 1}.index(3), GridElement{1, 0}.index(3)) == GridElement{0, 0}.index(3));
  CHECK(product(make_chain(1), make_chain(0)).size() == 2);
}

TEST_CASE("grid element indexing round-trips") {
  for (int n = 0; n <= 6; ++n)
    for (Element e = 0; e < static_cast<Element>(2 * (n + 1)); ++e)
      CHECK(GridElement::from_index(e, n).index(n) == e);
}

TEST_CASE("product is row-major with the first factor major") {
  const Lattice p = product(make_chain(2), make_chain(3));
  const oracle::Poset expected{12, [](int x, int y) { return x / 4 <= y / 4 && x % 4 <= y % 4; }};
  check_against_oracle(p, expected);
  CHECK_FALSE(p.grid_n().has_value());
}

TEST_CASE("absorption holds on every built lattice up to 16 elements") {
  std::vector<Lattice> lattices;
  for (int n = 0; n <= 15; ++n) lattices.push_back(make_chain(n));
  for (int n = 0; n <= 7; ++n) lattices.push_back(make_grid(n));
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      if ((a + 1) * (b + 1) <= 16) lattices.push_back(product(make_chain(a), make_chain(b)));
  lattices.push_back(product(product(make_chain(1), make_chain(1)), product(make_chain(1), make_chain(1))));
  for (const auto& l : lattices) {
    REQUIRE(l.size() <= 16);
    for (Element x = 0; x < l.size(); ++x)
      for (Element y = 0; y < l.size(); ++y) {
        CHECK(l.meet(x, l.join(x, y)) == x);
        CHECK(l.join(x, l.meet(x, y)) == x);
        CHECK(l.leq(l.bottom(), x));
        CHECK(l.leq(x, l.top_element()));
      }
  }
}

TEST_CASE("validate reports the first violated axiom") {
  SUBCASE("chain is accepted") {
    const Lattice l = Lattice::validate(order_of(4, [](int x, int y) { return x <= y; }));
    CHECK(l.size() == 4);
    CHECK(l.bottom() == 0);
    CHECK(l.top_element() == 3);
  }
  SUBCASE("not reflexive") {
    OrderMatrix m = order_of(2, [](int x, int y) { return x <= y; });
    m[1][1] = false;
    try {
      Lattice::validate(m);
      FAIL("accepted");
    } catch (const LatticeError& e) {
      CHECK(e.kind() == LatticeError::Kind::NotAPartialOrder);
      CHECK(e.x() == 1);
    }
  }
  SUBCASE("not antisymmetric") {
    OrderMatrix m = order_of(3, [](int x, int y) { return x <= y; });
    m[2][1] = true;
    try {
      Lattice::validate(m);
      FAIL("accepted");
    } catch (const LatticeError& e) {
      CHECK(e.kind() == LatticeError::Kind::NotAPartialOrder);
      CHECK(e.x() == 1);
      CHECK(e.y() == 2);
    }
  }
  SUBCASE("two-element antichain has no meet") {
    try {
      Lattice::validate(order_of(2, [](int x, int y) { return x == y; }));
      FAIL("accepted");
    } catch (const LatticeError& e) {
      CHECK(e.kind() == LatticeError::Kind::NoMeet);
      CHECK(e.x() == 0);
      CHECK(e.y() == 1);
    }
  }
  SUBCASE("diamond missing its bottom has no meet") {
    // 0, 1, 2 pairwise incomparable under the top 3.
    try {
      Lattice::validate(order_of(4, [](int x, int y) { return x == y || y == 3; }));
      FAIL("accepted");
    } catch (const LatticeError& e) {
      CHECK(e.kind() == LatticeError::Kind::NoMeet);
    }
  }
  SUBCASE("V shape has meets but no join") {
    try {
      Lattice::validate(order_of(3, [](int x, int y) { return x == y || x == 0; }));
      FAIL("accepted");
    } catch (const LatticeError& e) {
      CHECK(e.kind() == LatticeError::Kind::NoJoin);
      CHECK(e.x() == 1);
      CHECK(e.y() == 2);
    }
  }
}

TEST_CASE("up-sets and their complements") {
  const Lattice g3 = make_grid(3);
  const Element x = GridElement{0, 1}.index(3);

  const SubLattice up = up_set(g3, x);
  CHECK(up.lattice->size() == 6);
  CHECK(up.lattice->grid_n() == 2);
  CHECK(up.embedding[up.lattice->bottom()] == x);
  check_against_oracle(*up.lattice, oracle::grid(2));

  const SubSemilattice down = up_set_complement(g3, x);
  CHECK(down.semilattice->size() == 2);
  CHECK(down.semilattice->grid_n() == 0);
  CHECK(down.embedding == std::vector<Element>{GridElement{0, 0}.index(3), GridElement{1, 0}.index(3)});

  CHECK(up_set(g3, g3.top_element()).lattice->size() == 1);
  CHECK(up_set(g3, g3.bottom()).lattice->size() == g3.size());
  try {
    up_set_complement(g3, g3.bottom());
    FAIL("accepted");
  } catch (const LatticeError& e) {
    CHECK(e.kind() == LatticeError::Kind::EmptyComplement);
  }

  const Lattice c4 = make_chain(4);
  const SubSemilattice below_top = up_set_complement(c4, 4);
  CHECK(below_top.semilattice->size() == 4);
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) CHECK(below_top.semilattice->leq(a, b) == (a <= b));

  const Lattice g2 = make_grid(2);
  const SubSemilattice row = up_set_complement(g2, GridElement{1, 0}.index(2));
  CHECK(row.embedding == std::vector<Element>{0, 1, 2});
  for (Element a = 0; a < 3; ++a)
    for (Element b = 0; b < 3; ++b) CHECK(row.semilattice->leq(a, b) == (a <= b));
}

TEST_CASE("up-set and complement partition the carrier") {
  for (int n = 0; n <= 5; ++n) {
    const Lattice g = make_grid(n);
    for (Element x = 0; x < g.size(); ++x) {
      std::vector<int> seen(g.size(), 0);
      for (Element e : up_set(g, x).embedding) ++seen[e];
      if (x != g.bottom())
        for (Element e : up_set_complement(g, x).embedding) ++seen[e];
      CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    }
  }
}

TEST_CASE("up-set complements are meet-closed with the parent meet") {
  const Lattice g = make_grid(4);
  for (Element x = 1; x < g.size(); ++x) {
    const SubSemilattice s = up_set_complement(g, x);
    for (Element a = 0; a < s.semilattice->size(); ++a)
      for (Element b = 0; b < s.semilattice->size(); ++b)
        CHECK(s.embedding[s.semilattice->meet(a, b)] == g.meet(s.embedding[a], s.embedding[b]));
  }
}

TEST_CASE("grid duality reverses the order and is an involution") {
  for (int n = 0; n <= 8; ++n) {
    const Lattice g = make_grid(n);
    const DualityMap d = grid_duality(n);
    CHECK(is_order_reversing(g, d));
    for (Element x = 0; x < g.size(); ++x) {
      CHECK(d(d(x)) == x);
      for (Element y = 0; y < g.size(); ++y) CHECK(g.leq(x, y) == g.leq(d(y), d(x)));
    }
    CHECK(d(GridElement{1, n}.index(n)) == GridElement{0, 0}.index(n));
  }
  CHECK(grid_duality(3)(GridElement{0, 1}.index(3)) == GridElement{1, 2}.index(3));

  DualityMap identity{std::vector<Element>(4)};
  std::iota(identity.perm.begin(), identity.perm.end(), Element{0});
  CHECK_FALSE(is_order_reversing(make_chain(3), identity));
}

TEST_CASE("covering-pair text format round-trips") {
  const Lattice g = make_grid(2);
  std::ostringstream out;
  write_lattice(out, g);
  CHECK(out.str() == "n=6\n0<1\n0<3\n1<2\n1<4\n2<5\n3<4\n4<5\n");

  std::istringstream in(out.str());
  const Lattice back = read_lattice(in);
  check_against_oracle(back, oracle::grid(2));

  std::ostringstream again;
  write_lattice(again, back);
  CHECK(again.str() == out.str());
}

TEST_CASE("malformed lattice files are rejected") {
  for (const char* text : {"", "n=3\n0<5\n", "size 3\n", "n=2\n0<1\n1<0\n", "n=3\n0<1\n0<2\n"}) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_lattice(in), LatticeError);
  }
}
