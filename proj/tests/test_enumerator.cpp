#include "tsys/enumerator.hpp"

#include "doctest.h"
#include "oracle.hpp"
#include "tsys/recursions.hpp"

#include <algorithm>
#include <tuple>

using namespace tsys;

namespace {

std::shared_ptr<const Lattice> grid(int n) { return std::make_shared<const Lattice>(make_grid(n)); }

struct Totals {
  std::size_t all = 0, liftable = 0;
};

Totals totals(const StrataMap& strata) {
  Totals t;
  for (const auto& [cell, count] : strata) {
    t.all += count;
    if (cell.liftable) t.liftable += count;
  }
  return t;
}

}  // namespace

TEST_CASE("chains give Catalan many systems") {
  const std::size_t expected[] = {1, 2, 5, 14, 42, 132, 429};
  for (int n = 0; n <= 6; ++n) {
    const auto result = enumerate_all(std::make_shared<const Lattice>(make_chain(n)));
    CHECK(result.systems.size() == expected[n]);
    CHECK(result.strata.empty());
  }
  for (int n = 0; n <= 8; ++n) CHECK(count_catalan_check(n));
}

TEST_CASE("grid counts for n <= 5") {
  const std::size_t all[] = {2, 10, 68, 544, 4828, 46124};
  const std::size_t liftable[] = {2, 9, 56, 416, 3457, 31063};
  for (int n = 0; n <= 5; ++n) {
    const auto result = enumerate_all(grid(n));
    CHECK(result.systems.size() == all[n]);
    const Totals t = totals(result.strata);
    CHECK(t.all == all[n]);
    CHECK(t.liftable == liftable[n]);
  }
}

#ifdef TSYS_ORACLE_N6
TEST_CASE("grid count and strata for n = 6") {
  const auto result = enumerate_all(grid(6));
  CHECK(result.systems.size() == 465932);
  CHECK(totals(result.strata).liftable == 295834);
  std::map<std::tuple<int, int, GridElement>, std::size_t> all, liftable;
  for (const auto& [cell, count] : result.strata) {
    all[{cell.stationary, cell.extendable, cell.minimal_fibrant}] += count;
    if (cell.liftable) liftable[{cell.stationary, cell.extendable, cell.minimal_fibrant}] += count;
  }
  for (int k = 1; k <= 7; ++k)
    for (int l = 1; l <= 7; ++l)
      for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 6; ++b) {
          const GridElement e{a, b};
          CHECK(BigCount(all[{k, l, e}]) == count_T_stratum(6, k, l, e));
          CHECK(BigCount(liftable[{k, l, e}]) == count_L_stratum(6, k, l, e));
        }
}
#endif

TEST_CASE("agrees with testing every subset of comparable pairs") {
  const std::vector<std::pair<tsys::Carrier, oracle::Poset>> carriers = {
      {grid(0), oracle::grid(0)},
      {grid(1), oracle::grid(1)},
      {grid(2), oracle::grid(2)},
      {std::make_shared<const Lattice>(make_chain(4)), oracle::chain(4)},
  };
  for (const auto& [carrier, poset] : carriers) {
    std::vector<TransferSystem> naive;
    for (const auto& r : oracle::all_systems(poset)) naive.push_back(oracle::to_system(carrier, r));
    std::sort(naive.begin(), naive.end());
    CHECK(enumerate_all(carrier).systems == naive);
  }

  // A lattice that is neither a chain nor a grid: the cube [1] x [1] x [1].
  const auto cube = std::make_shared<const Lattice>(product(product(make_chain(1), make_chain(1)), make_chain(1)));
  std::size_t naive_count = 0;
  const oracle::Poset p = oracle::from_lattice(*cube);
  const auto pairs = oracle::comparable_pairs(p);
  REQUIRE(pairs.size() == 19);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    TransferSystem::Rows rows(cube->size(), 0);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1u) rows[pairs[i].first] |= std::uint64_t{1} << pairs[i].second;
    naive_count += is_transfer_system(*cube, rows).ok();
  }
  CHECK(enumerate_all(cube).systems.size() == naive_count);
}

TEST_CASE("every member is a closed transfer system and the list is canonical") {
  for (int n = 0; n <= 4; ++n) {
    const auto l = grid(n);
    const auto result = enumerate_all(l);
    CHECK(std::is_sorted(result.systems.begin(), result.systems.end()));
    CHECK(std::adjacent_find(result.systems.begin(), result.systems.end()) == result.systems.end());
    CHECK(result.systems.front() == TransferSystem::discrete(l));
    CHECK(result.systems.back() == TransferSystem::complete(l));
    REQUIRE(result.discoveries.size() == result.systems.size());
    for (std::size_t i = 0; i < result.systems.size(); ++i) {
      const auto& t = result.systems[i];
      CHECK(is_transfer_system(t));
      const auto pairs = t.pairs();
      CHECK(closure(l, pairs) == t);
      // Only the discrete system is never reached from a proper subsystem.
      CHECK((result.discoveries[i] == 0) == (t.pair_count() == 0));
    }
  }
}

TEST_CASE("enumeration is deterministic") {
  const auto a = enumerate_all(grid(4));
  const auto b = enumerate_all(grid(4));
  CHECK(a.systems == b.systems);
  CHECK(a.strata == b.strata);
  CHECK(a.discoveries == b.discoveries);
}

TEST_CASE("budget") {
  try {
    enumerate_all(grid(3), {100});
    FAIL("no exception");
  } catch (const BudgetExceeded& e) {
    CHECK(e.count() == 100);
  }
  CHECK(enumerate_all(grid(3), {544}).systems.size() == 544);
}

TEST_CASE("strata marginals") {
  for (int n = 0; n <= 4; ++n) {
    const auto result = enumerate_all(grid(n));
    CHECK(stratify(result.systems) == result.strata);

    std::map<int, std::size_t> tam_row;
    std::size_t max_extendable_liftable = 0;
    for (const auto& [cell, count] : result.strata) {
      CHECK(cell.stationary >= 1);
      CHECK(cell.stationary <= n + 1);
      CHECK(cell.extendable >= 1);
      CHECK(cell.extendable <= n + 1);
      if (cell.liftable && cell.full_right_vertical) tam_row[cell.stationary] += count;
      if (cell.liftable && cell.extendable == n + 1) max_extendable_liftable += count;
    }
    for (int k = 1; k <= n + 1; ++k) CHECK(BigCount(tam_row[k]) == tam(n, k));
    CHECK(BigCount(max_extendable_liftable) == schroder(n + 1));
  }
  const auto two = enumerate_all(grid(2));
  std::size_t liftable_full = 0;
  for (const auto& [cell, count] : two.strata)
    if (cell.liftable && cell.extendable == 3) liftable_full += count;
  CHECK(liftable_full == 22);
}
