#include <doctest.h>

#include "cyclab/families.hpp"
#include "oracles.hpp"

using namespace cyclab;

TEST_CASE("connected graph enumeration matches the known counts") {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) CHECK(oracle::connected_graphs(n).size() == expected[n - 1]);
}

TEST_CASE("brute connectivity on small families") {
  CHECK(oracle::connectivity(families::complete(5)) == 4);
  CHECK(oracle::connectivity(families::cycle(6)) == 2);
  CHECK(oracle::connectivity(families::path(4)) == 1);
  CHECK(oracle::connectivity(families::petersen()) == 3);
  CHECK(oracle::connectivity(families::k_bipartite(4)) == 4);
}

TEST_CASE("cycle table reproduces textbook cyclability") {
  CHECK(oracle::CycleTable(families::complete(5)).cyclability() == 5);
  CHECK(oracle::CycleTable(families::path(5)).cyclability() == 0);
  // Petersen is hypohamiltonian: every 9 vertices lie on a cycle, all 10 do not.
  CHECK(oracle::CycleTable(families::petersen()).cyclability() == 9);
  oracle::CycleTable k33(families::k_bipartite(3));
  CHECK(k33.cmn(2, 1));
  CHECK_FALSE(k33.cmn(3, 1));
}

TEST_CASE("path system search") {
  Graph c6 = families::cycle(6);
  CHECK(oracle::fan_exists(c6, 0, {2, 4}, 2));
  CHECK(oracle::fan_exists(c6, 0, {2, 3}, 2));
  CHECK(oracle::link_exists(c6, {0, 1}, {3, 4}, 2));
  Graph p4 = families::path(4);
  CHECK_FALSE(oracle::fan_exists(p4, 0, {2, 3}, 2));
  CHECK_FALSE(oracle::link_exists(p4, {0, 1}, {2, 3}, 2));
  CHECK(oracle::link_exists(p4, {0, 3}, {1, 2}, 2));
  CHECK(oracle::link_exists(families::k_bipartite(3), {0, 1, 2}, {3, 4, 5}, 3));
}

TEST_CASE("inflated-cycle oracle agrees with the cycle table on inflated K4") {
  Graph k4 = families::complete(4);
  Graph big = families::inflate(k4, 3);
  oracle::CycleTable table(big);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> vertex(0, big.order() - 1);
  for (int trial = 0; trial < 2000; ++trial) {
    oracle::Mask inc = 0, av = 0;
    int ni = 1 + trial % 6, na = trial % 3;
    while (std::popcount(inc) < ni) inc |= oracle::Mask{1} << vertex(rng);
    while (std::popcount(av) < na) {
      oracle::Mask b = oracle::Mask{1} << vertex(rng);
      if (!(b & inc)) av |= b;
    }
    CHECK(oracle::inflated_cycle_exists(k4, 3, inc, av) == table.exists(inc, av));
  }
}
