#include <catch_amalgamated.hpp>

#include <set>

#include "pcat/checks.hpp"
#include "pcat/enumerate.hpp"
#include "support/oracles.hpp"

using namespace pcat;

TEST_CASE("NC pairing and partition counts are Catalan numbers") {
  const std::uint64_t expected[] = {1, 2, 5, 14, 42, 132, 429, 1430};
  for (int k = 1; k <= 8; ++k) {
    CHECK(enumerate_nc_pairings(0, 2 * k).size() == expected[k - 1]);
    CHECK(enumerate_nc_partitions(0, k).size() == oracle::catalan(k));
    CHECK(catalan(k) == oracle::catalan(k));
  }
}

TEST_CASE("enumeration matches the brute-force filter for k+l <= 8") {
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      INFO("k=" << k << " l=" << n - k);
      CHECK(enumerate_nc_partitions(k, n - k).size() == oracle::count_noncrossing(k, n - k, false));
      CHECK(enumerate_nc_pairings(k, n - k).size() == oracle::count_noncrossing(k, n - k, true));
    }
}

TEST_CASE("enumerated lists are duplicate-free, sorted and noncrossing") {
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto v = enumerate_nc_partitions(k, n - k);
      CHECK(std::is_sorted(v.begin(), v.end()));
      CHECK(std::set<SetPartition>(v.begin(), v.end()).size() == v.size());
      for (const auto& p : v) {
        REQUIRE(p.upper_count() == k);
        REQUIRE(is_noncrossing(p));
      }
      for (const auto& p : enumerate_nc_pairings(k, n - k)) REQUIRE(p.is_pairing());
    }
}

TEST_CASE("odd pairings are empty and the empty diagram exists once") {
  CHECK(enumerate_nc_pairings(0, 3).empty());
  CHECK(enumerate_nc_pairings(2, 1).empty());
  CHECK(enumerate_pairings(1, 2).empty());
  CHECK(enumerate_nc_partitions(0, 0).size() == 1);
  CHECK(enumerate_nc_pairings(0, 0).size() == 1);
}

TEST_CASE("all pairings count (2m-1)!!") {
  CHECK(enumerate_pairings(0, 2).size() == 1);
  CHECK(enumerate_pairings(2, 2).size() == 3);
  CHECK(enumerate_pairings(0, 6).size() == 15);
  CHECK(enumerate_pairings(4, 4).size() == 105);
  for (int n = 0; n <= 8; n += 2)
    for (int k = 0; k <= n; ++k) {
      std::size_t brute = 0;
      for (const auto& labels : oracle::set_partitions(n)) brute += oracle::is_pairing(labels);
      CHECK(enumerate_pairings(k, n - k).size() == brute);
    }
}

TEST_CASE("catalan table agrees") {
  for (const auto& row : catalan_table(8)) {
    CHECK(row.nc_pairings == oracle::catalan(row.k));
    CHECK(row.nc_partitions == oracle::catalan(row.k));
  }
}
