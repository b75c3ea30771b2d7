#include <catch_amalgamated.hpp>

#include "stirbd/error.hpp"
#include "stirbd/geometry.hpp"
#include "stirbd/identities.hpp"

using namespace stirbd;

namespace {

// Free points counted with no shared code: distinct nonzero magnitudes (B) or distinct magnitudes (D).
long grid_free(int n, int h, bool allow_zero) {
  long count = 0;
  std::vector<int> p(n, -h);
  while (true) {
    std::vector<int> mags;
    for (int v : p) mags.push_back(std::abs(v));
    std::sort(mags.begin(), mags.end());
    const bool distinct = std::adjacent_find(mags.begin(), mags.end()) == mags.end();
    const bool zero_ok = allow_zero || mags.empty() || mags.front() != 0;
    count += distinct && zero_ok;
    int i = n - 1;
    while (i >= 0 && p[i] == h) p[i--] = -h;
    if (i < 0) break;
    ++p[i];
  }
  return count;
}

}  // namespace

TEST_CASE("classify single points") {
  const std::vector<int> pt{0, 2, -2};
  const auto c = classify_point(ArrangementKind::B, 3, pt);
  REQUIRE_FALSE(c.missing());
  CHECK(c.partition->zero_support() == std::vector<int>{1});
  REQUIRE(c.partition->pair_count() == 1);
  CHECK(c.partition->pairs()[0] == SignedBlock{-3, 2});

  const std::vector<int> lone_zero_repeat{0, 2, -2};
  CHECK(classify_point(ArrangementKind::D, 3, lone_zero_repeat).missing());
  const std::vector<int> lone_zero{0, 1, 2};
  CHECK(classify_point(ArrangementKind::D, 3, lone_zero).partition->pair_count() == 3);
  const std::vector<int> two_zeros{0, 0, 2};
  CHECK(classify_point(ArrangementKind::D, 3, two_zeros).partition->zero_support() == std::vector<int>{1, 2});
  CHECK_THROWS_AS(classify_point(ArrangementKind::B, 2, pt), Error);
}

TEST_CASE("type B cube census") {
  for (int n = 0; n <= 3; ++n) {
    const auto r = census(ArrangementKind::B, n, 3);
    CHECK(r.total == power(7, n));
    CHECK(r.counts.size() == enumerate_partitions(PartitionKind::B, n).size());
    BigInt sum = 0;
    for (const auto& pc : r.counts) {
      CHECK(pc.count == falling_factorial(FallingKind::B, pc.partition.pair_count())(7));
      sum += pc.count;
    }
    CHECK(sum == r.total);
    CHECK(r.free_points == grid_free(n, 3, false));
    CHECK(r.missing_points == 0);
  }
}

TEST_CASE("type D cube census") {
  const auto r = census(ArrangementKind::D, 3, 3);
  CHECK(r.missing_points == 36);
  CHECK(r.total == 343);
  BigInt sum = r.missing_points;
  for (const auto& pc : r.counts) sum += pc.count;
  CHECK(sum == 343);
  CHECK(r.free_points == falling_factorial(FallingKind::D, 3, 3)(7));
  CHECK(r.free_points == grid_free(3, 3, true));
  CHECK(census(ArrangementKind::D, 2, 3).missing_points == 0);
}

TEST_CASE("torus census") {
  for (int n = 0; n <= 2; ++n) {
    const auto r = torus_census(n, 3, 5);
    CHECK(r.total == power(16, n));
    CHECK(r.free_points == falling_factorial(FallingKind::G, n, 0, 3)(16));
    for (const auto& pc : r.counts)
      CHECK(pc.count == falling_factorial(FallingKind::G, pc.partition.orbit_count(), 0, 3)(16));
  }
  CHECK_THROWS_AS(torus_census(2, 1, 5), Error);
}

TEST_CASE("free point counts") {
  for (int n = 0; n <= 4; ++n) {
    CHECK(free_point_count(FreePointKind::B, n, 9) == falling_factorial(FallingKind::B, n)(9));
    CHECK(free_point_count(FreePointKind::D, n, 9) == falling_factorial(FallingKind::D, n, n)(9));
  }
  for (int n = 0; n <= 3; ++n)
    CHECK(free_point_count(FreePointKind::G, n, 13, 4) == falling_factorial(FallingKind::G, n, 0, 4)(13));
  CHECK_THROWS_AS(free_point_count(FreePointKind::B, 2, 8), Error);
  CHECK_THROWS_AS(census(ArrangementKind::B, 12, 3), Error);
}
