#include <catch_amalgamated.hpp>

#include <map>
#include <set>

#include "stirbd/error.hpp"
#include "stirbd/groups.hpp"

using namespace stirbd;

namespace {

// Descent count straight from the definition, with the virtual entry at position 0.
int naive_descents(const std::vector<int>& w, int zero_value, bool with_zero) {
  std::vector<int> ext{zero_value};
  ext.insert(ext.end(), w.begin(), w.end());
  int d = 0;
  for (std::size_t i = with_zero ? 0 : 1; i + 1 < ext.size(); ++i) d += ext[i] > ext[i + 1];
  return d;
}

std::vector<int> window_of(const SignedPermutation& p) { return {p.window().begin(), p.window().end()}; }

}  // namespace

TEST_CASE("signed permutation validation") {
  CHECK_NOTHROW(SignedPermutation({-2, 3, 5, 1, -4}));
  CHECK_THROWS_AS(SignedPermutation({1, 1}), Error);
  CHECK_THROWS_AS(SignedPermutation({1, -1}), Error);
  CHECK_THROWS_AS(SignedPermutation({0, 1}), Error);
  CHECK_THROWS_AS(SignedPermutation({1, 3}), Error);
  try {
    SignedPermutation({2, 2});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidPermutation);
  }
  const SignedPermutation p({-2, 3, 5, 1, -4});
  CHECK(p(1) == -2);
  CHECK(p(5) == -4);
  CHECK(p.negative_count() == 2);
  CHECK(p.is_even());
}

TEST_CASE("type B and D descent sets") {
  const SignedPermutation g({1, -3, 4, -5, -2, -6});
  CHECK(descent_set(g, Flavor::B).positions == std::vector<int>{1, 3, 5});
  CHECK(descent_set(g, Flavor::D).positions == std::vector<int>{0, 1, 3, 5});
  CHECK(des_stat(g, Stat::desB) == 3);
  CHECK(des_stat(g, Stat::desD) == 4);

  const SignedPermutation odd({-1, 2});
  CHECK_THROWS_AS(descent_set(odd, Flavor::D), Error);
  CHECK_THROWS_AS(des_stat(odd, Stat::desD), Error);
  CHECK_THROWS_AS(descent_set(odd, Flavor::G), Error);
}

TEST_CASE("colored descents use the color order") {
  // [3, 1^[1], 2^[2]] in G_{3,3}
  const ColoredPermutation pi(3, {{3, 0}, {1, 1}, {2, 2}});
  CHECK(descent_set(pi, Flavor::G).size() == 2);
  CHECK(des_stat(pi, Stat::desG) == 2);
  CHECK_THROWS_AS(ColoredPermutation(3, {{1, 3}}), Error);
  CHECK_THROWS_AS(ColoredPermutation(2, {{1, 0}, {1, 1}}), Error);
  CHECK_THROWS_AS(des_stat(pi, Stat::desB), Error);

  // m = 1 reduces to the ordinary descent count.
  const ColoredPermutation plain(1, {{2, 0}, {3, 0}, {1, 0}});
  CHECK(des_stat(plain, Stat::desG) == 1);
}

TEST_CASE("flag descents") {
  const SignedPermutation p({-2, 3, 5, 1, -4});
  CHECK(des_stat(p, Stat::fdes) == 2 * 2 + 1);
  // color order: every negative entry precedes every positive one
  CHECK(des_stat(p, Stat::fdes, DescentOrder::color) == 2 * 2 + 1);
  CHECK(des_stat(SignedPermutation({-1, -2}), Stat::fdes, DescentOrder::natural) == 3);
  CHECK(des_stat(SignedPermutation({-1, -2}), Stat::fdes, DescentOrder::color) == 1);
}

TEST_CASE("enumeration matches group orders and is exhaustive") {
  for (int n = 0; n <= 5; ++n) {
    for (auto kind : {GroupKind::A, GroupKind::B, GroupKind::D}) {
      const auto all = enumerate_group(kind, n);
      CHECK(all.size() == group_order(kind, n));
      std::set<std::vector<int>> distinct;
      for (const auto& p : all) {
        distinct.insert(window_of(p));
        if (kind == GroupKind::A) CHECK(p.negative_count() == 0);
        if (kind == GroupKind::D) CHECK(p.is_even());
      }
      CHECK(distinct.size() == all.size());
      CHECK(std::is_sorted(all.begin(), all.end()));
    }
  }
  for (int m = 1; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) CHECK(enumerate_colored(n, m).size() == group_order(GroupKind::G, n, m));
  CHECK(group_order(GroupKind::B, 8) == 10'321'920);
  CHECK(group_order(GroupKind::D, 1) == 1);
}

TEST_CASE("enumeration caps") {
  CHECK_THROWS_AS(enumerate_group(GroupKind::B, 9), Error);
  CHECK_THROWS_AS(for_each_colored(8, 3, [](const ColoredPermutation&) {}), Error);
  CHECK_THROWS_AS(for_each_signed(GroupKind::B, 4, [](const SignedPermutation&) {}, 10), Error);
  try {
    enumerate_group(GroupKind::B, 9);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeOverflow);
  }
  set_group_cap(5);
  CHECK(group_cap(GroupKind::B) == 5);
  CHECK_THROWS_AS(enumerate_group(GroupKind::A, 3), Error);
  set_group_cap(0);
  CHECK(group_cap(GroupKind::B) == kDefaultGroupCap);
  CHECK(group_cap(GroupKind::G) == kDefaultColoredCap);
}

TEST_CASE("descent kernels agree with the definitions") {
  for (int n = 1; n <= 5; ++n) {
    for_each_signed(GroupKind::B, n, [&](const SignedPermutation& p) {
      const auto w = window_of(p);
      REQUIRE(des_stat(p, Stat::desB) == naive_descents(w, 0, true));
      REQUIRE(kernel::des_a(p.window()) == naive_descents(w, 0, false));
      if (p.is_even() && n >= 2) REQUIRE(des_stat(p, Stat::desD) == naive_descents(w, -w[1], true));
    });
  }
}

TEST_CASE("type B Eulerian distribution agrees with its recurrence") {
  // A_B(n,k) = (2k+1) A_B(n-1,k) + (2n-2k+1) A_B(n-1,k-1)
  std::vector<std::vector<long>> rec{{1}};
  for (int n = 1; n <= 6; ++n) {
    std::vector<long> row(n + 1, 0);
    for (int k = 0; k <= n; ++k) {
      const long a = k < n ? rec[n - 1][k] : 0;
      const long b = k >= 1 ? rec[n - 1][k - 1] : 0;
      row[k] = (2 * k + 1) * a + (2 * n - 2 * k + 1) * b;
    }
    rec.push_back(row);
  }
  for (int n = 0; n <= 6; ++n) {
    std::vector<long> hist(n + 1, 0);
    for_each_signed(GroupKind::B, n, [&](const SignedPermutation& p) { ++hist[des_stat(p, Stat::desB)]; });
    CHECK(hist == rec[n]);
  }
}

TEST_CASE("desG on G_{2,n} has the desB distribution") {
  for (int n = 0; n <= 5; ++n) {
    std::map<int, long> g, b;
    for_each_colored(n, 2, [&](const ColoredPermutation& p) { ++g[des_stat(p, Stat::desG)]; });
    for_each_signed(GroupKind::B, n, [&](const SignedPermutation& p) { ++b[des_stat(p, Stat::desB)]; });
    CHECK(g == b);
  }
}
