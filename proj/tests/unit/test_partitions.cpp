#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

#include "stirbd/error.hpp"
#include "stirbd/partitions.hpp"

using namespace stirbd;

namespace {

// Every set partition of [+-n] by restricted growth strings, filtered by the
// type B/D conditions, tallied by number of nonzero pairs.
std::map<int, long> brute_force_counts(int n, bool type_d) {
  std::vector<int> elems;
  for (int i = 1; i <= n; ++i) elems.insert(elems.end(), {i, -i});
  const int size = static_cast<int>(elems.size());
  std::map<int, long> counts;
  std::vector<int> label(size, 0);
  auto check = [&](int blocks) {
    std::vector<std::set<int>> parts(blocks);
    for (int i = 0; i < size; ++i) parts[label[i]].insert(elems[i]);
    std::set<std::set<int>> all(parts.begin(), parts.end());
    int zero_blocks = 0;
    for (const auto& b : parts) {
      std::set<int> neg;
      for (int v : b) neg.insert(-v);
      if (!all.count(neg)) return;
      if (neg == b) {
        ++zero_blocks;
        if (type_d && b.size() == 2) return;
      }
    }
    if (zero_blocks > 1) return;
    ++counts[(blocks - zero_blocks) / 2];
  };
  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (i == size) {
      check(blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label[i] = b;
      self(self, i + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  if (size == 0) {
    counts[0] = 1;
    return counts;
  }
  rec(rec, 0, 0);
  return counts;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("tables of type B and D Stirling numbers") {
  const std::vector<std::vector<int>> b{{1},          {1, 1},           {1, 4, 1},
                                        {1, 13, 9, 1}, {1, 40, 58, 16, 1}, {1, 121, 330, 170, 25, 1},
                                        {1, 364, 1771, 1520, 395, 36, 1}};
  const std::vector<std::vector<int>> d{{1},          {0, 1},           {1, 2, 1},
                                        {1, 7, 6, 1}, {1, 24, 34, 12, 1}, {1, 81, 190, 110, 20, 1},
                                        {1, 268, 1051, 920, 275, 30, 1}};
  for (int n = 0; n <= 6; ++n)
    for (int r = 0; r <= n; ++r) {
      CHECK(stirling(StirlingKind::B, n, r) == b[n][r]);
      CHECK(stirling(StirlingKind::D, n, r) == d[n][r]);
    }
  CHECK(stirling(StirlingKind::B, 3, 4) == 0);
  CHECK(stirling(StirlingKind::B, 3, -1) == 0);
}

TEST_CASE("enumerated counts agree with brute force over all set partitions") {
  for (int n = 0; n <= 4; ++n) {
    const auto bb = brute_force_counts(n, false);
    const auto dd = brute_force_counts(n, true);
    for (int r = 0; r <= n; ++r) {
      CHECK(stirling(StirlingKind::B, n, r) == (bb.count(r) ? bb.at(r) : 0));
      CHECK(stirling(StirlingKind::D, n, r) == (dd.count(r) ? dd.at(r) : 0));
    }
  }
}

TEST_CASE("classical and colored Stirling numbers") {
  for (int n = 0; n <= 7; ++n)
    for (int r = 0; r <= n; ++r) CHECK(stirling(StirlingKind::classicalA, n, r) == stirling2_recurrence(n, r));
  // S_m(n,r) = sum_j C(n,j) S(n-j,r) m^(n-j-r)
  for (int m = 2; m <= 4; ++m)
    for (int n = 0; n <= 5; ++n)
      for (int r = 0; r <= n; ++r) {
        BigInt expected = 0;
        for (int j = 0; j <= n - r; ++j)
          expected += binomial(n, j) * stirling2_recurrence(n - j, r) * power(m, n - j - r);
        CHECK(stirling(StirlingKind::G, n, r, m) == expected);
      }
  for (int n = 0; n <= 5; ++n)
    for (int r = 0; r <= n; ++r) CHECK(stirling(StirlingKind::G, n, r, 2) == stirling(StirlingKind::B, n, r));
}

TEST_CASE("literal colored count differs for composite m") {
  // {1, 1^[2]} is fixed by the shift by two colors when m = 4.
  CHECK(literal_colored_stirling(1, 1, 4) == 2);
  CHECK(stirling(StirlingKind::G, 1, 1, 4) == 1);
  for (int n = 1; n <= 3; ++n)
    for (int r = 0; r <= n; ++r) CHECK(literal_colored_stirling(n, r, 3) == stirling(StirlingKind::G, n, r, 3));
}

TEST_CASE("Bstar counts all blocks") {
  // n = 1: {{1},{-1}} has two blocks, {{1,-1}} has one.
  CHECK(stirling(StirlingKind::Bstar, 1, 1) == 1);
  CHECK(stirling(StirlingKind::Bstar, 1, 2) == 1);
  BigInt total = 0;
  for (int r = 0; r <= 8; ++r) total += stirling(StirlingKind::Bstar, 4, r);
  CHECK(total == partition_total(PartitionKind::B, 4));
}

TEST_CASE("validation and canonical form") {
  const auto p = validate_signed(PartitionKind::B, 5, {{5, -2, -3}, {1, 4, -1, -4}, {2, 3, -5}});
  CHECK(p.zero_support() == std::vector<int>{1, 4});
  REQUIRE(p.pair_count() == 1);
  CHECK(p.pairs()[0] == SignedBlock{-5, 2, 3});
  CHECK(p.block_count() == 3);
  CHECK(p.expanded().size() == 3);

  // same partition from a different presentation
  CHECK(validate_signed(PartitionKind::B, {{-4, -1, 1, 4}, {-3, -2, 5}, {-5, 3, 2}}) == p);

  CHECK(code_of([] { validate_signed(PartitionKind::B, 2, {{1}, {-1}, {2}}); }) == ErrorCode::NotAPartition);
  CHECK(code_of([] { validate_signed(PartitionKind::B, 2, {{1, 2}, {-1}, {-2}}); }) == ErrorCode::MirrorViolation);
  CHECK(code_of([] { validate_signed(PartitionKind::B, 2, {{1, -1}, {2, -2}}); }) == ErrorCode::MultipleZeroBlocks);
  CHECK(code_of([] { validate_signed(PartitionKind::D, 2, {{1, -1}, {2}, {-2}}); }) == ErrorCode::SingletonZeroBlock);
  CHECK_NOTHROW(validate_signed(PartitionKind::B, 2, {{1, -1}, {2}, {-2}}));
  CHECK(code_of([] { validate_signed(PartitionKind::B, 2, {{1, 1}, {-1}, {2}, {-2}}); }) == ErrorCode::NotAPartition);
}

TEST_CASE("colored validation") {
  const int m = 3;
  // orbit of {1^0, 2^1}
  std::vector<ColoredBlock> raw;
  for (int s = 0; s < m; ++s) raw.push_back(shift_block({{1, 0}, {2, 1}}, s, m));
  const auto p = validate_colored(2, m, raw);
  CHECK(p.orbit_count() == 1);
  CHECK_FALSE(p.has_zero_block());

  CHECK(code_of([] { validate_colored(1, 1, {{{1, 0}}}); }) == ErrorCode::InvalidColorCount);
  CHECK(code_of([] { validate_colored(1, 3, {{{1, 0}, {1, 1}}, {{1, 2}}}); }) == ErrorCode::RepeatedValueInBlock);
  CHECK(code_of([] { validate_colored(1, 3, {{{1, 0}}, {{1, 1}, {1, 2}}}); }) == ErrorCode::MirrorViolation);
  CHECK(code_of([] {
          validate_colored(2, 2, {{{1, 0}, {1, 1}}, {{2, 0}, {2, 1}}});
        }) == ErrorCode::MultipleZeroBlocks);

  // m = 2 colored partitions are B-partitions
  for (const auto& cp : enumerate_colored_partitions(3, 2)) CHECK(to_signed(cp).rank() == 3);
  CHECK(enumerate_colored_partitions(3, 2).size() == enumerate_partitions(PartitionKind::B, 3).size());
}

TEST_CASE("enumeration is exhaustive, distinct and sorted") {
  for (int n = 0; n <= 5; ++n) {
    for (auto kind : {PartitionKind::B, PartitionKind::D}) {
      const auto all = enumerate_partitions(kind, n);
      CHECK(BigInt(all.size()) == partition_total(kind, n));
      CHECK(std::is_sorted(all.begin(), all.end()));
      CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
      for (const auto& p : all) REQUIRE(validate_signed(kind, n, p.expanded()) == p);
    }
  }
  for (int n = 0; n <= 3; ++n)
    for (const auto& p : enumerate_colored_partitions(n, 3)) REQUIRE(validate_colored(n, 3, p.expanded()) == p);
  for (int m = 2; m <= 4; ++m)
    for (int n = 0; n <= 3; ++n) CHECK(BigInt(enumerate_colored_partitions(n, m).size()) == colored_partition_total(n, m));
  CHECK_THROWS_AS(enumerate_partitions(PartitionKind::B, 5, 100), Error);
}

TEST_CASE("ordered partitions") {
  const auto p = validate_signed(PartitionKind::B, 3, {{1, -3}, {-1, 3}, {2}, {-2}});
  CHECK(ordering_count(p) == 8);
  const auto all = orderings(p);
  CHECK(all.size() == 8);
  std::set<std::vector<SignedBlock>> distinct;
  for (const auto& o : all) {
    distinct.insert(o.blocks());
    CHECK(o.unordered() == p);
  }
  CHECK(distinct.size() == 8);

  const auto o = OrderedSignedPartition::from_blocks(PartitionKind::B, 3, {{2}, {-2}, {-1, 3}, {-3, 1}});
  CHECK(o.leaders() == std::vector<SignedBlock>{{2}, {-1, 3}});
  CHECK(code_of([] { OrderedSignedPartition::from_blocks(PartitionKind::B, 2, {{1}, {2}, {-1}, {-2}}); }) ==
        ErrorCode::InvalidOrderedPartition);
  CHECK(code_of([] { OrderedSignedPartition::from_blocks(PartitionKind::B, 2, {{1}, {-1}, {-2, 2}}); }) ==
        ErrorCode::InvalidOrderedPartition);
  CHECK(code_of([] { OrderedSignedPartition(PartitionKind::D, 2, {1}, {{2}}); }) == ErrorCode::InvalidOrderedPartition);

  const auto cp = validate_colored(2, 3, {{{1, 0}}, {{1, 1}}, {{1, 2}}, {{2, 0}, {2, 1}, {2, 2}}});
  CHECK(ordering_count(cp) == 3);
  CHECK(orderings(cp).size() == 3);
}
