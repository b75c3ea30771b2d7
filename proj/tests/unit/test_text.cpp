#include <catch_amalgamated.hpp>

#include "stirbd/error.hpp"
#include "stirbd/text.hpp"

using namespace stirbd;
using text::json;

TEST_CASE("parsers") {
  CHECK(text::parse_int_list(" 1, -2 ,3") == std::vector<int>{1, -2, 3});
  CHECK(text::parse_int_list("").empty());
  CHECK(text::parse_signed_permutation("[-2,3,5,1,-4]") == SignedPermutation({-2, 3, 5, 1, -4}));
  CHECK(text::parse_spots("2,0") == SpotSet{0, 2});
  CHECK(text::parse_colored_permutation("3^0,1^1,2^2", 3) == ColoredPermutation(3, {{3, 0}, {1, 1}, {2, 2}}));
  CHECK(text::parse_block_list("[{-1},{1},{2,-3},{-2,3}]").size() == 4);
  CHECK_THROWS_AS(text::parse_int_list("1,,2"), Error);
  CHECK_THROWS_AS(text::parse_int_list("1,a"), Error);
  CHECK_THROWS_AS(text::parse_block_list("[{1},{2]"), Error);
  CHECK_THROWS_AS(text::partition_kind_from("X"), Error);
}

TEST_CASE("formatting") {
  const auto p = validate_signed(PartitionKind::B, 5, {{1, 4, -1, -4}, {-5, 2}, {5, -2}, {3}, {-3}});
  CHECK(text::format(p) == "Z{1,4} | {-5,2} | {3}");
  CHECK(text::format(SignedPermutation({-2, 1})) == "-2,1");
  CHECK(text::format_spots({0, 3}) == "0,3");
  const auto o = text::parse_ordered(PartitionKind::B, "[{-4,-1,1,4},{3},{-3},{-5,2},{5,-2}]");
  CHECK(text::format(o) == "[{-4,-1,1,4},{3},{-3},{-5,2},{-2,5}]");
  CHECK(text::format(validate_signed(PartitionKind::B, 0, {})) == "{}");
}

TEST_CASE("JSON documents round trip") {
  const SignedPermutation perm({-2, 3, 5, 1, -4});
  const auto doc = text::to_json(PartitionKind::D, perm, {0, 2});
  const auto back = text::permutation_from_json(json::parse(doc.dump()));
  CHECK(back.kind == PartitionKind::D);
  CHECK(back.permutation == perm);
  CHECK(back.spots == SpotSet{0, 2});

  const auto o = text::parse_ordered(PartitionKind::D, "[{-4,-1,1,4},{3},{-3},{-5,2},{5,-2}]");
  CHECK(text::ordered_from_json(json::parse(text::to_json(o).dump())) == o);

  for (const auto& p : enumerate_partitions(PartitionKind::D, 3))
    CHECK(text::partition_from_json(json::parse(text::to_json(p).dump())) == p);
  for (const auto& p : enumerate_colored_partitions(2, 3))
    CHECK(text::colored_partition_from_json(json::parse(text::to_json(p).dump())) == p);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(text::permutation_from_json(json::parse(R"({"kind":"B"})")), Error);
  CHECK_THROWS_AS(text::permutation_from_json(json::parse(R"({"kind":"B","window":[1,"x"]})")), Error);
  CHECK_THROWS_AS(text::ordered_from_json(json::parse(R"({"kind":"B","n":1})")), Error);
  CHECK_THROWS_AS(text::ordered_from_json(json::parse("[1,2]")), Error);
  try {
    text::ordered_from_json(json::parse(R"({"kind":"B","n":2,"blocks":[[1],[2],[-1],[-2]]})"));
    FAIL("accepted a non-adjacent mirror pair");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidOrderedPartition);
  }
}

TEST_CASE("report and census documents") {
  const auto r = verify_stirling_eulerian(IdentityKind::B, 0, 2);
  const auto j = text::to_json(r);
  CHECK(j["identity"] == "thm-4.1");
  CHECK(j["passed"] == true);
  CHECK(j["instances"].size() == 6);
  const auto c = text::to_json(census(ArrangementKind::D, 3, 3));
  CHECK(c["missing_points"] == 36);
  CHECK(c["total"] == 343);
  CHECK(text::to_json(torus_census(1, 3, 5))["total"] == 16);
}
