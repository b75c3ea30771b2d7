#pragma once

// Text and JSON encodings shared by the CLI and the tests.
//
//   signed permutation   "-2,3,5,1,-4"
//   colored permutation  "3^0,1^1,2^2"       (m carried separately)
//   spot set             "0,2"               (empty string for none)
//   partition            "Z{1,4} | {-5,2} | {3}"   zero support, then pair representatives
//   ordered partition    "[{-4,-1,1,4},{3},{-3},{-5,2},{-2,5}]"   full block sequence

#include <string>
#include <string_view>

#include "json.hpp"
#include "stirbd/bijections.hpp"
#include "stirbd/geometry.hpp"
#include "stirbd/groups.hpp"
#include "stirbd/identities.hpp"
#include "stirbd/partitions.hpp"

namespace stirbd::text {

using nlohmann::json;

// All parsers throw Error(ParseError) on malformed text.
std::vector<int> parse_int_list(std::string_view s);
SignedPermutation parse_signed_permutation(std::string_view s);
ColoredPermutation parse_colored_permutation(std::string_view s, int colors);
SpotSet parse_spots(std::string_view s);
std::vector<SignedBlock> parse_block_list(std::string_view s);  // "[{..},{..}]" or "{..},{..}"
OrderedSignedPartition parse_ordered(PartitionKind kind, std::string_view s, int n = -1);

std::string format(const SignedPermutation& p);
std::string format(const ColoredPermutation& p);
std::string format_spots(const SpotSet& s);
std::string format(const SignedBlock& b);
std::string format(const ColoredBlock& b);
std::string format(const SignedPartition& p);
std::string format(const ColoredPartition& p);
std::string format(const OrderedSignedPartition& p);

char kind_letter(PartitionKind kind);
PartitionKind partition_kind_from(std::string_view letter);

// Structured documents.
json to_json(PartitionKind kind, const SignedPermutation& p, const SpotSet& spots);
json to_json(const OrderedSignedPartition& p);
json to_json(const SignedPartition& p);
json to_json(const ColoredPartition& p);
json to_json(const VerificationReport& r);
json to_json(const CensusResult& c);
json to_json(const TorusCensusResult& c);

struct PermutationDocument {
  PartitionKind kind = PartitionKind::B;
  SignedPermutation permutation;
  SpotSet spots;
};

PermutationDocument permutation_from_json(const json& doc);
OrderedSignedPartition ordered_from_json(const json& doc);
// Unordered structured form: kind, n, zero_support, blocks (representatives).
SignedPartition partition_from_json(const json& doc);
ColoredPartition colored_partition_from_json(const json& doc);

}  // namespace stirbd::text
