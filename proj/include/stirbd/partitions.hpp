#pragma once

// Set partitions of types B, D and G_{m,n} (Reiner / Dowling style), both
// unordered (canonical form) and ordered, plus every Stirling-number counter
// built on top of them.
//
// Signed blocks are sorted ascending. A pair class is stored through its
// canonical representative: the block whose entry of least absolute value is
// positive. Classes are sorted by least absolute value. Colored classes are
// stored through the member in which the least value carries color 0.

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "stirbd/bigint.hpp"
#include "stirbd/groups.hpp"

namespace stirbd {

enum class PartitionKind { B, D };

using SignedBlock = std::vector<int>;
using ColoredBlock = std::vector<ColoredEntry>;

class SignedPartition {
 public:
  SignedPartition() = default;

  PartitionKind kind() const noexcept { return kind_; }
  int rank() const noexcept { return n_; }
  const std::vector<int>& zero_support() const noexcept { return zero_support_; }
  const std::vector<SignedBlock>& pairs() const noexcept { return pairs_; }

  bool has_zero_block() const noexcept { return !zero_support_.empty(); }
  int pair_count() const noexcept { return static_cast<int>(pairs_.size()); }
  // Zero-block counted once, every pair counted twice.
  int block_count() const noexcept { return 2 * pair_count() + (has_zero_block() ? 1 : 0); }

  // Every block of the partition of [+-n]: zero-block first, then C, -C per class.
  std::vector<SignedBlock> expanded() const;

  friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
  friend auto operator<=>(const SignedPartition&, const SignedPartition&) = default;

 private:
  friend SignedPartition validate_signed(PartitionKind, int, const std::vector<SignedBlock>&);
  friend class PartitionBuilder;
  PartitionKind kind_ = PartitionKind::B;
  int n_ = 0;
  std::vector<int> zero_support_;
  std::vector<SignedBlock> pairs_;
};

class ColoredPartition {
 public:
  ColoredPartition() = default;

  int colors() const noexcept { return colors_; }
  int rank() const noexcept { return n_; }
  const std::vector<int>& zero_support() const noexcept { return zero_support_; }
  const std::vector<ColoredBlock>& orbits() const noexcept { return orbits_; }

  bool has_zero_block() const noexcept { return !zero_support_.empty(); }
  int orbit_count() const noexcept { return static_cast<int>(orbits_.size()); }

  std::vector<ColoredBlock> expanded() const;

  friend bool operator==(const ColoredPartition&, const ColoredPartition&) = default;
  friend auto operator<=>(const ColoredPartition&, const ColoredPartition&) = default;

 private:
  friend ColoredPartition validate_colored(int, int, const std::vector<ColoredBlock>&);
  friend class PartitionBuilder;
  int colors_ = 2;
  int n_ = 0;
  std::vector<int> zero_support_;
  std::vector<ColoredBlock> orbits_;
};

// C^{[shift]}: every color moved by shift modulo colors, result sorted.
ColoredBlock shift_block(const ColoredBlock& block, int shift, int colors);
SignedBlock negate_block(const SignedBlock& block);

// Canonicalizes raw blocks (any order, any representative) over [+-n].
// Errors: NotAPartition, MultipleZeroBlocks, MirrorViolation,
// SingletonZeroBlock (kind D only).
SignedPartition validate_signed(PartitionKind kind, int n, const std::vector<SignedBlock>& raw_blocks);
// Infers n from the largest absolute value present.
SignedPartition validate_signed(PartitionKind kind, const std::vector<SignedBlock>& raw_blocks);

// Nonzero blocks must meet each value at most once (orbits of size exactly m).
// Errors: InvalidColorCount (m < 2), NotAPartition, MultipleZeroBlocks,
// RepeatedValueInBlock, MirrorViolation.
ColoredPartition validate_colored(int n, int colors, const std::vector<ColoredBlock>& raw_blocks);

// G_{2,n}-partitions and B_n-partitions are the same objects; color 1 reads as a minus sign.
SignedPartition to_signed(const ColoredPartition& p);

inline constexpr std::uint64_t kDefaultPartitionCap = 10'000'000;

// Cap used when a sweep is given cap = 0; set_partition_cap(0) restores the default.
std::uint64_t partition_cap() noexcept;
void set_partition_cap(std::uint64_t cap) noexcept;

// Total number of partitions of the given kind, from the closed sum over
// zero-block sizes. Used for cap checks.
BigInt partition_total(PartitionKind kind, int n);
BigInt colored_partition_total(int n, int colors);

// Visit in generation order (deterministic, not sorted).
void for_each_signed_partition(PartitionKind kind, int n, const std::function<void(const SignedPartition&)>& visit,
                               std::uint64_t cap = 0);
void for_each_colored_partition(int n, int colors, const std::function<void(const ColoredPartition&)>& visit,
                                std::uint64_t cap = 0);

// Materialized and sorted by canonical encoding.
std::vector<SignedPartition> enumerate_partitions(PartitionKind kind, int n, std::uint64_t cap = 0);
std::vector<ColoredPartition> enumerate_colored_partitions(int n, int colors,
                                                           std::uint64_t cap = 0);

enum class StirlingKind { classicalA, B, D, G, Bstar };

// Counts by filtered enumeration, memoized per (kind, n, colors). For Bstar
// r counts all blocks. Out-of-range r gives 0.
BigInt stirling(StirlingKind kind, int n, int r, int colors = 2);

// Classical S(n, r) by the triangle recurrence; the cross-check for the
// enumerated classicalA counts.
BigInt stirling2_recurrence(int n, int r);

// Number of G_{m,n}-partitions with r classes of nonzero blocks under the
// unrestricted definition, where a nonzero block may be fixed by a proper
// power of the shift (possible for composite m). Brute force over all set
// partitions of the colored alphabet, so only for m*n <= 10.
BigInt literal_colored_stirling(int n, int r, int colors);

// ---------------------------------------------------------------------------
// Ordered partitions. Only the class leaders C_i are stored; the expansion
// [C_0, C_1, -C_1, ..., C_r, -C_r] (or C, C^{[1]}, ..., C^{[m-1]}) is derived.

class OrderedSignedPartition {
 public:
  OrderedSignedPartition() = default;
  // zero_support: positive values of C_0. leaders: C_1..C_r in order.
  // Throws Error(InvalidOrderedPartition) when the pieces do not form a
  // valid partition of the given kind.
  OrderedSignedPartition(PartitionKind kind, int n, std::vector<int> zero_support, std::vector<SignedBlock> leaders);

  // From the full block sequence; checks zero-block placement and C/-C adjacency.
  static OrderedSignedPartition from_blocks(PartitionKind kind, int n, const std::vector<SignedBlock>& blocks);

  PartitionKind kind() const noexcept { return kind_; }
  int rank() const noexcept { return n_; }
  bool has_zero_block() const noexcept { return !zero_support_.empty(); }
  const std::vector<int>& zero_support() const noexcept { return zero_support_; }
  const std::vector<SignedBlock>& leaders() const noexcept { return leaders_; }
  int pair_count() const noexcept { return static_cast<int>(leaders_.size()); }

  std::vector<SignedBlock> blocks() const;
  SignedPartition unordered() const;

  friend bool operator==(const OrderedSignedPartition&, const OrderedSignedPartition&) = default;
  friend auto operator<=>(const OrderedSignedPartition&, const OrderedSignedPartition&) = default;

 private:
  PartitionKind kind_ = PartitionKind::B;
  int n_ = 0;
  std::vector<int> zero_support_;
  std::vector<SignedBlock> leaders_;
};

class OrderedColoredPartition {
 public:
  OrderedColoredPartition() = default;
  OrderedColoredPartition(int n, int colors, std::vector<int> zero_support, std::vector<ColoredBlock> leaders);

  int colors() const noexcept { return colors_; }
  int rank() const noexcept { return n_; }
  bool has_zero_block() const noexcept { return !zero_support_.empty(); }
  const std::vector<int>& zero_support() const noexcept { return zero_support_; }
  const std::vector<ColoredBlock>& leaders() const noexcept { return leaders_; }

  std::vector<ColoredBlock> blocks() const;
  ColoredPartition unordered() const;

  friend bool operator==(const OrderedColoredPartition&, const OrderedColoredPartition&) = default;
  friend auto operator<=>(const OrderedColoredPartition&, const OrderedColoredPartition&) = default;

 private:
  int colors_ = 2;
  int n_ = 0;
  std::vector<int> zero_support_;
  std::vector<ColoredBlock> leaders_;
};

// 2^r r! for B/D, m^r r! for G.
BigInt ordering_count(const SignedPartition& p);
BigInt ordering_count(const ColoredPartition& p);

void for_each_ordering(const SignedPartition& p, const std::function<void(const OrderedSignedPartition&)>& visit);
void for_each_ordering(const ColoredPartition& p, const std::function<void(const OrderedColoredPartition&)>& visit);

std::vector<OrderedSignedPartition> orderings(const SignedPartition& p);
std::vector<OrderedColoredPartition> orderings(const ColoredPartition& p);

}  // namespace stirbd
