#pragma once

// Separator procedures turning a signed permutation plus a set of artificial
// separators into an ordered B_n- or D_n-partition, and their inverses.
//
// Gap i sits between positions i and i+1; gap 0 precedes position 1. The
// separator after position n is always present and never stored.

#include <variant>
#include <vector>

#include "stirbd/groups.hpp"
#include "stirbd/partitions.hpp"

namespace stirbd {

using SpotSet = std::vector<int>;  // sorted gap indices in [0, n-1]

struct SeparatorPlacement {
  SpotSet descent_induced;  // descents in [0, n-1]
  SpotSet artificial;

  int pair_count() const noexcept { return static_cast<int>(descent_induced.size() + artificial.size()); }
};

// Throws SpotCollision if a spot is already a descent of the given flavor
// (B or D), InvalidSpot for out-of-range or repeated spots.
SeparatorPlacement make_placement(const SignedPermutation& p, Flavor flavor, SpotSet artificial);

// Every artificial spot set that brings the separator count in [0, n-1] to
// exactly r. Throws TooManySeparators when r > n.
std::vector<SpotSet> artificial_choices(const SignedPermutation& p, Flavor flavor, int r);

OrderedSignedPartition b_procedure(const SignedPermutation& beta, const SpotSet& artificial);

struct Preimage {
  SignedPermutation permutation;
  SpotSet artificial;

  friend bool operator==(const Preimage&, const Preimage&) = default;
};

// Throws InvalidOrderedPartition when lambda is not of kind B.
Preimage b_inverse(const OrderedSignedPartition& lambda);

// Applies the switch operation when a separator sits in gap 1 but not gap 0.
// Throws NotTypeD when gamma has an odd number of negative entries.
OrderedSignedPartition d_procedure(const SignedPermutation& gamma, const SpotSet& artificial);

// An ordered D_n-partition outside the image of the D-procedure: no zero-block,
// singleton C_1, odd number of negatives among C_1..C_r.
struct UnreachableForm {
  OrderedSignedPartition witness;
  bool first_block_singleton = true;
  bool negative_parity_odd = true;
};

using DInverseResult = std::variant<Preimage, UnreachableForm>;

DInverseResult d_inverse(const OrderedSignedPartition& lambda);

bool classify_unreachable(const OrderedSignedPartition& lambda);

// Negative entries among C_1..C_r (the zero-block excluded).
int leader_negative_count(const OrderedSignedPartition& lambda);

}  // namespace stirbd
