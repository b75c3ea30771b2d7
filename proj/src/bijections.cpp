#include "stirbd/bijections.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "stirbd/error.hpp"

namespace stirbd {

namespace {

SpotSet merged(const SeparatorPlacement& placement) {
  SpotSet all = placement.descent_induced;
  all.insert(all.end(), placement.artificial.begin(), placement.artificial.end());
  std::sort(all.begin(), all.end());
  return all;
}

// Reads the window left to right, cutting at every separator gap and after
// the last entry. Entries before the first separator form the zero-block.
OrderedSignedPartition form_blocks(PartitionKind kind, const std::vector<int>& window, const SpotSet& separators) {
  const int n = static_cast<int>(window.size());
  const bool has_zero_block = separators.empty() || separators.front() != 0;
  SpotSet cuts = separators;
  cuts.push_back(n);
  std::vector<int> zero;
  std::vector<SignedBlock> leaders;
  int start = 0;
  for (int cut : cuts) {
    if (cut == start) continue;
    SignedBlock segment(window.begin() + start, window.begin() + cut);
    if (start == 0 && has_zero_block) {
      for (int v : segment) zero.push_back(std::abs(v));
    } else {
      leaders.push_back(std::move(segment));
    }
    start = cut;
  }
  return OrderedSignedPartition(kind, n, std::move(zero), std::move(leaders));
}

SpotSet difference(const SpotSet& a, const DescentSet& b) {
  SpotSet out;
  for (int g : a)
    if (!b.contains(g)) out.push_back(g);
  return out;
}

void require_covered(const DescentSet& descents, const SpotSet& separators) {
  for (int d : descents.positions)
    if (!std::binary_search(separators.begin(), separators.end(), d))
      throw std::logic_error("inverse procedure produced a descent outside the separators");
}

// Window of increasing blocks, plus the separator gaps they induce (gap n excluded).
struct Concatenation {
  std::vector<int> window;
  SpotSet separators;
};

Concatenation concatenate(const OrderedSignedPartition& lambda) {
  Concatenation out;
  const int n = lambda.rank();
  auto close_block = [&] {
    const int end = static_cast<int>(out.window.size());
    if (end < n) out.separators.push_back(end);
  };
  if (lambda.has_zero_block()) {
    out.window = lambda.zero_support();
    close_block();
  } else if (n > 0) {
    out.separators.push_back(0);
  }
  for (const auto& c : lambda.leaders()) {
    out.window.insert(out.window.end(), c.begin(), c.end());
    close_block();
  }
  return out;
}

}  // namespace

SeparatorPlacement make_placement(const SignedPermutation& p, Flavor flavor, SpotSet artificial) {
  if (flavor != Flavor::B && flavor != Flavor::D)
    throw Error(ErrorCode::FlavorMismatch, "separator placement needs flavor B or D");
  SeparatorPlacement out;
  out.descent_induced = descent_set(p, flavor).positions;
  std::sort(artificial.begin(), artificial.end());
  for (std::size_t i = 0; i < artificial.size(); ++i) {
    const int g = artificial[i];
    if (g < 0 || g >= p.size()) throw Error(ErrorCode::InvalidSpot, "spot " + std::to_string(g) + " outside [0, n-1]");
    if (i > 0 && artificial[i - 1] == g) throw Error(ErrorCode::InvalidSpot, "spot " + std::to_string(g) + " repeated");
    if (std::binary_search(out.descent_induced.begin(), out.descent_induced.end(), g))
      throw Error(ErrorCode::SpotCollision, "spot " + std::to_string(g) + " already holds a descent");
  }
  out.artificial = std::move(artificial);
  return out;
}

std::vector<SpotSet> artificial_choices(const SignedPermutation& p, Flavor flavor, int r) {
  const int n = p.size();
  if (r > n) throw Error(ErrorCode::TooManySeparators, "at most n separators fit in gaps 0..n-1");
  const auto descents = descent_set(p, flavor);
  const int extra = r - descents.size();
  std::vector<SpotSet> out;
  if (extra < 0) return out;
  SpotSet empty_spots;
  for (int g = 0; g < n; ++g)
    if (!descents.contains(g)) empty_spots.push_back(g);
  // Combinations of empty_spots of size extra, lexicographic.
  std::vector<bool> pick(empty_spots.size(), false);
  std::fill(pick.begin(), pick.begin() + extra, true);
  do {
    SpotSet s;
    for (std::size_t i = 0; i < pick.size(); ++i)
      if (pick[i]) s.push_back(empty_spots[i]);
    out.push_back(std::move(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

OrderedSignedPartition b_procedure(const SignedPermutation& beta, const SpotSet& artificial) {
  const auto placement = make_placement(beta, Flavor::B, artificial);
  const std::vector<int> window(beta.window().begin(), beta.window().end());
  return form_blocks(PartitionKind::B, window, merged(placement));
}

Preimage b_inverse(const OrderedSignedPartition& lambda) {
  auto cat = concatenate(lambda);
  SignedPermutation beta(std::move(cat.window));
  const auto descents = descent_set(beta, Flavor::B);
  require_covered(descents, cat.separators);
  return {std::move(beta), difference(cat.separators, descents)};
}

OrderedSignedPartition d_procedure(const SignedPermutation& gamma, const SpotSet& artificial) {
  if (!gamma.is_even()) throw Error(ErrorCode::NotTypeD, "D-procedure needs an even-signed permutation");
  const auto placement = make_placement(gamma, Flavor::D, artificial);
  std::vector<int> window(gamma.window().begin(), gamma.window().end());
  SpotSet separators = merged(placement);
  const bool gap0 = std::binary_search(separators.begin(), separators.end(), 0);
  const bool gap1 = std::binary_search(separators.begin(), separators.end(), 1);
  if (gap1 && !gap0) {
    // Switch: negate gamma(1) and move the gap-1 separator in front of it.
    window[0] = -window[0];
    separators.front() = 0;  // gap 1 is the smallest separator here
  }
  return form_blocks(PartitionKind::D, window, separators);
}

int leader_negative_count(const OrderedSignedPartition& lambda) {
  int count = 0;
  for (const auto& c : lambda.leaders()) count += static_cast<int>(std::count_if(c.begin(), c.end(), [](int v) { return v < 0; }));
  return count;
}

bool classify_unreachable(const OrderedSignedPartition& lambda) {
  return !lambda.has_zero_block() && lambda.pair_count() >= 1 && lambda.leaders().front().size() == 1 &&
         leader_negative_count(lambda) % 2 == 1;
}

DInverseResult d_inverse(const OrderedSignedPartition& lambda) {
  if (lambda.kind() != PartitionKind::D) {
    // Re-validate under the D rules; a B-partition with a one-pair zero-block is rejected here.
    (void)OrderedSignedPartition(PartitionKind::D, lambda.rank(), lambda.zero_support(), lambda.leaders());
  }
  if (classify_unreachable(lambda)) return UnreachableForm{lambda, true, true};
  const bool odd = leader_negative_count(lambda) % 2 == 1;
  auto cat = concatenate(lambda);
  if (odd) {
    cat.window.front() = -cat.window.front();
    if (!lambda.has_zero_block()) {
      // Undo the switch: the gap-0 separator goes back to gap 1.
      cat.separators.front() = 1;
      std::sort(cat.separators.begin(), cat.separators.end());
    }
  }
  SignedPermutation gamma(std::move(cat.window));
  const auto descents = descent_set(gamma, Flavor::D);
  require_covered(descents, cat.separators);
  return Preimage{std::move(gamma), difference(cat.separators, descents)};
}

}  // namespace stirbd
