#pragma once

// Eulerian numbers of every flavor, falling factorials, and exact checks of
// the Stirling/Eulerian and basis-change identities. Divisions by 2^r r!
// (or m^r r!) are always cleared, so both sides stay integral.

#include <string>
#include <utility>
#include <vector>

#include "stirbd/bigint.hpp"
#include "stirbd/groups.hpp"
#include "stirbd/polynomial.hpp"

namespace stirbd {

// A: A(n, k) counts permutations of S_n with k-1 descents.
// B, D: k descents of type B / D.
// G: des_G = k on G_{m,n}.
// FlagB: fdes = k-1 on B_n.
enum class EulerianKind { A, B, D, G, FlagB };

// Exhaustive, memoized per (kind, n, colors, order). Throws SizeOverflow past
// the default group cap.
BigInt eulerian(EulerianKind kind, int n, int k, int colors = 2, DescentOrder order = DescentOrder::natural);
std::vector<BigInt> eulerian_row(EulerianKind kind, int n, int colors = 2,
                                 DescentOrder order = DescentOrder::natural);

enum class FallingKind { classical, B, D, G };

// [x]_k, [x]^B_k, [x]^D_k (needs the rank n; k = n uses the special last
// factor x - (n-1)), [x]^m_k. Throws BadIndex for k < 0 or, for D, k > n.
IntPolynomial falling_factorial(FallingKind kind, int k, int n = 0, int colors = 2);

enum class InstanceStatus { match, mismatch, skipped };

struct Instance {
  std::vector<std::pair<std::string, std::string>> params;
  std::string lhs;
  std::string rhs;
  InstanceStatus status = InstanceStatus::match;
  std::string note;
};

struct VerificationReport {
  std::string identity;
  std::string range;
  // Report-only runs never fail, whatever their instances say.
  bool asserted = true;
  std::vector<Instance> instances;

  bool all_match() const noexcept;
  bool passed() const noexcept { return !asserted || all_match(); }
  int count(InstanceStatus status) const noexcept;
};

enum class IdentityKind { A, B, D, G, Flag };

// A: r! S(n,r) = sum_k A(n,k) C(n-k, r-k); n = 0 is skipped (the k-1
//    descent convention gives A(0,0) = 0).
// B, G: 2^r r! S_B(n,r) (resp. m^r r! S_m(n,r)) = sum_k A_B(n,k) C(n-k, r-k).
// D: adds n 2^{n-1} (r-1)! S(n-1, r-1) on the right; n = 1 is skipped.
// Flag: 2^{[r/2]} [r/2]! S*_B(n,r) = sum_{k=1}^r A*_B(n,k) C(n-ceil(k/2), [(r-k)/2])
//    for 1 <= r <= 2n under both fdes readings; never asserted.
VerificationReport verify_stirling_eulerian(IdentityKind kind, int n_min, int n_max, int colors = 2);

// Alternating-sum inversions of the identities above. Kind D rejects n = 1
// with BadIndex. A(n-1, k-1) is 0 when k = 0.
BigInt eulerian_from_stirling(EulerianKind kind, int n, int k);

// Compares eulerian_from_stirling with the enumerated Eulerian numbers for
// all 0 <= k <= n in range (kind D skips n = 1).
VerificationReport verify_inversion(EulerianKind kind, int n_min, int n_max);

// Coefficientwise x^n = sum_k S(n,k) [x]_k and its B, D (with correction
// term) and G analogues.
VerificationReport verify_basis(FallingKind kind, int n_min, int n_max, int colors = 2);

// des_G on G_{2,n} against des_B on B_n.
struct DistributionComparison {
  std::vector<BigInt> des_g;
  std::vector<BigInt> des_b;
  // Signed permutations whose two statistics disagree when read as a 2-colored permutation.
  std::uint64_t pointwise_mismatches = 0;
  bool distributions_equal() const { return des_g == des_b; }
};

DistributionComparison compare_desg_desb(int n);

const char* to_string(InstanceStatus status) noexcept;

}  // namespace stirbd
