#include "stirbd/identities.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "stirbd/error.hpp"
#include "stirbd/partitions.hpp"

namespace stirbd {

namespace {

using Row = std::vector<BigInt>;

void bump(Row& row, int idx) {
  if (static_cast<int>(row.size()) <= idx) row.resize(idx + 1, 0);
  ++row[idx];
}

Row compute_eulerian_row(EulerianKind kind, int n, int colors, DescentOrder order) {
  Row row;
  switch (kind) {
    case EulerianKind::A:
      for_each_signed(GroupKind::A, n, [&](const SignedPermutation& p) { bump(row, kernel::des_a(p.window()) + 1); });
      break;
    case EulerianKind::B:
      for_each_signed(GroupKind::B, n, [&](const SignedPermutation& p) { bump(row, kernel::des_b(p.window())); });
      break;
    case EulerianKind::D:
      for_each_signed(GroupKind::D, n, [&](const SignedPermutation& p) { bump(row, kernel::des_d(p.window())); });
      break;
    case EulerianKind::FlagB:
      for_each_signed(GroupKind::B, n,
                      [&](const SignedPermutation& p) { bump(row, kernel::fdes(p.window(), order) + 1); });
      break;
    case EulerianKind::G:
      for_each_colored(n, colors, [&](const ColoredPermutation& p) { bump(row, des_stat(p, Stat::desG)); });
      break;
  }
  return row;
}

std::string big(const BigInt& v) { return v.str(); }

std::pair<std::string, std::string> param(const char* key, long value) { return {key, std::to_string(value)}; }

Instance compare(std::vector<std::pair<std::string, std::string>> params, const BigInt& lhs, const BigInt& rhs) {
  Instance inst;
  inst.params = std::move(params);
  inst.lhs = big(lhs);
  inst.rhs = big(rhs);
  inst.status = lhs == rhs ? InstanceStatus::match : InstanceStatus::mismatch;
  return inst;
}

Instance skipped(std::vector<std::pair<std::string, std::string>> params, std::string note) {
  Instance inst;
  inst.params = std::move(params);
  inst.status = InstanceStatus::skipped;
  inst.note = std::move(note);
  return inst;
}

std::string range_text(int n_min, int n_max, int colors, bool with_colors) {
  std::string s = "n=" + std::to_string(n_min) + ".." + std::to_string(n_max);
  if (with_colors) s += " m=" + std::to_string(colors);
  return s;
}

StirlingKind stirling_kind_for(EulerianKind kind) {
  switch (kind) {
    case EulerianKind::A: return StirlingKind::classicalA;
    case EulerianKind::B: return StirlingKind::B;
    case EulerianKind::D: return StirlingKind::D;
    default: break;
  }
  throw Error(ErrorCode::FlavorMismatch, "no Stirling inversion for this Eulerian kind");
}

// Right-hand correction of the type D identity: n 2^{n-1} (r-1)! S(n-1, r-1).
BigInt unreachable_count(int n, int r) {
  if (n == 0 || r == 0) return 0;
  return BigInt(n) * power(2, static_cast<unsigned>(n - 1)) * factorial(r - 1) *
         stirling(StirlingKind::classicalA, n - 1, r - 1);
}

}  // namespace

const char* to_string(InstanceStatus status) noexcept {
  switch (status) {
    case InstanceStatus::match: return "match";
    case InstanceStatus::mismatch: return "mismatch";
    case InstanceStatus::skipped: return "skipped";
  }
  return "unknown";
}

bool VerificationReport::all_match() const noexcept {
  return std::none_of(instances.begin(), instances.end(),
                      [](const Instance& i) { return i.status == InstanceStatus::mismatch; });
}

int VerificationReport::count(InstanceStatus status) const noexcept {
  return static_cast<int>(
      std::count_if(instances.begin(), instances.end(), [status](const Instance& i) { return i.status == status; }));
}

std::vector<BigInt> eulerian_row(EulerianKind kind, int n, int colors, DescentOrder order) {
  if (n < 0) throw Error(ErrorCode::BadIndex, "negative rank");
  if (kind != EulerianKind::G) colors = 0;
  if (kind != EulerianKind::FlagB) order = DescentOrder::natural;
  static std::mutex mu;
  static std::map<std::tuple<EulerianKind, int, int, DescentOrder>, Row> memo;
  const auto key = std::make_tuple(kind, n, colors, order);
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  Row row = compute_eulerian_row(kind, n, colors, order);
  std::lock_guard lock(mu);
  memo.emplace(key, row);
  return row;
}

BigInt eulerian(EulerianKind kind, int n, int k, int colors, DescentOrder order) {
  if (k < 0) return 0;
  const auto row = eulerian_row(kind, n, colors, order);
  return k < static_cast<int>(row.size()) ? row[k] : BigInt(0);
}

IntPolynomial falling_factorial(FallingKind kind, int k, int n, int colors) {
  if (k < 0) throw Error(ErrorCode::BadIndex, "negative degree");
  IntPolynomial p = IntPolynomial::constant(1);
  switch (kind) {
    case FallingKind::classical:
      for (int i = 0; i < k; ++i) p *= IntPolynomial::linear_factor(i);
      break;
    case FallingKind::B:
      for (int i = 1; i <= k; ++i) p *= IntPolynomial::linear_factor(2 * i - 1);
      break;
    case FallingKind::D:
      if (k > n) throw Error(ErrorCode::BadIndex, "type D falling factorial needs k <= n");
      if (k == 0) break;
      if (k < n) {
        for (int i = 1; i <= k; ++i) p *= IntPolynomial::linear_factor(2 * i - 1);
      } else {
        for (int i = 1; i <= n - 1; ++i) p *= IntPolynomial::linear_factor(2 * i - 1);
        p *= IntPolynomial::linear_factor(n - 1);
      }
      break;
    case FallingKind::G:
      for (int i = 0; i < k; ++i) p *= IntPolynomial::linear_factor(1 + BigInt(i) * colors);
      break;
  }
  return p;
}

VerificationReport verify_stirling_eulerian(IdentityKind kind, int n_min, int n_max, int colors) {
  VerificationReport report;
  switch (kind) {
    case IdentityKind::A: report.identity = "thm-1.1"; break;
    case IdentityKind::B: report.identity = "thm-4.1"; break;
    case IdentityKind::D: report.identity = "thm-4.2"; break;
    case IdentityKind::G: report.identity = "thm-6.9"; break;
    case IdentityKind::Flag: report.identity = "thm-6.11-report"; break;
  }
  report.range = range_text(n_min, n_max, colors, kind == IdentityKind::G);
  if (kind == IdentityKind::G && colors < 2) throw Error(ErrorCode::InvalidColorCount, "need m >= 2");

  if (kind == IdentityKind::Flag) {
    report.asserted = false;
    for (auto order : {DescentOrder::natural, DescentOrder::color}) {
      const char* reading = order == DescentOrder::natural ? "natural" : "color";
      for (int n = std::max(n_min, 0); n <= n_max; ++n) {
        for (int r = 1; r <= 2 * n; ++r) {
          const int half = r / 2;
          const BigInt lhs = power(2, static_cast<unsigned>(half)) * factorial(half) * stirling(StirlingKind::Bstar, n, r);
          BigInt rhs = 0;
          for (int k = 1; k <= r; ++k)
            rhs += eulerian(EulerianKind::FlagB, n, k, 2, order) * binomial(n - (k + 1) / 2, (r - k) / 2);
          auto inst = compare({param("n", n), param("r", r), {"order", reading}}, lhs, rhs);
          if (r > n) inst.note = "r > n";
          report.instances.push_back(std::move(inst));
        }
      }
    }
    return report;
  }

  for (int n = std::max(n_min, 0); n <= n_max; ++n) {
    for (int r = 0; r <= n; ++r) {
      auto params = std::vector{param("n", n), param("r", r)};
      if (kind == IdentityKind::A && n == 0) {
        report.instances.push_back(skipped(std::move(params), "A(0,0) = 0 under the k-1 descent convention"));
        continue;
      }
      if (kind == IdentityKind::D && n == 1) {
        report.instances.push_back(skipped(std::move(params), "excluded: n = 1"));
        continue;
      }
      BigInt lhs, rhs = 0;
      switch (kind) {
        case IdentityKind::A:
          lhs = factorial(r) * stirling(StirlingKind::classicalA, n, r);
          for (int k = 0; k <= r; ++k) rhs += eulerian(EulerianKind::A, n, k) * binomial(n - k, r - k);
          break;
        case IdentityKind::B:
          lhs = power(2, static_cast<unsigned>(r)) * factorial(r) * stirling(StirlingKind::B, n, r);
          for (int k = 0; k <= r; ++k) rhs += eulerian(EulerianKind::B, n, k) * binomial(n - k, r - k);
          break;
        case IdentityKind::D:
          lhs = power(2, static_cast<unsigned>(r)) * factorial(r) * stirling(StirlingKind::D, n, r);
          for (int k = 0; k <= r; ++k) rhs += eulerian(EulerianKind::D, n, k) * binomial(n - k, r - k);
          rhs += unreachable_count(n, r);
          break;
        case IdentityKind::G:
          lhs = power(colors, static_cast<unsigned>(r)) * factorial(r) * stirling(StirlingKind::G, n, r, colors);
          for (int k = 0; k <= r; ++k) rhs += eulerian(EulerianKind::G, n, k, colors) * binomial(n - k, r - k);
          break;
        case IdentityKind::Flag:
          break;
      }
      report.instances.push_back(compare(std::move(params), lhs, rhs));
    }
  }
  return report;
}

BigInt eulerian_from_stirling(EulerianKind kind, int n, int k) {
  const auto skind = stirling_kind_for(kind);
  if (kind == EulerianKind::D && n == 1) throw Error(ErrorCode::BadIndex, "type D inversion excludes n = 1");
  BigInt sum = 0;
  // Type A starts at r = 1; S(n, 0) = 0 for n >= 1 makes r = 0 harmless except at n = 0.
  const int r_start = kind == EulerianKind::A ? 1 : 0;
  for (int r = r_start; r <= k; ++r) {
    BigInt term = factorial(r) * stirling(skind, n, r) * binomial(n - r, k - r);
    if (kind != EulerianKind::A) term *= power(2, static_cast<unsigned>(r));
    if ((k - r) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  if (kind == EulerianKind::D && n >= 1)
    sum -= BigInt(n) * power(2, static_cast<unsigned>(n - 1)) * eulerian(EulerianKind::A, n - 1, k - 1);
  return sum;
}

VerificationReport verify_inversion(EulerianKind kind, int n_min, int n_max) {
  VerificationReport report;
  switch (kind) {
    case EulerianKind::A: report.identity = "eq-4"; break;
    case EulerianKind::B: report.identity = "cor-4.3"; break;
    case EulerianKind::D: report.identity = "cor-4.4"; break;
    default: throw Error(ErrorCode::FlavorMismatch, "inversions exist for kinds A, B, D");
  }
  report.range = range_text(n_min, n_max, 0, false);
  for (int n = std::max(n_min, 0); n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      auto params = std::vector{param("n", n), param("k", k)};
      if (kind == EulerianKind::D && n == 1) {
        report.instances.push_back(skipped(std::move(params), "excluded: n = 1"));
        continue;
      }
      report.instances.push_back(compare(std::move(params), eulerian_from_stirling(kind, n, k), eulerian(kind, n, k)));
    }
  }
  return report;
}

VerificationReport verify_basis(FallingKind kind, int n_min, int n_max, int colors) {
  VerificationReport report;
  StirlingKind skind = StirlingKind::classicalA;
  switch (kind) {
    case FallingKind::classical: report.identity = "thm-1.2"; break;
    case FallingKind::B: report.identity = "thm-5.1"; skind = StirlingKind::B; break;
    case FallingKind::D: report.identity = "thm-5.3"; skind = StirlingKind::D; break;
    case FallingKind::G: report.identity = "thm-6.10"; skind = StirlingKind::G; break;
  }
  if (kind == FallingKind::G && colors < 2) throw Error(ErrorCode::InvalidColorCount, "need m >= 2");
  report.range = range_text(n_min, n_max, colors, kind == FallingKind::G);
  for (int n = std::max(n_min, 0); n <= n_max; ++n) {
    const IntPolynomial lhs = IntPolynomial::monomial(n);
    IntPolynomial rhs;
    for (int k = 0; k <= n; ++k) rhs += stirling(skind, n, k, colors) * falling_factorial(kind, k, n, colors);
    if (kind == FallingKind::D && n >= 1) {
      const IntPolynomial correction = pow(IntPolynomial{-1, 1}, static_cast<unsigned>(n - 1)) -
                                       falling_factorial(FallingKind::D, n - 1, n);
      rhs += BigInt(n) * correction;
    }
    Instance inst;
    inst.params = {param("n", n)};
    if (kind == FallingKind::G) inst.params.push_back(param("m", colors));
    inst.lhs = lhs.to_string();
    inst.rhs = rhs.to_string();
    inst.status = lhs == rhs ? InstanceStatus::match : InstanceStatus::mismatch;
    report.instances.push_back(std::move(inst));
  }
  return report;
}

DistributionComparison compare_desg_desb(int n) {
  DistributionComparison out;
  out.des_g = eulerian_row(EulerianKind::G, n, 2);
  out.des_b = eulerian_row(EulerianKind::B, n);
  for_each_signed(GroupKind::B, n, [&](const SignedPermutation& p) {
    if (des_stat(ColoredPermutation::from_signed(p), Stat::desG) != des_stat(p, Stat::desB)) ++out.pointwise_mismatches;
  });
  return out;
}

}  // namespace stirbd
