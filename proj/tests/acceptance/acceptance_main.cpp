// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "stirbd/bijections.hpp"
#include "stirbd/geometry.hpp"
#include "stirbd/identities.hpp"
#include "stirbd/oeis.hpp"
#include "stirbd/partitions.hpp"

using namespace stirbd;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << "first failure: " << what;
      ok = false;
    }
  }
};

const Instance* find_instance(const VerificationReport& r, int n, int rr) {
  for (const auto& inst : r.instances) {
    std::map<std::string, std::string> p(inst.params.begin(), inst.params.end());
    if (p["n"] == std::to_string(n) && p["r"] == std::to_string(rr)) return &inst;
  }
  return nullptr;
}

void ac1(Outcome& o) {
  const std::vector<std::vector<int>> b{{1},          {1, 1},           {1, 4, 1},
                                        {1, 13, 9, 1}, {1, 40, 58, 16, 1}, {1, 121, 330, 170, 25, 1},
                                        {1, 364, 1771, 1520, 395, 36, 1}};
  const std::vector<std::vector<int>> d{{1},          {0, 1},           {1, 2, 1},
                                        {1, 7, 6, 1}, {1, 24, 34, 12, 1}, {1, 81, 190, 110, 20, 1},
                                        {1, 268, 1051, 920, 275, 30, 1}};
  int checked = 0;
  for (int n = 0; n <= 6; ++n)
    for (int r = 0; r <= n; ++r) {
      o.expect(stirling(StirlingKind::B, n, r) == b[n][r], "S_B(" + std::to_string(n) + "," + std::to_string(r) + ")");
      o.expect(stirling(StirlingKind::D, n, r) == d[n][r], "S_D(" + std::to_string(n) + "," + std::to_string(r) + ")");
      ++checked;
    }
  if (o.ok) o.detail << 2 * checked << " table entries exact, S_B(6,2)=1771, S_D(6,3)=920, S_D(1,0)=0";
}

void ac2(Outcome& o) {
  for (const std::string id : {"A039755", "A039760"}) {
    const auto b = oeis::read_bfile(std::string(STIRBD_FIXTURE_DIR) + "/b" + id.substr(1) + ".txt");
    const auto cmp = oeis::compare(b, oeis::linearize(id, 6));
    o.expect(cmp.matched() && cmp.compared == 28, id + " fixture");
  }
  if (o.ok) o.detail << "A039755 and A039760: 28 terms each, 0 mismatches";
}

void ac3(Outcome& o) {
  const auto b = verify_stirling_eulerian(IdentityKind::B, 0, 6);
  o.expect(b.all_match() && b.count(InstanceStatus::match) == 28, "thm-4.1");
  const auto d = verify_stirling_eulerian(IdentityKind::D, 0, 6);
  o.expect(d.all_match() && d.count(InstanceStatus::match) == 26 && d.count(InstanceStatus::skipped) == 2,
           "thm-4.2");
  if (o.ok) o.detail << "thm-4.1: 28 instances, thm-4.2: 26 instances (n=1 excluded)";
}

void ac4(Outcome& o) {
  const auto a = verify_inversion(EulerianKind::A, 0, 6);
  const auto b = verify_inversion(EulerianKind::B, 0, 6);
  const auto d = verify_inversion(EulerianKind::D, 0, 6);
  o.expect(a.all_match(), "eq-4");
  o.expect(b.all_match(), "cor-4.3");
  o.expect(d.all_match(), "cor-4.4");
  if (o.ok)
    o.detail << "eq-4 " << a.count(InstanceStatus::match) << ", cor-4.3 " << b.count(InstanceStatus::match)
             << ", cor-4.4 " << d.count(InstanceStatus::match) << " entries reproduced";
}

void ac5(Outcome& o) {
  long sweeps = 0;
  for (int n = 0; n <= 4; ++n) {
    std::set<OrderedSignedPartition> image;
    std::size_t produced = 0;
    std::map<int, BigInt> per_r;
    for_each_signed(GroupKind::B, n, [&](const SignedPermutation& beta) {
      for (int r = 0; r <= n; ++r)
        for (const auto& spots : artificial_choices(beta, Flavor::B, r)) {
          const auto l = b_procedure(beta, spots);
          const auto back = b_inverse(l);
          o.expect(back.permutation == beta && back.artificial == spots, "B round trip");
          image.insert(l);
          ++produced;
          ++per_r[r];
        }
    });
    o.expect(image.size() == produced, "B images disjoint");
    for (int r = 0; r <= n; ++r)
      o.expect(per_r[r] == power(2, r) * factorial(r) * stirling(StirlingKind::B, n, r), "B image size");
    sweeps += static_cast<long>(produced);
  }
  for (int n = 1; n <= 4; ++n) {
    std::set<OrderedSignedPartition> image;
    std::size_t produced = 0;
    for_each_signed(GroupKind::D, n, [&](const SignedPermutation& gamma) {
      for (int r = n == 1 ? 1 : 0; r <= n; ++r)
        for (const auto& spots : artificial_choices(gamma, Flavor::D, r)) {
          const auto l = d_procedure(gamma, spots);
          const auto result = d_inverse(l);
          const auto* back = std::get_if<Preimage>(&result);
          o.expect(back && back->permutation == gamma && back->artificial == spots, "D round trip");
          image.insert(l);
          ++produced;
        }
    });
    o.expect(image.size() == produced, "D images disjoint");
    std::map<int, BigInt> missing;
    for (const auto& p : enumerate_partitions(PartitionKind::D, n))
      for_each_ordering(p, [&](const OrderedSignedPartition& l) {
        const bool reached = image.count(l) > 0;
        o.expect(reached != classify_unreachable(l), "D complement is the unreachable set");
        if (!reached) ++missing[l.pair_count()];
      });
    for (int r = 1; r <= n; ++r)
      o.expect(missing[r] == BigInt(n) * power(2, n - 1) * factorial(r - 1) * stirling2_recurrence(n - 1, r - 1),
               "D complement size");
    o.expect(missing[0] == 0, "D complement at r=0");
    sweeps += static_cast<long>(produced);
  }
  if (o.ok) o.detail << sweeps << " procedure applications, 0 violations";
}

void ac6(Outcome& o) {
  o.expect(verify_basis(FallingKind::classical, 0, 8).all_match(), "thm-1.2");
  o.expect(verify_basis(FallingKind::B, 0, 8).all_match(), "thm-5.1");
  o.expect(verify_basis(FallingKind::D, 0, 8).all_match(), "thm-5.3");
  for (int m = 2; m <= 4; ++m) o.expect(verify_basis(FallingKind::G, 0, 5, m).all_match(), "thm-6.10");
  if (o.ok) o.detail << "thm-1.2/5.1/5.3 for n<=8, thm-6.10 for n<=5 and m=2,3,4";
}

void ac7(Outcome& o) {
  for (int n = 0; n <= 3; ++n) {
    const auto r = census(ArrangementKind::B, n, 3);
    o.expect(r.total == power(7, n), "B total");
    for (const auto& pc : r.counts)
      o.expect(pc.count == falling_factorial(FallingKind::B, pc.partition.pair_count())(7), "B per-partition count");
  }
  const auto d = census(ArrangementKind::D, 3, 3);
  o.expect(d.missing_points == 36, "D missing points");
  o.expect(d.total == 343, "D total");
  o.expect(d.free_points == falling_factorial(FallingKind::D, 3, 3)(7), "D free points");
  for (int n = 0; n <= 2; ++n) {
    const auto t = torus_census(n, 3, 5);
    o.expect(t.total == power(16, n), "torus total");
    o.expect(t.free_points == falling_factorial(FallingKind::G, n, 0, 3)(16), "torus free points");
  }
  if (o.ok) o.detail << "B n<=3 x=7 per-partition counts, D n=3 missing=36 total=343, torus m=3 t=5 n<=2";
}

void ac8(Outcome& o) {
  for (int m = 2; m <= 4; ++m) o.expect(verify_stirling_eulerian(IdentityKind::G, 0, 4, m).all_match(), "thm-6.9");
  const auto g = verify_stirling_eulerian(IdentityKind::G, 0, 4, 2);
  const auto b = verify_stirling_eulerian(IdentityKind::B, 0, 4);
  o.expect(g.instances.size() == b.instances.size(), "m=2 instance count");
  for (std::size_t i = 0; i < std::min(g.instances.size(), b.instances.size()); ++i)
    o.expect(g.instances[i].lhs == b.instances[i].lhs && g.instances[i].rhs == b.instances[i].rhs,
             "m=2 coincides with thm-4.1");
  if (o.ok) o.detail << "m=2,3,4 and n<=4 exact; m=2 equals thm-4.1 instance by instance";
}

void ac9(Outcome& o) {
  for (int n = 0; n <= 5; ++n) o.expect(compare_desg_desb(n).distributions_equal(), "n=" + std::to_string(n));
  if (o.ok) o.detail << "histograms equal for n<=5";
}

void ac10(Outcome& o) {
  const auto r1 = verify_stirling_eulerian(IdentityKind::Flag, 1, 4);
  const auto r2 = verify_stirling_eulerian(IdentityKind::Flag, 1, 4);
  o.expect(!r1.instances.empty(), "report generated");
  o.expect(r1.instances.size() == r2.instances.size(), "deterministic size");
  for (std::size_t i = 0; i < std::min(r1.instances.size(), r2.instances.size()); ++i)
    o.expect(r1.instances[i].lhs == r2.instances[i].lhs && r1.instances[i].rhs == r2.instances[i].rhs &&
                 r1.instances[i].status == r2.instances[i].status,
             "deterministic content");
  for (auto [n, r] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 4}}) {
    const auto* inst = find_instance(r1, n, r);
    o.expect(inst && inst->status == InstanceStatus::match, "listed match (" + std::to_string(n) + "," + std::to_string(r) + ")");
  }
  for (const auto& inst : r1.instances)
    if (inst.status == InstanceStatus::mismatch) o.expect(!inst.lhs.empty() && !inst.rhs.empty(), "both sides listed");
  if (o.ok)
    o.detail << r1.count(InstanceStatus::match) << " instance/reading pairs match, "
             << r1.count(InstanceStatus::mismatch) << " listed as discrepancies (report only)";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 = no time bound
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "table reproduction", 30, ac1},   {2, "OEIS fixtures", 0, ac2},
      {3, "thm-4.1 / thm-4.2", 120, ac3},   {4, "inversions", 0, ac4},
      {5, "bijection suite", 0, ac5},       {6, "basis identities", 60, ac6},
      {7, "geometric censuses", 0, ac7},    {8, "thm-6.9", 0, ac8},
      {9, "desG vs desB distribution", 0, ac9}, {10, "thm-6.11 report", 0, ac10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      o.ok = false;
      o.detail << " (over the " << c.limit_s << " s limit)";
    }
    failures += !o.ok;
    std::cout << "AC" << c.id << ' ' << (o.ok ? "PASS" : "FAIL") << "  " << c.name << "  [" << std::fixed
              << std::setprecision(2) << secs << " s]  " << o.detail.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
