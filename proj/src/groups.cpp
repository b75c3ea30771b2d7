#include "stirbd/groups.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>

#include "stirbd/error.hpp"

namespace stirbd {

namespace {

bool is_signed_window(std::span<const int> w) {
  const int n = static_cast<int>(w.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : w) {
    const int a = std::abs(v);
    if (a < 1 || a > n || seen[a]) return false;
    seen[a] = true;
  }
  return true;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::atomic<std::uint64_t> cap_override{0};

void check_cap(GroupKind kind, int n, int colors, std::uint64_t cap) {
  if (cap == 0) cap = group_cap(kind);
  const auto order = group_order(kind, n, colors);
  if (order > cap) {
    throw Error(ErrorCode::SizeOverflow,
                "group of order " + std::to_string(order) + " exceeds enumeration cap " + std::to_string(cap));
  }
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  if (!is_signed_window(window_)) throw Error(ErrorCode::InvalidPermutation, "window is not a signed permutation");
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return SignedPermutation(std::move(w));
}

int SignedPermutation::negative_count() const noexcept {
  return static_cast<int>(std::count_if(window_.begin(), window_.end(), [](int v) { return v < 0; }));
}

ColoredPermutation::ColoredPermutation(int colors, std::vector<ColoredEntry> entries)
    : colors_(colors), entries_(std::move(entries)) {
  if (colors_ < 1) throw Error(ErrorCode::InvalidColorCount, "need at least one color");
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (const auto& e : entries_) {
    if (e.value < 1 || e.value > n || seen[e.value])
      throw Error(ErrorCode::InvalidPermutation, "values do not form a permutation");
    if (e.color < 0 || e.color >= colors_)
      throw Error(ErrorCode::InvalidPermutation, "color out of range");
    seen[e.value] = true;
  }
}

ColoredPermutation ColoredPermutation::from_signed(const SignedPermutation& p) {
  std::vector<ColoredEntry> entries;
  entries.reserve(p.size());
  for (int v : p.window()) entries.push_back({std::abs(v), v < 0 ? 1 : 0});
  return ColoredPermutation(2, std::move(entries));
}

bool DescentSet::contains(int i) const noexcept {
  return std::binary_search(positions.begin(), positions.end(), i);
}

namespace kernel {

int des_a(std::span<const int> w) noexcept {
  int d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
  return d;
}

int des_b(std::span<const int> w) noexcept {
  if (w.empty()) return 0;
  return des_a(w) + (w[0] < 0);
}

int des_d(std::span<const int> w) noexcept {
  if (w.empty()) return 0;
  // gamma(0) := -gamma(2); for n = 1 there is no gamma(2) and position 0 never descends.
  const int zero_descent = w.size() >= 2 && w[0] + w[1] < 0;
  return des_a(w) + zero_descent;
}

int des_a_color_order(std::span<const int> w) noexcept {
  const int n = static_cast<int>(w.size());
  auto key = [n](int v) { return v < 0 ? -v - 1 : n + v - 1; };
  int d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) d += key(w[i]) > key(w[i + 1]);
  return d;
}

int fdes(std::span<const int> w, DescentOrder order) noexcept {
  if (w.empty()) return 0;
  const int a = order == DescentOrder::natural ? des_a(w) : des_a_color_order(w);
  return 2 * a + (w[0] < 0);
}

}  // namespace kernel

DescentSet descent_set(const SignedPermutation& p, Flavor flavor) {
  const auto w = p.window();
  const int n = p.size();
  DescentSet out;
  switch (flavor) {
    case Flavor::A:
      break;
    case Flavor::B:
      if (n >= 1 && w[0] < 0) out.positions.push_back(0);
      break;
    case Flavor::D:
      if (!p.is_even()) throw Error(ErrorCode::OddNegativeCount, "type D descents need an even-signed permutation");
      if (n >= 2 && w[0] + w[1] < 0) out.positions.push_back(0);
      break;
    case Flavor::G:
      throw Error(ErrorCode::FlavorMismatch, "flavor G needs a colored permutation");
  }
  for (int i = 1; i < n; ++i)
    if (w[i - 1] > w[i]) out.positions.push_back(i);
  return out;
}

DescentSet descent_set(const ColoredPermutation& p, Flavor flavor) {
  if (flavor != Flavor::G) throw Error(ErrorCode::FlavorMismatch, "colored permutations only carry flavor G");
  DescentSet out;
  for (int i = 1; i < p.size(); ++i)
    if (p.order_key(p(i)) > p.order_key(p(i + 1))) out.positions.push_back(i);
  return out;
}

int des_stat(const SignedPermutation& p, Stat stat, DescentOrder order) {
  switch (stat) {
    case Stat::desB:
      return kernel::des_b(p.window());
    case Stat::desD:
      if (!p.is_even()) throw Error(ErrorCode::OddNegativeCount, "desD needs an even-signed permutation");
      return kernel::des_d(p.window());
    case Stat::fdes:
      return kernel::fdes(p.window(), order);
    case Stat::desG:
      break;
  }
  throw Error(ErrorCode::FlavorMismatch, "desG needs a colored permutation");
}

int des_stat(const ColoredPermutation& p, Stat stat) {
  if (stat != Stat::desG) throw Error(ErrorCode::FlavorMismatch, "colored permutations only carry desG");
  if (p.size() == 0) return 0;
  const int epsilon = p(1).color % p.colors() != 0;
  return descent_set(p, Flavor::G).size() + epsilon;
}

std::uint64_t group_cap(GroupKind kind) noexcept {
  if (const auto c = cap_override.load(); c != 0) return c;
  return kind == GroupKind::G ? kDefaultColoredCap : kDefaultGroupCap;
}

void set_group_cap(std::uint64_t cap) noexcept { cap_override.store(cap); }

std::uint64_t group_order(GroupKind kind, int n, int colors) {
  if (n < 0) throw Error(ErrorCode::BadIndex, "negative rank");
  std::uint64_t order = 1;
  for (int i = 2; i <= n; ++i) order = saturating_mul(order, static_cast<std::uint64_t>(i));
  const std::uint64_t base = kind == GroupKind::A ? 1 : kind == GroupKind::G ? static_cast<std::uint64_t>(colors) : 2;
  int exponent = n;
  if (kind == GroupKind::D && n >= 1) exponent = n - 1;
  for (int i = 0; i < exponent; ++i) order = saturating_mul(order, base);
  return order;
}

// Depth-first generation into a single reused element; visitors must copy
// anything they keep.
class GroupEnumerator {
 public:
  static void signed_windows(GroupKind kind, int n, const std::function<void(const SignedPermutation&)>& visit) {
    SignedPermutation current;
    current.window_.assign(n, 0);
    std::vector<bool> used(n + 1, false);
    const bool allow_negative = kind != GroupKind::A;
    const bool even_only = kind == GroupKind::D;
    auto rec = [&](auto&& self, int pos, int negatives) -> void {
      if (pos == n) {
        if (!even_only || negatives % 2 == 0) visit(current);
        return;
      }
      for (int v = allow_negative ? -n : 1; v <= n; ++v) {
        if (v == 0 || used[std::abs(v)]) continue;
        used[std::abs(v)] = true;
        current.window_[pos] = v;
        self(self, pos + 1, negatives + (v < 0));
        used[std::abs(v)] = false;
      }
    };
    rec(rec, 0, 0);
  }

  static void colored(int n, int colors, const std::function<void(const ColoredPermutation&)>& visit) {
    ColoredPermutation current;
    current.colors_ = colors;
    current.entries_.assign(n, {});
    std::vector<bool> used(n + 1, false);
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == n) {
        visit(current);
        return;
      }
      for (int v = 1; v <= n; ++v) {
        if (used[v]) continue;
        used[v] = true;
        for (int z = 0; z < colors; ++z) {
          current.entries_[pos] = {v, z};
          self(self, pos + 1);
        }
        used[v] = false;
      }
    };
    rec(rec, 0);
  }
};

void for_each_signed(GroupKind kind, int n, const std::function<void(const SignedPermutation&)>& visit,
                     std::uint64_t cap) {
  if (kind == GroupKind::G) throw Error(ErrorCode::FlavorMismatch, "use for_each_colored for G_{m,n}");
  check_cap(kind, n, 1, cap);
  GroupEnumerator::signed_windows(kind, n, visit);
}

void for_each_colored(int n, int colors, const std::function<void(const ColoredPermutation&)>& visit,
                      std::uint64_t cap) {
  if (colors < 1) throw Error(ErrorCode::InvalidColorCount, "need at least one color");
  check_cap(GroupKind::G, n, colors, cap);
  GroupEnumerator::colored(n, colors, visit);
}

std::vector<SignedPermutation> enumerate_group(GroupKind kind, int n, std::uint64_t cap) {
  std::vector<SignedPermutation> out;
  for_each_signed(kind, n, [&](const SignedPermutation& p) { out.push_back(p); }, cap);
  return out;
}

std::vector<ColoredPermutation> enumerate_colored(int n, int colors, std::uint64_t cap) {
  std::vector<ColoredPermutation> out;
  for_each_colored(n, colors, [&](const ColoredPermutation& p) { out.push_back(p); }, cap);
  return out;
}

}  // namespace stirbd
