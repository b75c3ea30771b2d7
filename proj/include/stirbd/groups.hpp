#pragma once

// Elements of the hyperoctahedral group B_n, its even-signed subgroup D_n and
// the colored permutation group G_{m,n}, together with their descent
// statistics. Windows are 1-indexed in every public accessor; position 0
// only ever denotes the virtual entry used by the type B/D descent rules.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace stirbd {

class SignedPermutation {
 public:
  SignedPermutation() = default;

  // Throws Error(InvalidPermutation) unless |window| is a permutation of [n].
  explicit SignedPermutation(std::vector<int> window);

  static SignedPermutation identity(int n);

  int size() const noexcept { return static_cast<int>(window_.size()); }
  int operator()(int position) const { return window_.at(position - 1); }
  std::span<const int> window() const noexcept { return window_; }

  int negative_count() const noexcept;
  bool is_even() const noexcept { return negative_count() % 2 == 0; }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  friend class GroupEnumerator;
  std::vector<int> window_;
};

struct ColoredEntry {
  int value = 0;
  int color = 0;

  friend bool operator==(const ColoredEntry&, const ColoredEntry&) = default;
  friend auto operator<=>(const ColoredEntry&, const ColoredEntry&) = default;
};

class ColoredPermutation {
 public:
  ColoredPermutation() = default;

  // Values must form a permutation of [n]; colors must lie in [0, m).
  ColoredPermutation(int colors, std::vector<ColoredEntry> entries);

  int colors() const noexcept { return colors_; }
  int size() const noexcept { return static_cast<int>(entries_.size()); }
  const ColoredEntry& operator()(int position) const { return entries_.at(position - 1); }
  std::span<const ColoredEntry> entries() const noexcept { return entries_; }

  // Position of a^{[z]} in the color order
  //   1^{[m-1]} < ... < n^{[m-1]} < ... < 1^{[1]} < ... < n^{[1]} < 1 < ... < n.
  int order_key(const ColoredEntry& e) const noexcept {
    return (colors_ - 1 - e.color) * size() + (e.value - 1);
  }

  // Reads a signed permutation as an element of G_{2,n}: -v becomes v^{[1]}.
  static ColoredPermutation from_signed(const SignedPermutation& p);

  friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;
  friend auto operator<=>(const ColoredPermutation&, const ColoredPermutation&) = default;

 private:
  friend class GroupEnumerator;
  int colors_ = 1;
  std::vector<ColoredEntry> entries_;
};

enum class Flavor { A, B, D, G };

// Sorted positions. Flavors B and D may contain 0; A and G never do.
struct DescentSet {
  std::vector<int> positions;

  int size() const noexcept { return static_cast<int>(positions.size()); }
  bool contains(int i) const noexcept;

  friend bool operator==(const DescentSet&, const DescentSet&) = default;
};

DescentSet descent_set(const SignedPermutation& p, Flavor flavor);
DescentSet descent_set(const ColoredPermutation& p, Flavor flavor);

enum class Stat { desB, desD, desG, fdes };

// Which order fdes uses for its internal type A descent count.
enum class DescentOrder { natural, color };

int des_stat(const SignedPermutation& p, Stat stat, DescentOrder order = DescentOrder::natural);
int des_stat(const ColoredPermutation& p, Stat stat);

// Raw-window kernels shared with the enumeration sweeps.
namespace kernel {
int des_a(std::span<const int> w) noexcept;
int des_b(std::span<const int> w) noexcept;
int des_d(std::span<const int> w) noexcept;
int des_a_color_order(std::span<const int> w) noexcept;
int fdes(std::span<const int> w, DescentOrder order) noexcept;
}  // namespace kernel

enum class GroupKind { A, B, D, G };

// Default ceilings on how many elements one sweep may visit: |B_8| for the
// signed groups, 10^7 for G_{m,n}.
inline constexpr std::uint64_t kDefaultGroupCap = 10'321'920;
inline constexpr std::uint64_t kDefaultColoredCap = 10'000'000;

// The cap used when a sweep is given cap = 0. set_group_cap(0) restores the defaults.
std::uint64_t group_cap(GroupKind kind) noexcept;
void set_group_cap(std::uint64_t cap) noexcept;

// Exact group order, saturating at UINT64_MAX.
std::uint64_t group_order(GroupKind kind, int n, int colors = 1);

// Lexicographic window order for A/B/D, lexicographic on (value, color)
// pairs for G. Kind A yields ordinary permutations as all-positive windows.
// Throws Error(SizeOverflow) when group_order exceeds cap (0 = group_cap(kind)).
void for_each_signed(GroupKind kind, int n, const std::function<void(const SignedPermutation&)>& visit,
                     std::uint64_t cap = 0);
void for_each_colored(int n, int colors, const std::function<void(const ColoredPermutation&)>& visit,
                      std::uint64_t cap = 0);

std::vector<SignedPermutation> enumerate_group(GroupKind kind, int n, std::uint64_t cap = 0);
std::vector<ColoredPermutation> enumerate_colored(int n, int colors, std::uint64_t cap = 0);

}  // namespace stirbd
