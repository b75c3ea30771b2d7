#include "stirbd/partitions.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <tuple>

#include "stirbd/error.hpp"

namespace stirbd {

namespace {

int min_abs(const SignedBlock& block) {
  int best = std::abs(block.front());
  for (int v : block) best = std::min(best, std::abs(v));
  return best;
}

// Sign of the entry of least absolute value.
bool is_pair_representative(const SignedBlock& block) {
  const int a = min_abs(block);
  return std::find(block.begin(), block.end(), a) != block.end();
}

int min_value(const ColoredBlock& block) {
  int best = block.front().value;
  for (const auto& e : block) best = std::min(best, e.value);
  return best;
}

int color_of(const ColoredBlock& block, int value) {
  for (const auto& e : block)
    if (e.value == value) return e.color;
  return 0;
}

// Calls visit once per set partition of elems (which must be sorted). Blocks
// come out sorted internally and ordered by their least element.
void for_each_set_partition(const std::vector<int>& elems,
                            const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  std::vector<std::vector<int>> blocks;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == elems.size()) {
      visit(blocks);
      return;
    }
    // Indexed: the recursion below may reallocate blocks.
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(elems[i]);
      self(self, i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({elems[i]});
    self(self, i + 1);
    blocks.pop_back();
  };
  rec(rec, 0);
}

int popcount(unsigned mask) { return __builtin_popcount(mask); }

std::atomic<std::uint64_t> partition_cap_override{0};

void check_partition_cap(const BigInt& total, std::uint64_t cap) {
  if (cap == 0) cap = partition_cap();
  if (total > cap) {
    throw Error(ErrorCode::SizeOverflow,
                "partition count " + total.str() + " exceeds enumeration cap " + std::to_string(cap));
  }
}

[[noreturn]] void invalid_ordered(const std::string& why) { throw Error(ErrorCode::InvalidOrderedPartition, why); }

}  // namespace

SignedBlock negate_block(const SignedBlock& block) {
  SignedBlock out;
  out.reserve(block.size());
  for (int v : block) out.push_back(-v);
  std::sort(out.begin(), out.end());
  return out;
}

ColoredBlock shift_block(const ColoredBlock& block, int shift, int colors) {
  ColoredBlock out;
  out.reserve(block.size());
  for (const auto& e : block) out.push_back({e.value, ((e.color + shift) % colors + colors) % colors});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedBlock> SignedPartition::expanded() const {
  std::vector<SignedBlock> out;
  if (has_zero_block()) {
    SignedBlock zero;
    for (int v : zero_support_) {
      zero.push_back(v);
      zero.push_back(-v);
    }
    std::sort(zero.begin(), zero.end());
    out.push_back(std::move(zero));
  }
  for (const auto& c : pairs_) {
    out.push_back(c);
    out.push_back(negate_block(c));
  }
  return out;
}

std::vector<ColoredBlock> ColoredPartition::expanded() const {
  std::vector<ColoredBlock> out;
  if (has_zero_block()) {
    ColoredBlock zero;
    for (int v : zero_support_)
      for (int z = 0; z < colors_; ++z) zero.push_back({v, z});
    out.push_back(std::move(zero));
  }
  for (const auto& c : orbits_)
    for (int s = 0; s < colors_; ++s) out.push_back(shift_block(c, s, colors_));
  return out;
}

// Direct construction for the generators, which only ever produce canonical data.
class PartitionBuilder {
 public:
  static SignedPartition make(PartitionKind kind, int n, std::vector<int> zero, std::vector<SignedBlock> pairs) {
    SignedPartition p;
    p.kind_ = kind;
    p.n_ = n;
    p.zero_support_ = std::move(zero);
    p.pairs_ = std::move(pairs);
    return p;
  }
  static ColoredPartition make(int n, int colors, std::vector<int> zero, std::vector<ColoredBlock> orbits) {
    ColoredPartition p;
    p.colors_ = colors;
    p.n_ = n;
    p.zero_support_ = std::move(zero);
    p.orbits_ = std::move(orbits);
    return p;
  }
};

SignedPartition validate_signed(PartitionKind kind, int n, const std::vector<SignedBlock>& raw_blocks) {
  if (n < 0) throw Error(ErrorCode::BadIndex, "negative rank");
  std::vector<int> hits(2 * n + 1, 0);
  std::set<SignedBlock> blocks;
  for (const auto& raw : raw_blocks) {
    if (raw.empty()) throw Error(ErrorCode::NotAPartition, "empty block");
    for (int v : raw) {
      if (v == 0 || std::abs(v) > n) throw Error(ErrorCode::NotAPartition, "entry " + std::to_string(v) + " outside [+-n]");
      if (++hits[v + n] > 1) throw Error(ErrorCode::NotAPartition, "entry " + std::to_string(v) + " repeated");
    }
    SignedBlock b = raw;
    std::sort(b.begin(), b.end());
    blocks.insert(std::move(b));
  }
  for (int v = -n; v <= n; ++v)
    if (v != 0 && hits[v + n] == 0) throw Error(ErrorCode::NotAPartition, "entry " + std::to_string(v) + " missing");

  std::vector<int> zero;
  int zero_blocks = 0;
  std::vector<SignedBlock> reps;
  for (const auto& b : blocks) {
    const auto neg = negate_block(b);
    if (neg == b) {
      if (++zero_blocks > 1) throw Error(ErrorCode::MultipleZeroBlocks, "more than one block with -C = C");
      for (int v : b)
        if (v > 0) zero.push_back(v);
      continue;
    }
    if (!blocks.contains(neg)) throw Error(ErrorCode::MirrorViolation, "block present without its negative");
    if (is_pair_representative(b)) reps.push_back(b);
  }
  if (kind == PartitionKind::D && zero.size() == 1)
    throw Error(ErrorCode::SingletonZeroBlock, "a D-partition zero-block needs at least two positive elements");
  std::sort(reps.begin(), reps.end(),
            [](const SignedBlock& a, const SignedBlock& b) { return min_abs(a) < min_abs(b); });
  return PartitionBuilder::make(kind, n, std::move(zero), std::move(reps));
}

SignedPartition validate_signed(PartitionKind kind, const std::vector<SignedBlock>& raw_blocks) {
  int n = 0;
  for (const auto& b : raw_blocks)
    for (int v : b) n = std::max(n, std::abs(v));
  return validate_signed(kind, n, raw_blocks);
}

ColoredPartition validate_colored(int n, int colors, const std::vector<ColoredBlock>& raw_blocks) {
  if (colors < 2) throw Error(ErrorCode::InvalidColorCount, "colored partitions need m >= 2");
  if (n < 0) throw Error(ErrorCode::BadIndex, "negative rank");
  auto index = [colors](const ColoredEntry& e) { return (e.value - 1) * colors + e.color; };
  std::vector<int> hits(static_cast<std::size_t>(n) * colors, 0);
  std::set<ColoredBlock> blocks;
  for (const auto& raw : raw_blocks) {
    if (raw.empty()) throw Error(ErrorCode::NotAPartition, "empty block");
    for (const auto& e : raw) {
      if (e.value < 1 || e.value > n || e.color < 0 || e.color >= colors)
        throw Error(ErrorCode::NotAPartition, "symbol outside the colored alphabet");
      if (++hits[index(e)] > 1) throw Error(ErrorCode::NotAPartition, "symbol repeated");
    }
    ColoredBlock b = raw;
    std::sort(b.begin(), b.end());
    blocks.insert(std::move(b));
  }
  if (std::find(hits.begin(), hits.end(), 0) != hits.end())
    throw Error(ErrorCode::NotAPartition, "alphabet not covered");

  std::vector<int> zero;
  int zero_blocks = 0;
  std::vector<ColoredBlock> reps;
  for (const auto& b : blocks) {
    if (shift_block(b, 1, colors) == b) {
      if (++zero_blocks > 1) throw Error(ErrorCode::MultipleZeroBlocks, "more than one shift-invariant block");
      for (const auto& e : b)
        if (e.color == 0) zero.push_back(e.value);
      continue;
    }
    for (std::size_t i = 1; i < b.size(); ++i)
      if (b[i].value == b[i - 1].value)
        throw Error(ErrorCode::RepeatedValueInBlock, "nonzero block meets value " + std::to_string(b[i].value) + " twice");
    if (!blocks.contains(shift_block(b, 1, colors)))
      throw Error(ErrorCode::MirrorViolation, "block present without its shift");
    if (color_of(b, min_value(b)) == 0) reps.push_back(b);
  }
  std::sort(zero.begin(), zero.end());
  std::sort(reps.begin(), reps.end(),
            [](const ColoredBlock& a, const ColoredBlock& b) { return min_value(a) < min_value(b); });
  return PartitionBuilder::make(n, colors, std::move(zero), std::move(reps));
}

SignedPartition to_signed(const ColoredPartition& p) {
  if (p.colors() != 2) throw Error(ErrorCode::InvalidColorCount, "only 2-colored partitions are signed partitions");
  std::vector<SignedBlock> pairs;
  for (const auto& orbit : p.orbits()) {
    SignedBlock b;
    for (const auto& e : orbit) b.push_back(e.color == 0 ? e.value : -e.value);
    std::sort(b.begin(), b.end());
    pairs.push_back(std::move(b));
  }
  return PartitionBuilder::make(PartitionKind::B, p.rank(), p.zero_support(), std::move(pairs));
}

BigInt partition_total(PartitionKind kind, int n) {
  BigInt total = 0;
  for (int j = 0; j <= n; ++j) {
    if (kind == PartitionKind::D && j == 1) continue;
    for (int r = 0; r <= n - j; ++r)
      total += binomial(n, j) * stirling2_recurrence(n - j, r) * power(2, static_cast<unsigned>(n - j - r));
  }
  return total;
}

BigInt colored_partition_total(int n, int colors) {
  BigInt total = 0;
  for (int j = 0; j <= n; ++j)
    for (int r = 0; r <= n - j; ++r)
      total += binomial(n, j) * stirling2_recurrence(n - j, r) * power(colors, static_cast<unsigned>(n - j - r));
  return total;
}

std::uint64_t partition_cap() noexcept {
  const auto c = partition_cap_override.load();
  return c != 0 ? c : kDefaultPartitionCap;
}

void set_partition_cap(std::uint64_t cap) noexcept { partition_cap_override.store(cap); }

void for_each_signed_partition(PartitionKind kind, int n, const std::function<void(const SignedPartition&)>& visit,
                               std::uint64_t cap) {
  if (n < 0) throw Error(ErrorCode::BadIndex, "negative rank");
  check_partition_cap(partition_total(kind, n), cap);
  for (unsigned zmask = 0; zmask < (1u << n); ++zmask) {
    if (kind == PartitionKind::D && popcount(zmask) == 1) continue;
    std::vector<int> zero, rest;
    for (int v = 1; v <= n; ++v) ((zmask >> (v - 1)) & 1u ? zero : rest).push_back(v);
    for_each_set_partition(rest, [&](const std::vector<std::vector<int>>& classes) {
      const int free_signs = static_cast<int>(rest.size() - classes.size());
      for (unsigned smask = 0; smask < (1u << free_signs); ++smask) {
        std::vector<SignedBlock> pairs;
        pairs.reserve(classes.size());
        int bit = 0;
        for (const auto& c : classes) {
          SignedBlock b{c.front()};
          for (std::size_t i = 1; i < c.size(); ++i) b.push_back((smask >> bit++) & 1u ? -c[i] : c[i]);
          std::sort(b.begin(), b.end());
          pairs.push_back(std::move(b));
        }
        visit(PartitionBuilder::make(kind, n, zero, std::move(pairs)));
      }
    });
  }
}

void for_each_colored_partition(int n, int colors, const std::function<void(const ColoredPartition&)>& visit,
                                std::uint64_t cap) {
  if (colors < 2) throw Error(ErrorCode::InvalidColorCount, "colored partitions need m >= 2");
  if (n < 0) throw Error(ErrorCode::BadIndex, "negative rank");
  check_partition_cap(colored_partition_total(n, colors), cap);
  for (unsigned zmask = 0; zmask < (1u << n); ++zmask) {
    std::vector<int> zero, rest;
    for (int v = 1; v <= n; ++v) ((zmask >> (v - 1)) & 1u ? zero : rest).push_back(v);
    for_each_set_partition(rest, [&](const std::vector<std::vector<int>>& classes) {
      const int free_colors = static_cast<int>(rest.size() - classes.size());
      std::uint64_t combos = 1;
      for (int i = 0; i < free_colors; ++i) combos *= static_cast<std::uint64_t>(colors);
      for (std::uint64_t code = 0; code < combos; ++code) {
        std::uint64_t digits = code;
        std::vector<ColoredBlock> orbits;
        orbits.reserve(classes.size());
        for (const auto& c : classes) {
          ColoredBlock b{{c.front(), 0}};
          for (std::size_t i = 1; i < c.size(); ++i) {
            b.push_back({c[i], static_cast<int>(digits % colors)});
            digits /= colors;
          }
          orbits.push_back(std::move(b));
        }
        visit(PartitionBuilder::make(n, colors, zero, std::move(orbits)));
      }
    });
  }
}

std::vector<SignedPartition> enumerate_partitions(PartitionKind kind, int n, std::uint64_t cap) {
  std::vector<SignedPartition> out;
  for_each_signed_partition(kind, n, [&](const SignedPartition& p) { out.push_back(p); }, cap);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ColoredPartition> enumerate_colored_partitions(int n, int colors, std::uint64_t cap) {
  std::vector<ColoredPartition> out;
  for_each_colored_partition(n, colors, [&](const ColoredPartition& p) { out.push_back(p); }, cap);
  std::sort(out.begin(), out.end());
  return out;
}

BigInt stirling2_recurrence(int n, int r) {
  if (n < 0 || r < 0 || r > n) return 0;
  std::vector<BigInt> row{1};  // row n = 0
  for (int i = 1; i <= n; ++i) {
    std::vector<BigInt> next(i + 1, 0);
    for (int k = 1; k <= i; ++k) next[k] = (k < i ? k * row[k] : BigInt(0)) + row[k - 1];
    row = std::move(next);
  }
  return row[r];
}

namespace {

using Histogram = std::vector<BigInt>;

Histogram stirling_histogram(StirlingKind kind, int n, int colors) {
  Histogram h;
  auto bump = [&h](int idx) {
    if (static_cast<int>(h.size()) <= idx) h.resize(idx + 1, 0);
    ++h[idx];
  };
  switch (kind) {
    case StirlingKind::classicalA: {
      std::vector<int> elems(n);
      std::iota(elems.begin(), elems.end(), 1);
      for_each_set_partition(elems, [&](const std::vector<std::vector<int>>& b) { bump(static_cast<int>(b.size())); });
      break;
    }
    case StirlingKind::B:
    case StirlingKind::D:
      for_each_signed_partition(kind == StirlingKind::B ? PartitionKind::B : PartitionKind::D, n,
                                [&](const SignedPartition& p) { bump(p.pair_count()); });
      break;
    case StirlingKind::Bstar:
      for_each_signed_partition(PartitionKind::B, n, [&](const SignedPartition& p) { bump(p.block_count()); });
      break;
    case StirlingKind::G:
      for_each_colored_partition(n, colors, [&](const ColoredPartition& p) { bump(p.orbit_count()); });
      break;
  }
  return h;
}

}  // namespace

BigInt stirling(StirlingKind kind, int n, int r, int colors) {
  if (n < 0 || r < 0) return 0;
  if (kind != StirlingKind::G) colors = 0;
  static std::mutex mu;
  static std::map<std::tuple<StirlingKind, int, int>, Histogram> memo;
  const auto key = std::make_tuple(kind, n, colors);
  Histogram h;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(key); it != memo.end()) h = it->second;
  }
  if (h.empty()) {
    h = stirling_histogram(kind, n, colors);
    std::lock_guard lock(mu);
    memo.emplace(key, h);
  }
  return r < static_cast<int>(h.size()) ? h[r] : BigInt(0);
}

BigInt literal_colored_stirling(int n, int r, int colors) {
  if (colors < 2) throw Error(ErrorCode::InvalidColorCount, "colored partitions need m >= 2");
  if (n * colors > 10) throw Error(ErrorCode::SizeOverflow, "literal colored count limited to m*n <= 10");
  const int size = n * colors;
  auto shift = [colors](int e) { return e - e % colors + (e % colors + 1) % colors; };
  std::vector<int> alphabet(size);
  std::iota(alphabet.begin(), alphabet.end(), 0);
  BigInt count = 0;
  for_each_set_partition(alphabet, [&](const std::vector<std::vector<int>>& blocks) {
    std::vector<int> owner(size);
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (int e : blocks[b]) owner[e] = static_cast<int>(b);
    // The shift must map every block onto a single block.
    std::vector<int> image(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      image[b] = owner[shift(blocks[b].front())];
      for (int e : blocks[b])
        if (owner[shift(e)] != image[b]) return;
    }
    int fixed = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) fixed += image[b] == static_cast<int>(b);
    if (fixed > 1) return;
    std::vector<bool> seen(blocks.size(), false);
    int classes = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (seen[b] || image[b] == static_cast<int>(b)) continue;
      ++classes;
      for (int c = static_cast<int>(b); !seen[c]; c = image[c]) seen[c] = true;
    }
    if (classes == r) ++count;
  });
  return count;
}

// ---------------------------------------------------------------------------

OrderedSignedPartition::OrderedSignedPartition(PartitionKind kind, int n, std::vector<int> zero_support,
                                               std::vector<SignedBlock> leaders)
    : kind_(kind), n_(n), zero_support_(std::move(zero_support)), leaders_(std::move(leaders)) {
  std::sort(zero_support_.begin(), zero_support_.end());
  for (int v : zero_support_)
    if (v <= 0) invalid_ordered("zero support must list positive values");
  for (auto& c : leaders_) std::sort(c.begin(), c.end());
  try {
    (void)validate_signed(kind_, n_, blocks());
  } catch (const Error& e) {
    invalid_ordered(e.what());
  }
}

OrderedSignedPartition OrderedSignedPartition::from_blocks(PartitionKind kind, int n,
                                                           const std::vector<SignedBlock>& blocks) {
  std::vector<int> zero;
  std::vector<SignedBlock> leaders;
  std::size_t i = 0;
  auto sorted = [](SignedBlock b) {
    std::sort(b.begin(), b.end());
    return b;
  };
  if (!blocks.empty()) {
    auto first = sorted(blocks.front());
    if (!first.empty() && negate_block(first) == first) {
      for (int v : first)
        if (v > 0) zero.push_back(v);
      i = 1;
    }
  }
  for (; i < blocks.size(); i += 2) {
    auto c = sorted(blocks[i]);
    if (!c.empty() && negate_block(c) == c) invalid_ordered("zero-block must come first");
    if (i + 1 >= blocks.size() || sorted(blocks[i + 1]) != negate_block(c))
      invalid_ordered("block not immediately followed by its negative");
    leaders.push_back(std::move(c));
  }
  return OrderedSignedPartition(kind, n, std::move(zero), std::move(leaders));
}

std::vector<SignedBlock> OrderedSignedPartition::blocks() const {
  std::vector<SignedBlock> out;
  if (has_zero_block()) {
    SignedBlock zero;
    for (int v : zero_support_) {
      zero.push_back(-v);
      zero.push_back(v);
    }
    std::sort(zero.begin(), zero.end());
    out.push_back(std::move(zero));
  }
  for (const auto& c : leaders_) {
    out.push_back(c);
    out.push_back(negate_block(c));
  }
  return out;
}

SignedPartition OrderedSignedPartition::unordered() const { return validate_signed(kind_, n_, blocks()); }

OrderedColoredPartition::OrderedColoredPartition(int n, int colors, std::vector<int> zero_support,
                                                 std::vector<ColoredBlock> leaders)
    : colors_(colors), n_(n), zero_support_(std::move(zero_support)), leaders_(std::move(leaders)) {
  std::sort(zero_support_.begin(), zero_support_.end());
  for (auto& c : leaders_) std::sort(c.begin(), c.end());
  try {
    (void)validate_colored(n_, colors_, blocks());
  } catch (const Error& e) {
    invalid_ordered(e.what());
  }
}

std::vector<ColoredBlock> OrderedColoredPartition::blocks() const {
  std::vector<ColoredBlock> out;
  if (has_zero_block()) {
    ColoredBlock zero;
    for (int v : zero_support_)
      for (int z = 0; z < colors_; ++z) zero.push_back({v, z});
    out.push_back(std::move(zero));
  }
  for (const auto& c : leaders_)
    for (int s = 0; s < colors_; ++s) out.push_back(shift_block(c, s, colors_));
  return out;
}

ColoredPartition OrderedColoredPartition::unordered() const { return validate_colored(n_, colors_, blocks()); }

BigInt ordering_count(const SignedPartition& p) {
  return power(2, static_cast<unsigned>(p.pair_count())) * factorial(p.pair_count());
}

BigInt ordering_count(const ColoredPartition& p) {
  return power(p.colors(), static_cast<unsigned>(p.orbit_count())) * factorial(p.orbit_count());
}

void for_each_ordering(const SignedPartition& p, const std::function<void(const OrderedSignedPartition&)>& visit) {
  const int r = p.pair_count();
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      std::vector<SignedBlock> leaders;
      leaders.reserve(r);
      for (int i = 0; i < r; ++i) {
        const auto& rep = p.pairs()[order[i]];
        leaders.push_back((mask >> i) & 1u ? negate_block(rep) : rep);
      }
      visit(OrderedSignedPartition(p.kind(), p.rank(), p.zero_support(), std::move(leaders)));
    }
  } while (std::next_permutation(order.begin(), order.end()));
}

void for_each_ordering(const ColoredPartition& p, const std::function<void(const OrderedColoredPartition&)>& visit) {
  const int r = p.orbit_count();
  const int m = p.colors();
  std::uint64_t combos = 1;
  for (int i = 0; i < r; ++i) combos *= static_cast<std::uint64_t>(m);
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  do {
    for (std::uint64_t code = 0; code < combos; ++code) {
      std::uint64_t digits = code;
      std::vector<ColoredBlock> leaders;
      leaders.reserve(r);
      for (int i = 0; i < r; ++i) {
        leaders.push_back(shift_block(p.orbits()[order[i]], static_cast<int>(digits % m), m));
        digits /= m;
      }
      visit(OrderedColoredPartition(p.rank(), m, p.zero_support(), std::move(leaders)));
    }
  } while (std::next_permutation(order.begin(), order.end()));
}

std::vector<OrderedSignedPartition> orderings(const SignedPartition& p) {
  std::vector<OrderedSignedPartition> out;
  for_each_ordering(p, [&](const OrderedSignedPartition& o) { out.push_back(o); });
  return out;
}

std::vector<OrderedColoredPartition> orderings(const ColoredPartition& p) {
  std::vector<OrderedColoredPartition> out;
  for_each_ordering(p, [&](const OrderedColoredPartition& o) { out.push_back(o); });
  return out;
}

}  // namespace stirbd
