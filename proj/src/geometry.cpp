#include "stirbd/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "stirbd/error.hpp"

namespace stirbd {

namespace {

// Coordinate labels: 0 for a zero coordinate, otherwise +-(class id), where
// class ids count distinct magnitudes from 1 in order of first appearance and
// the sign is relative to the first coordinate of the class. The torus
// variant stores the relative color in place of the sign.
using PointKey = std::vector<int>;

PointKey cube_key(std::span<const int> coords) {
  PointKey key(coords.size(), 0);
  std::vector<std::pair<int, int>> seen;  // (magnitude, sign of first) -> id = index+1
  for (std::size_t j = 0; j < coords.size(); ++j) {
    const int v = coords[j];
    if (v == 0) continue;
    const int mag = std::abs(v);
    const int sign = v < 0 ? -1 : 1;
    auto it = std::find_if(seen.begin(), seen.end(), [mag](const auto& s) { return s.first == mag; });
    if (it == seen.end()) {
      seen.emplace_back(mag, sign);
      key[j] = static_cast<int>(seen.size());
    } else {
      const int id = static_cast<int>(it - seen.begin()) + 1;
      key[j] = sign == it->second ? id : -id;
    }
  }
  return key;
}

SignedPartition partition_from_key(PartitionKind kind, const PointKey& key) {
  const int n = static_cast<int>(key.size());
  std::vector<SignedBlock> raw;
  SignedBlock zero;
  int classes = 0;
  for (int label : key) classes = std::max(classes, std::abs(label));
  std::vector<SignedBlock> leaders(classes);
  for (int j = 0; j < n; ++j) {
    const int coordinate = j + 1;
    if (key[j] == 0) {
      zero.push_back(coordinate);
      zero.push_back(-coordinate);
    } else {
      leaders[std::abs(key[j]) - 1].push_back(key[j] > 0 ? coordinate : -coordinate);
    }
  }
  if (!zero.empty()) raw.push_back(std::move(zero));
  for (auto& c : leaders) {
    raw.push_back(negate_block(c));
    raw.push_back(std::move(c));
  }
  return validate_signed(kind, n, raw);
}

bool has_repeated_magnitude(std::span<const int> coords) {
  std::vector<int> mags;
  for (int v : coords)
    if (v != 0) mags.push_back(std::abs(v));
  std::sort(mags.begin(), mags.end());
  return std::adjacent_find(mags.begin(), mags.end()) != mags.end();
}

PointKey torus_key(std::span<const TorusValue> coords, int colors) {
  PointKey key(coords.size() * 2, 0);  // (class id, relative color) per coordinate
  std::vector<std::pair<int, int>> seen;  // (magnitude, color of first)
  for (std::size_t j = 0; j < coords.size(); ++j) {
    const auto& v = coords[j];
    if (v.is_zero()) continue;
    auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& s) { return s.first == v.magnitude; });
    if (it == seen.end()) {
      seen.emplace_back(v.magnitude, v.color);
      key[2 * j] = static_cast<int>(seen.size());
    } else {
      key[2 * j] = static_cast<int>(it - seen.begin()) + 1;
      key[2 * j + 1] = ((v.color - it->second) % colors + colors) % colors;
    }
  }
  return key;
}

ColoredPartition colored_from_key(int n, int colors, const PointKey& key) {
  std::vector<ColoredBlock> raw;
  ColoredBlock zero;
  int classes = 0;
  for (int j = 0; j < n; ++j) classes = std::max(classes, key[2 * j]);
  std::vector<ColoredBlock> leaders(classes);
  for (int j = 0; j < n; ++j) {
    if (key[2 * j] == 0) {
      for (int z = 0; z < colors; ++z) zero.push_back({j + 1, z});
    } else {
      leaders[key[2 * j] - 1].push_back({j + 1, key[2 * j + 1]});
    }
  }
  if (!zero.empty()) raw.push_back(std::move(zero));
  for (const auto& c : leaders)
    for (int s = 0; s < colors; ++s) raw.push_back(shift_block(c, s, colors));
  return validate_colored(n, colors, raw);
}

std::uint64_t checked_points(std::uint64_t base, int n, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > cap / std::max<std::uint64_t>(base, 1))
      throw Error(ErrorCode::SizeOverflow, "point count exceeds census cap " + std::to_string(cap));
    total *= base;
  }
  if (total > cap) throw Error(ErrorCode::SizeOverflow, "point count exceeds census cap " + std::to_string(cap));
  return total;
}

// Odometer over [lo, hi]^n; visit receives the current point.
template <class Visit>
void for_each_grid_point(int n, int lo, int hi, Visit&& visit) {
  std::vector<int> p(n, lo);
  while (true) {
    visit(std::span<const int>(p));
    int i = n - 1;
    while (i >= 0 && p[i] == hi) p[i--] = lo;
    if (i < 0) return;
    ++p[i];
  }
}

}  // namespace

CubeClassification classify_point(ArrangementKind kind, int n, std::span<const int> coords) {
  if (static_cast<int>(coords.size()) != n) throw Error(ErrorCode::DimensionMismatch, "point has wrong dimension");
  if (kind == ArrangementKind::B) return {partition_from_key(PartitionKind::B, cube_key(coords))};
  const auto zeros = std::count(coords.begin(), coords.end(), 0);
  if (zeros == 1) {
    // A lone zero is only possible on the finest partition; otherwise the point is missed.
    if (has_repeated_magnitude(coords)) return {std::nullopt};
    PointKey key(n);
    for (int j = 0; j < n; ++j) key[j] = j + 1;
    return {partition_from_key(PartitionKind::D, key)};
  }
  return {partition_from_key(PartitionKind::D, cube_key(coords))};
}

ColoredPartition classify_torus_point(int n, int colors, std::span<const TorusValue> coords) {
  if (static_cast<int>(coords.size()) != n) throw Error(ErrorCode::DimensionMismatch, "point has wrong dimension");
  return colored_from_key(n, colors, torus_key(coords, colors));
}

CensusResult census(ArrangementKind kind, int n, int half_width, std::uint64_t cap) {
  if (n < 0 || half_width < 0) throw Error(ErrorCode::BadIndex, "negative rank or width");
  const std::uint64_t x = 2 * static_cast<std::uint64_t>(half_width) + 1;
  checked_points(x, n, cap);

  CensusResult result;
  result.kind = kind;
  result.n = n;
  result.x = x;
  std::map<PointKey, BigInt> tally;
  PointKey finest(n);
  for (int j = 0; j < n; ++j) finest[j] = j + 1;
  for_each_grid_point(n, -half_width, half_width, [&](std::span<const int> p) {
    ++result.total;
    if (kind == ArrangementKind::D && std::count(p.begin(), p.end(), 0) == 1) {
      if (has_repeated_magnitude(p))
        ++result.missing_points;
      else
        ++tally[finest];
      return;
    }
    ++tally[cube_key(p)];
  });
  const auto pkind = kind == ArrangementKind::B ? PartitionKind::B : PartitionKind::D;
  for (auto& [key, count] : tally) {
    auto part = partition_from_key(pkind, key);
    if (part.pair_count() == n) result.free_points += count;
    result.counts.push_back({std::move(part), count});
  }
  std::sort(result.counts.begin(), result.counts.end(),
            [](const auto& a, const auto& b) { return a.partition < b.partition; });
  return result;
}

TorusCensusResult torus_census(int n, int colors, int magnitudes, std::uint64_t cap) {
  if (colors < 2) throw Error(ErrorCode::InvalidColorCount, "torus census needs m >= 2");
  if (magnitudes < 1 || n < 0) throw Error(ErrorCode::BadIndex, "need t >= 1 and n >= 0");
  const std::uint64_t x = static_cast<std::uint64_t>(colors) * magnitudes + 1;
  checked_points(x, n, cap);

  TorusCensusResult result;
  result.n = n;
  result.colors = colors;
  result.magnitudes = magnitudes;
  result.x = x;
  // Circle point i in [0, x): 0 is ZERO, otherwise color (i-1)/t and magnitude (i-1)%t + 1.
  auto circle = [&](int i) {
    return i == 0 ? TorusValue{} : TorusValue{(i - 1) / magnitudes, (i - 1) % magnitudes + 1};
  };
  std::map<PointKey, BigInt> tally;
  std::vector<TorusValue> point(n);
  for_each_grid_point(n, 0, static_cast<int>(x) - 1, [&](std::span<const int> idx) {
    for (int j = 0; j < n; ++j) point[j] = circle(idx[j]);
    ++result.total;
    ++tally[torus_key(point, colors)];
  });
  for (auto& [key, count] : tally) {
    auto part = colored_from_key(n, colors, key);
    if (part.orbit_count() == n) result.free_points += count;
    result.counts.push_back({std::move(part), count});
  }
  std::sort(result.counts.begin(), result.counts.end(),
            [](const auto& a, const auto& b) { return a.partition < b.partition; });
  return result;
}

BigInt free_point_count(FreePointKind kind, int n, int x, int colors, std::uint64_t cap) {
  if (x < 1 || n < 0) throw Error(ErrorCode::BadIndex, "need x >= 1 and n >= 0");
  checked_points(static_cast<std::uint64_t>(x), n, cap);
  BigInt count = 0;
  if (kind == FreePointKind::G) {
    if (colors < 2 || (x - 1) % colors != 0) throw Error(ErrorCode::BadIndex, "torus needs x = m t + 1");
    const int t = (x - 1) / colors;
    // Only magnitudes matter for incidence: 0 for ZERO, 1..t otherwise.
    for_each_grid_point(n, 0, x - 1, [&](std::span<const int> idx) {
      std::vector<int> mags;
      for (int i : idx) mags.push_back(i == 0 ? 0 : (i - 1) % t + 1);
      std::sort(mags.begin(), mags.end());
      if ((mags.empty() || mags.front() != 0) && std::adjacent_find(mags.begin(), mags.end()) == mags.end()) ++count;
    });
    return count;
  }
  if (x % 2 == 0) throw Error(ErrorCode::BadIndex, "types B and D need odd x");
  const int h = (x - 1) / 2;
  for_each_grid_point(n, -h, h, [&](std::span<const int> p) {
    std::vector<int> mags;
    for (int v : p) mags.push_back(std::abs(v));
    std::sort(mags.begin(), mags.end());
    if (std::adjacent_find(mags.begin(), mags.end()) != mags.end()) return;  // on some x_i = +-x_j
    if (kind == FreePointKind::B && !mags.empty() && mags.front() == 0) return;  // on some x_i = 0
    ++count;
  });
  return count;
}

}  // namespace stirbd
