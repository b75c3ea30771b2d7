#pragma once

// Lattice-point census for the type B / D coordinate arrangements on the cube
// {-h..h}^n (x = 2h+1 points per axis) and for the colored arrangement on a
// discretized torus (x = m t + 1 points per circle). Every point is mapped to
// the partition describing the smallest intersection subspace containing it.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stirbd/bigint.hpp"
#include "stirbd/partitions.hpp"

namespace stirbd {

inline constexpr std::uint64_t kDefaultCensusCap = 100'000'000;

// A point of the torus circle: either the distinguished point (ZERO) or the
// point of magnitude 1..t on the arc of color z.
struct TorusValue {
  int color = 0;
  int magnitude = 0;  // 0 encodes ZERO

  bool is_zero() const noexcept { return magnitude == 0; }
  friend bool operator==(const TorusValue&, const TorusValue&) = default;
};

enum class ArrangementKind { B, D };

struct CubeClassification {
  // Empty when the point is one of the type D points with exactly one zero
  // coordinate and a repeated absolute value elsewhere.
  std::optional<SignedPartition> partition;
  bool missing() const noexcept { return !partition.has_value(); }
};

// Throws DimensionMismatch when coords.size() != n.
CubeClassification classify_point(ArrangementKind kind, int n, std::span<const int> coords);
ColoredPartition classify_torus_point(int n, int colors, std::span<const TorusValue> coords);

template <class Partition>
struct PartitionCount {
  Partition partition;
  BigInt count;
};

struct CensusResult {
  ArrangementKind kind = ArrangementKind::B;
  int n = 0;
  BigInt x = 0;
  std::vector<PartitionCount<SignedPartition>> counts;  // sorted by partition
  BigInt free_points = 0;     // points on no hyperplane
  BigInt missing_points = 0;  // type D only
  BigInt total = 0;           // every point visited, missing included
};

struct TorusCensusResult {
  int n = 0;
  int colors = 2;
  int magnitudes = 1;
  BigInt x = 0;
  std::vector<PartitionCount<ColoredPartition>> counts;
  BigInt free_points = 0;
  BigInt total = 0;
};

// Throws SizeOverflow when x^n exceeds cap.
CensusResult census(ArrangementKind kind, int n, int half_width, std::uint64_t cap = kDefaultCensusCap);
TorusCensusResult torus_census(int n, int colors, int magnitudes, std::uint64_t cap = kDefaultCensusCap);

// Number of points off every hyperplane: [x]^B_n, [x]^D_n, or [x]^m_n (kind
// G, x = m t + 1). Counted directly on the grid; x must be odd for B and D.
enum class FreePointKind { B, D, G };
BigInt free_point_count(FreePointKind kind, int n, int x, int colors = 2, std::uint64_t cap = kDefaultCensusCap);

}  // namespace stirbd
