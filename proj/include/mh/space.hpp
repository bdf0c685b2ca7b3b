#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mh/ext_dist.hpp"

namespace mh {

using Point = std::uint32_t;

/// A tuple of point indices (x_0, ..., x_n).
using Tuple = std::vector<Point>;

/// Quadruple with x0<=x1<=x2, x1<=x2<=x3, x1 != x2 and not x0<=x1<=x3.
struct FourCut {
  Point x0, x1, x2, x3;
  /// d(x0,x1) + d(x1,x2) + d(x2,x3).
  Rational length;
  bool operator==(const FourCut&) const = default;
};

/// I(a, b) ordered by distance from a; `points` is sorted by d(a, .) and then
/// by index.
struct Interval {
  Point a = 0, b = 0;
  std::vector<Point> points;
  bool totally_ordered = true;
};

struct GeodeticCheck {
  bool geodetic = true;
  /// When not geodetic: x and y are incomparable in I(a, b).
  Point a = 0, b = 0, x = 0, y = 0;
};

struct DistanceRegularity {
  bool regular = false;
  /// |{y : d(x, y) = l}| for x = point 0 (the common value when regular).
  std::map<Rational, std::size_t> counts;
};

/// A finite quasi metric space with exact distances.
///
/// Internally every finite distance is also stored as an integer multiple of
/// 1/scale(), where scale() is the lcm of all denominators, so that lengths of
/// tuples can be summed and compared with plain integer arithmetic.
class QuasiMetricSpace {
 public:
  static constexpr std::int64_t kInfiniteUnits = -1;

  /// Validates d(x,x) = 0, d(x,y) = 0 => x = y, and the triangle inequality.
  /// Throws AxiomViolation with a witness on failure.
  static QuasiMetricSpace from_distance_matrix(std::vector<std::vector<ExtDist>> dist,
                                               std::vector<std::string> labels = {});

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<ExtDist>>& matrix() const { return dist_; }
  const ExtDist& distance(Point x, Point y) const { return dist_[x][y]; }
  bool finite(Point x, Point y) const { return units_[x * size() + y] != kInfiniteUnits; }

  /// d(x, y) * scale(), or kInfiniteUnits.
  std::int64_t units(Point x, Point y) const { return units_[x * size() + y]; }
  const Integer& scale() const { return scale_; }
  /// Smallest positive finite distance in units; 0 for spaces with < 2 points
  /// or no finite positive distance.
  std::int64_t min_positive_units() const { return min_positive_units_; }

  /// Converts an exact length to units; nullopt if it is not a multiple of 1/scale().
  std::optional<std::int64_t> to_units(const Rational& ell) const;
  Rational from_units(std::int64_t units) const;

  /// Sum of consecutive distances in units; nullopt when some step is infinite.
  std::optional<std::int64_t> length_units(const Tuple& tuple) const;
  /// Exact length; throws std::domain_error when infinite.
  Rational length(const Tuple& tuple) const;

  /// x <= y <= z: all three distances finite and d(x,y) + d(y,z) = d(x,z).
  bool between(Point x, Point y, Point z) const {
    auto xy = units(x, y), yz = units(y, z), xz = units(x, z);
    return xy != kInfiniteUnits && yz != kInfiniteUnits && xz != kInfiniteUnits && xy + yz == xz;
  }

  bool is_symmetric() const;
  bool all_finite() const;

  /// Throws HypothesisError when d(a, b) is infinite.
  Interval interval(Point a, Point b) const;
  GeodeticCheck geodetic_check() const;
  bool is_geodetic() const { return geodetic_check().geodetic; }

  /// All 4-cuts in lexicographic order of (x0, x1, x2, x3), at most max_count.
  std::vector<FourCut> four_cuts(std::size_t max_count = std::numeric_limits<std::size_t>::max()) const;
  /// Infimum of 4-cut lengths (infinity when there is none).
  ExtDist min_four_cut_length() const;
  /// A 4-cut of minimal length, lexicographically first among those.
  std::optional<FourCut> minimal_four_cut() const;
  /// Existence test. On geodetic spaces only 4-cuts whose first pair is
  /// saturated are searched.
  bool has_four_cut() const;

  /// Consecutive pairs admit no strictly intermediate point.
  bool is_saturated(const Tuple& tuple) const;
  /// No point strictly between x and y.
  bool is_saturated_pair(Point x, Point y) const;

  /// Throws HypothesisError for non-symmetric or disconnected spaces.
  DistanceRegularity distance_regularity() const;

  QuasiMetricSpace subspace(const std::vector<Point>& points) const;

  /// Stable textual identity of the metric (labels and distances).
  std::string canonical_text() const;

 private:
  QuasiMetricSpace() = default;

  std::vector<std::string> labels_;
  std::vector<std::vector<ExtDist>> dist_;
  std::vector<std::int64_t> units_;
  Integer scale_ = 1;
  std::int64_t min_positive_units_ = 0;
};

}  // namespace mh
