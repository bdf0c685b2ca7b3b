#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "mh/space.hpp"

namespace mh {

using Pair = std::pair<Point, Point>;
using PairSet = std::set<Pair>;

/// All pairs (x, y) with x != y and d(x, y) finite.
PairSet positive_pairs(const QuasiMetricSpace& space);

/// kappa(e_xy) = { e_yw : d(y, w) finite, not x <= y <= w }.
PairSet kappa(const QuasiMetricSpace& space, Point x, Point y);

/// Drops e_zw from S when some e_za in S with a != w has z <= a <= w.
PairSet beta(const QuasiMetricSpace& space, const PairSet& s);

/// iota(e_xy, S) = { e_xw : e_yw in S, x <= y <= w }.
PairSet iota_left(const QuasiMetricSpace& space, Point x, Point y, const PairSet& s);
/// iota(S, e_xy) = { e_zy : e_zx in S, z <= x <= y }.
PairSet iota_right(const QuasiMetricSpace& space, const PairSet& s, Point x, Point y);

struct ThetaBasis {
  int n = 0;
  Rational ell;
  /// Lexicographic.
  std::vector<Tuple> tuples;
};

/// Memoized beta(kappa(e_xy)) targets, sorted.
class ThetaEnumerator {
 public:
  /// Throws NotGeodetic.
  explicit ThetaEnumerator(const QuasiMetricSpace& space);

  const std::vector<Point>& extensions(Point x, Point y);
  const std::vector<Pair>& seeds() const { return seeds_; }

  /// Depth-first extension from the seeds beta(X^2_{f+}) by beta-kappa of the
  /// last edge, pruning partial tuples that cannot reach length ell_units.
  void for_each(int n, std::int64_t ell_units, const std::function<void(const Tuple&)>& visit);
  /// Same, restricted to tuples starting with the given seed pair.
  void for_each_from(Pair seed, int n, std::int64_t ell_units, const std::function<void(const Tuple&)>& visit);

 private:
  void extend(Tuple& tuple, std::int64_t acc, int n, std::int64_t ell, const std::function<void(const Tuple&)>& visit);

  const QuasiMetricSpace& space_;
  std::vector<Pair> seeds_;
  std::vector<std::optional<std::vector<Point>>> cache_;
};

/// Theta_n^ell(beta(X^2_{f+})); throws NotGeodetic.
ThetaBasis theta_enumerate(const QuasiMetricSpace& space, int n, const Rational& ell);

/// Number of Theta tuples without storing them; throws NotGeodetic.
Integer theta_count(const QuasiMetricSpace& space, int n, const Rational& ell);

/// Conditions of the geodetic basis theorem, checked directly on one tuple:
/// interior points not between their neighbours, saturated first pair, and
/// x_i <= a <= x_{i+1}, a != x_{i+1} forcing x_{i-1} <= x_i <= a.
bool satisfies_theta_conditions(const QuasiMetricSpace& space, const Tuple& tuple);

/// All normalized trails of bidegree (n, ell) satisfying those conditions.
std::vector<Tuple> theta_direct_filter(const QuasiMetricSpace& space, int n, const Rational& ell);

/// Interior points not between their neighbours and every consecutive pair saturated.
bool is_thin_frame(const QuasiMetricSpace& space, const Tuple& tuple);
/// Thin frames among the normalized trails of bidegree (n, ell).
std::vector<Tuple> thin_frames(const QuasiMetricSpace& space, int n, const Rational& ell);

struct DiagonalityCertificate {
  bool diagonal = true;
  /// A minimal-length 4-cut when not diagonal.
  std::optional<FourCut> cut;
};

/// Throws NotGeodetic.
DiagonalityCertificate is_diagonal(const QuasiMetricSpace& space);

/// |Theta_n^ell|; throws NotGeodetic.
std::size_t rank_prediction(const QuasiMetricSpace& space, int n, const Rational& ell);

}  // namespace mh
