#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mh/chain.hpp"
#include "mh/report.hpp"
#include "mh/space.hpp"

namespace mh {

// ---- Moore graphs ----

struct MooreParams {
  long D = 0;
  long m = 0;
  Integer N;
  bool operator==(const MooreParams&) const = default;
};

/// N = 1 + D * sum_{i<m} (D-1)^i.
MooreParams moore_params(long D, long m);

/// Shortest cycle length of the distance-1 graph; 0 when acyclic.
std::size_t girth(const QuasiMetricSpace& space);

/// (D, m, N) when the space is the metric of a D-regular graph of diameter
/// m > 1 and girth 2m + 1. Never throws.
std::optional<MooreParams> moore_detect(const QuasiMetricSpace& space);

/// C(s, t) with C(-1, -1) = 1 and C(s, t) = 0 for s < t or t < 0 <= s.
/// Throws UsageError for the remaining negative arguments.
Integer binomial_convention(long s, long t);

/// R(n, l) = R(n-1, l-1) + D(D-1)^m R(n-2, l-m-1), R(0,0) = N, R(1,1) = ND.
Integer moore_rank_recurrence(const MooreParams& params, int n, long ell);
/// N (D(D-1)^m)^i (C(i+j-1, i-1) + D C(i+j-1, i)) at (2i+j, (m+1)i+j), else 0.
Integer moore_rank_closed(const MooreParams& params, int n, long ell);
/// Both evaluators; throws ConventionMismatch when they differ.
Integer moore_rank(const MooreParams& params, int n, long ell);

/// (i, j) with (n, ell) = (2i+j, (m+1)i+j), i, j >= 0.
std::optional<std::array<long, 2>> moore_support(const MooreParams& params, int n, long ell);

/// Tuples built from back-and-forth unit steps and non-geodesic steps of
/// length m, lexicographic. Throws UsageError off the support.
std::vector<Tuple> moore_cycles(const QuasiMetricSpace& space, const MooreParams& params, int n, long ell);

// ---- even cycles ----

/// Lattice path (s_0, ..., s_{p+q}) from (0,0) to (p,q) by unit steps.
using Shuffle = std::vector<std::array<long, 2>>;

/// All C(p+q, p) shuffles; right steps are ordered before up steps.
std::vector<Shuffle> shuffles(long p, long q);

int xi(long t);
/// lambda(step, s) for step (1,0) or (0,1) ending at s = (p, q).
long even_lambda(const std::array<long, 2>& step, long p, long q, long m);
int even_mu(const std::array<long, 2>& step, long p, long q);
long even_nu(const Shuffle& s, long m);

/// Rotation data of an even cycle; see even_cycle_order.
class EvenCycle {
 public:
  /// Throws HypothesisError.
  explicit EvenCycle(const QuasiMetricSpace& space);

  std::size_t size() const { return order_.size(); }
  long m() const { return static_cast<long>(order_.size() / 2); }
  const std::vector<Point>& order() const { return order_; }
  /// gamma^k x.
  Point rotate(Point x, long k) const;
  Tuple phi(Point x, const Shuffle& s) const;

 private:
  std::vector<Point> order_;
  std::vector<std::size_t> position_;
};

/// theta_pq(x) = sum_s (-1)^nu(s) phi(x, s), in bidegree (p+q, m min(p,q) + |p-q|).
Chain even_theta(const QuasiMetricSpace& space, long p, long q, Point x);

/// Rank of MH_n^ell(C_N): N at (2i, mi), 2N at (2i+j, mi+j) with j > 0, else 0.
Integer even_rank(long N, long n, long ell);

/// The basis cycles of MH_n^ell(C_N): theta_ii(x), or theta_{i+j,i}(x) and
/// theta_{i,i+j}(x), over all x. Empty off the support.
std::vector<Chain> even_basis_cycles(const QuasiMetricSpace& space, long n, long ell);

// ---- magnitude ----

/// Integer polynomials in q, coefficients by ascending degree.
struct RationalFunction {
  std::vector<Integer> numerator;
  std::vector<Integer> denominator;

  /// Coefficients of q^0 .. q^order of the power series; throws
  /// std::domain_error when the denominator vanishes at 0.
  std::vector<Rational> series(int order) const;
  /// e.g. "3250/(1+57q+3192q^2)".
  std::string to_string() const;
};

constexpr int kDefaultSeriesOrder = 8;

/// N / sum_l D_l q^l. Throws NotDistanceRegular, or HypothesisError for
/// non-integer distances.
RationalFunction magnitude_distance_regular(const QuasiMetricSpace& space);

/// Coefficients of q^0 .. q^order of sum_n (-1)^n #{normalized trails},
/// valid for any space with integer distances.
std::vector<Integer> magnitude_series(const QuasiMetricSpace& space, int order);

/// For every integer l <= max_ell: series coefficient of q^l equals
/// sum_n (-1)^n rank MH_n^l (ranks by Smith normal form).
Report euler_crosscheck(const QuasiMetricSpace& space, int max_ell, std::size_t cap = kDefaultBasisCap);

}  // namespace mh
