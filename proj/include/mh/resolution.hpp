#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "mh/matrix.hpp"
#include "mh/report.hpp"
#include "mh/sigma.hpp"
#include "mh/space.hpp"

namespace mh {

/// One module of a free resolution of Z^N over the distance algebra, written
/// over Z on the tuple basis (x_0, ..., x_{k+1}).
struct ResolutionStage {
  int degree = 0;
  std::vector<Tuple> generators;  // sorted
  /// Into the previous stage; for degree 0 into Z^N (rows are points).
  SparseIntMatrix differential;
};

using Resolution = std::vector<ResolutionStage>;

/// Signed faces of the bar differential on (x_0, ..., x_{n+1}): x_i is deleted
/// for 0 <= i <= n when x_{i-1} <= x_i <= x_{i+1}, with x_{-1} = x_1.
std::vector<std::pair<Tuple, int>> bar_faces(const QuasiMetricSpace& space, const Tuple& tuple);

/// Stages 0..max_degree of the bar resolution Z X^{n+2}_f. Throws ResourceLimit.
Resolution bar_resolution(const QuasiMetricSpace& space, int max_degree, std::size_t cap = 200000);

/// Stages 0..max_degree generated by the tuples of Theta_k extended by one more
/// point, with the restricted bar differential. Throws NotGeodetic, and
/// ConventionMismatch if a face leaves the generator set.
Resolution minimal_resolution_geodetic(const QuasiMetricSpace& space, int max_degree);

/// Consecutive differentials compose to zero, and the augmented complex has
/// zero homology (rank and torsion) in degrees -1 .. max_degree - 1.
/// `points` is the rank of the augmentation target.
Report certify_exactness(const Resolution& resolution, std::size_t points);

/// Every generator maps into the radical: each image tuple ends with two
/// distinct points, so the differential vanishes after tensoring down.
bool verify_tensored_zero(const Resolution& resolution);

/// Copy with one differential entry altered: the sign of an entry in a column
/// with at least two entries is flipped, or, when every column has a single
/// entry, that entry is doubled.
Resolution corrupt_differential(Resolution resolution, int degree);

// ---- even cycles ----

/// D_pq = sigma C_N for p, q >= 0 with horizontal maps mu lambda_{a^h(p,q)} and
/// vertical maps mu' lambda_{a^v(p,q)}, where a^{-k} = b^k.
class EvenDoubleComplex {
 public:
  /// Throws UsageError unless N is even and >= 6.
  explicit EvenDoubleComplex(long N, bool flip_horizontal_sign = false);

  long N() const { return N_; }
  long m() const { return N_ / 2; }
  const QuasiMetricSpace& space() const { return *space_; }
  const SigmaAlgebra& algebra() const { return *algebra_; }
  std::size_t module_size() const { return algebra_->size(); }

  long h_exponent(long p, long q) const;
  long v_exponent(long p, long q) const;
  /// Left multiplication by a^k (k > 0), b^-k (k < 0) or 1.
  const IntMatrix& power(long k) const;
  /// D_pq -> D_{p-1,q}; zero when p <= 0.
  IntMatrix horizontal(long p, long q) const;
  /// D_pq -> D_{p,q-1}; zero when q <= 0.
  IntMatrix vertical(long p, long q) const;

  /// dh dh = dv dv = dh dv + dv dh = 0 for p, q <= bound.
  Report check_anticommutation(long bound) const;

  /// Total differential tot_n -> tot_{n-1}, summands ordered by p.
  IntMatrix total_differential(long n) const;

 private:
  long N_;
  bool flip_;
  std::unique_ptr<QuasiMetricSpace> space_;
  std::unique_ptr<SigmaAlgebra> algebra_;
  IntMatrix a_, b_;
  mutable std::map<long, IntMatrix> powers_;
};

/// The five multiplication relations between lambda_a, lambda_b and the
/// augmentation. With `swap_b_for_a` every b is replaced by a.
Report verify_mult_relations(long N, bool swap_b_for_a = false);

/// tot D augmented by the augmentation onto Z^N: exact in degrees -1 .. max - 1
/// and every differential lands in the radical.
Report verify_total_complex(long N, long max_total_degree);

/// Hypotheses of the comparison between the total homology and the K-homology:
/// row exactness for p > q, column exactness for q > p, and
/// im dh cap im dv = im dh dv, at every (p, q) with p + q <= bound.
Report verify_homolk_hypotheses(long N, long bound);

struct ChainMapOptions {
  bool drop_nu = false;
  bool flip_mu = false;
};

/// f(v_pq e_yz) = sum over (x, s) with phi(x, s) ending at y of
/// (-1)^nu(s) (phi(x, s), z); checks d f = f d in degrees 0..max_degree.
Report verify_chain_map_f(long N, long max_degree, ChainMapOptions options = {});

}  // namespace mh
