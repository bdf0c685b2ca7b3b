#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "mh/report.hpp"
#include "mh/space.hpp"

namespace mh {

/// Lengths 0, 1/scale, 2/scale, ... up to max_ell.
std::vector<Rational> length_grid(const QuasiMetricSpace& space, const Rational& max_ell);

/// For every (n, l) with n <= nmax, l <= max_ell and chain groups of degrees
/// n-1..n+1 at most `cap`: SNF rank = |Theta|, no torsion, every Theta tuple
/// is a cycle and the tuples span. On spaces with at most 8 points Theta is
/// also compared with the direct filter. Bidegrees over the cap are skipped
/// and counted in a final entry. Throws NotGeodetic.
Report theta_vs_snf(const QuasiMetricSpace& space, int nmax, const Rational& max_ell, std::size_t cap = 20000);

/// No 4-cut if and only if SNF gives MH_n^l = 0 for all l != n (n <= nmax,
/// l <= lmax). Graph metrics only. Throws NotGeodetic.
CheckResult diagonality_check(const QuasiMetricSpace& space, int nmax, int lmax, std::size_t cap = 200000);

/// thin_frames(n, l) = Theta_n^l for every l < m_X with n <= nmax, l <= max_ell.
Report thin_frame_agreement(const QuasiMetricSpace& space, int nmax, const Rational& max_ell);
/// First (n, l) with l >= m_X where the two sets differ.
std::optional<std::pair<int, Rational>> thin_frame_disagreement(const QuasiMetricSpace& space, int nmax,
                                                                const Rational& max_ell);

/// Recurrence = closed form, Moore cycles = Theta (as sets) with the predicted
/// count, and the SNF rank where the chain groups are within `cap`.
/// Throws HypothesisError when the space is not a Moore graph.
Report moore_suite(const QuasiMetricSpace& space, int nmax, std::size_t cap = 20000);

/// theta_pq(x) are cycles in the right bidegree for p + q <= nmax, the basis
/// families are independent and spanning, and SNF ranks follow the N / 2N / 0
/// pattern for l <= m nmax.
Report even_cycle_suite(long N, int nmax, std::size_t cap = 200000);

}  // namespace mh
