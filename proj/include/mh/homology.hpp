#pragma once

#include <cstddef>
#include <vector>

#include "mh/chain.hpp"
#include "mh/snf.hpp"

namespace mh {

struct HomologyGroup {
  std::size_t rank = 0;
  /// Invariant factors > 1, each dividing the next.
  std::vector<Integer> torsion;

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;
};

/// Homology at a module of dimension `dim` with outgoing differential `out`
/// (dim columns) and incoming differential `in` (dim rows). Either matrix may
/// have zero size.
HomologyGroup complex_homology(const SparseIntMatrix& out, const SparseIntMatrix& in, std::size_t dim);

/// MH_n^ell. The complex splits over the endpoint pair (x_0, x_n), which is
/// preserved by every face map, so each block is reduced separately.
/// Throws ResourceLimit when a chain group involved exceeds `cap`.
HomologyGroup homology(const QuasiMetricSpace& space, int n, const Rational& ell,
                       Variant variant = Variant::normalized, std::size_t cap = kDefaultBasisCap);

bool is_cycle(const QuasiMetricSpace& space, const Chain& chain, Variant variant = Variant::normalized);

/// The classes of the given cycles in MH_n^ell are linearly independent and
/// the group is torsion free. Throws NotACycle / UnknownTrail.
bool classes_independent(const QuasiMetricSpace& space, const std::vector<Chain>& chains, int n, const Rational& ell,
                         Variant variant = Variant::normalized, std::size_t cap = kDefaultBasisCap);

/// The classes generate MH_n^ell over the integers: together with the
/// boundaries they span the whole cycle lattice. This is checked as: the
/// lattice they generate has the rank of ker d_n and is saturated.
bool classes_span(const QuasiMetricSpace& space, const std::vector<Chain>& chains, int n, const Rational& ell,
                  Variant variant = Variant::normalized, std::size_t cap = kDefaultBasisCap);

}  // namespace mh
