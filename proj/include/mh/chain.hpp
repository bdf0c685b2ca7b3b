#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "mh/matrix.hpp"
#include "mh/space.hpp"

namespace mh {

enum class Variant { normalized, unnormalized };

constexpr std::size_t kDefaultBasisCap = 200000;

/// Basis of MC_n^ell in lexicographic order of point indices.
struct GradedPiece {
  int n = 0;
  Rational ell;
  Variant variant = Variant::normalized;
  std::vector<Tuple> basis;

  std::size_t size() const { return basis.size(); }
  /// Position of `tuple` in the basis (binary search).
  std::optional<std::size_t> index_of(const Tuple& tuple) const;
};

/// Calls `visit` for every trail (x_0, ..., x_n) of length `ell_units` in
/// lexicographic order. Optional `first` / `last` pin the endpoints.
void for_each_trail(const QuasiMetricSpace& space, int n, std::int64_t ell_units, Variant variant,
                    std::optional<Point> first, std::optional<Point> last,
                    const std::function<void(const Tuple&)>& visit);

/// Number of trails of degree n and length ell without enumerating them.
Integer count_trails(const QuasiMetricSpace& space, int n, const Rational& ell, Variant variant);

/// Throws ResourceLimit when the basis would exceed `cap` elements.
GradedPiece enumerate_basis(const QuasiMetricSpace& space, int n, const Rational& ell,
                            Variant variant = Variant::normalized, std::size_t cap = kDefaultBasisCap);

/// Signed faces of a trail: pairs (face, sign) with the deleted point between
/// its neighbours. Degree 0 trails have no faces.
std::vector<std::pair<Tuple, int>> faces(const QuasiMetricSpace& space, const Tuple& trail, Variant variant);

/// Matrix of the boundary from `source` (degree n) to `target` (degree n-1),
/// rows indexed by target, columns by source.
SparseIntMatrix boundary_matrix(const QuasiMetricSpace& space, const std::vector<Tuple>& source,
                                const std::vector<Tuple>& target, Variant variant);
SparseIntMatrix boundary_matrix(const QuasiMetricSpace& space, int n, const Rational& ell,
                                Variant variant = Variant::normalized, std::size_t cap = kDefaultBasisCap);

/// Finite integer combination of trails of one bidegree.
struct Chain {
  int n = 0;
  Rational ell;
  std::map<Tuple, Integer> terms;

  void add(const Tuple& trail, const Integer& coefficient);
  bool is_zero() const { return terms.empty(); }
  Chain& operator+=(const Chain& other);
  Chain operator-() const;
  bool operator==(const Chain& other) const { return n == other.n && ell == other.ell && terms == other.terms; }
  /// Coefficient vector in the given basis; throws UnknownTrail for trails outside it.
  std::vector<Integer> coordinates(const GradedPiece& piece) const;
};

/// Throws UnknownTrail when a trail has the wrong degree or length, an infinite
/// step, or (normalized) a repeated consecutive point.
void check_chain(const QuasiMetricSpace& space, const Chain& chain, Variant variant = Variant::normalized);

Chain boundary(const QuasiMetricSpace& space, const Chain& chain, Variant variant = Variant::normalized);

}  // namespace mh
