#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mh/matrix.hpp"
#include "mh/space.hpp"

namespace mh {

/// The distance algebra on finite-distance pairs: e_xy * e_zw = e_xw when
/// y = z and x <= y <= w, zero otherwise.
class SigmaAlgebra {
 public:
  using Element = std::vector<Integer>;  // coefficients on pairs()

  explicit SigmaAlgebra(const QuasiMetricSpace& space);

  const QuasiMetricSpace& space() const { return *space_; }
  std::size_t size() const { return pairs_.size(); }
  /// Pairs (x, y) with d(x, y) finite, lexicographic.
  const std::vector<std::pair<Point, Point>>& pairs() const { return pairs_; }
  std::optional<std::size_t> index_of(Point x, Point y) const;

  Element zero() const { return Element(size()); }
  Element unit() const;
  Element basis_element(Point x, Point y) const;
  Element multiply(const Element& a, const Element& b) const;
  Element add(const Element& a, const Element& b) const;
  Element power(const Element& a, unsigned k) const;

  /// Matrix of v -> element * v on the pair basis.
  IntMatrix left_mult_matrix(const Element& element) const;
  IntMatrix right_mult_matrix(const Element& element) const;

  /// Only pairs with distinct endpoints occur.
  bool in_radical(const Element& element) const;

  /// The augmentation e_xy -> delta_xy e_x onto Z^N, as an N x size() matrix.
  IntMatrix augmentation_matrix() const;

 private:
  const QuasiMetricSpace* space_;
  std::vector<std::pair<Point, Point>> pairs_;
  std::vector<std::ptrdiff_t> index_;  // x * N + y -> position or -1
};

/// Points of an even cycle C_N in rotation order (x, gx, g^2 x, ...) starting at
/// point 0 and moving to its smallest-index neighbour, so that cycle(N) gets
/// g: i -> i+1. Throws HypothesisError unless the space is the graph metric
/// of a cycle with N even and N >= 6.
std::vector<Point> even_cycle_order(const QuasiMetricSpace& space);

/// a = sum_i e_{g^i x, g^{i+1} x} and b = sum_i e_{g^-i x, g^{-i-1} x}.
std::pair<SigmaAlgebra::Element, SigmaAlgebra::Element> ab_elements(const SigmaAlgebra& algebra);

}  // namespace mh
