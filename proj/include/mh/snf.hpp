#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mh/matrix.hpp"

namespace mh {

struct SmithNormalForm {
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// min(rows, cols) entries d_1 | d_2 | ... | d_r followed by zeros.
  std::vector<Integer> diagonal;
  /// When requested: U * M * V equals the diagonal matrix, U and V unimodular.
  std::optional<IntMatrix> left;
  std::optional<IntMatrix> right;

  std::size_t rank() const;
  /// Invariant factors greater than one.
  std::vector<Integer> torsion() const;
};

/// Exact Smith normal form. Without transforms a sparse elimination is used
/// (unit pivots of low Markowitz cost first, then minimal-absolute-value
/// pivots); with transforms a dense elimination tracks U and V.
SmithNormalForm smith_normal_form(const SparseIntMatrix& m, bool with_transforms = false);
SmithNormalForm smith_normal_form(const IntMatrix& m, bool with_transforms = false);

/// Rank over the rationals, computed by the same elimination.
std::size_t integer_rank(const SparseIntMatrix& m);

/// Rewrites a list of nonzero integers into the invariant-factor chain of the
/// same abelian group (absolute values, ascending, each dividing the next).
std::vector<Integer> invariant_factors(std::vector<Integer> values);

}  // namespace mh
