#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mh/matrix.hpp"

namespace mh {

// Lattices in Z^n are given by generator matrices whose columns span them.

/// A * transform = [basis | 0] with `basis` in column echelon form: column k
/// has its first nonzero entry (positive) in row pivot_rows[k], strictly
/// increasing in k.
struct ColumnEchelon {
  IntMatrix basis;
  std::vector<std::size_t> pivot_rows;
  IntMatrix transform;
  std::size_t rank() const { return pivot_rows.size(); }
};

ColumnEchelon column_echelon(const IntMatrix& generators);

IntMatrix image_basis(const IntMatrix& a);
/// Basis of {x in Z^cols : a x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

/// Integer coordinates of `target` in the echelon basis, if it lies in the lattice.
std::optional<std::vector<Integer>> solve_in_lattice(const ColumnEchelon& lattice, std::vector<Integer> target);

/// Every column of `vectors` lies in the lattice spanned by `generators`.
bool lattice_contains(const IntMatrix& generators, const IntMatrix& vectors);
bool lattice_equal(const IntMatrix& a, const IntMatrix& b);

IntMatrix lattice_sum(const IntMatrix& a, const IntMatrix& b);
IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b);

struct QuotientGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
  bool is_zero() const { return rank == 0 && torsion.empty(); }
};

/// outer / inner; throws std::invalid_argument when inner is not contained in outer.
QuotientGroup lattice_quotient(const IntMatrix& outer, const IntMatrix& inner);

/// Exact determinant (fraction-free elimination).
Integer determinant(const IntMatrix& a);

}  // namespace mh
