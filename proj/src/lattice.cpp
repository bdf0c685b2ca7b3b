#include "mh/lattice.hpp"

#include <stdexcept>

#include "mh/snf.hpp"

namespace mh {

namespace {

Integer nearest(const Integer& a, const Integer& p) {
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  if (2 * abs(r) > abs(p)) q += sgn(a) * sgn(p);
  return q;
}

void negate_col(IntMatrix& m, std::size_t c) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = -m(r, c);
}

}  // namespace

ColumnEchelon column_echelon(const IntMatrix& generators) {
  IntMatrix h = generators;
  IntMatrix v = IntMatrix::identity(generators.cols());
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t i = 0; i < h.rows() && next < h.cols(); ++i) {
    while (true) {
      std::size_t best = h.cols();
      for (std::size_t j = next; j < h.cols(); ++j) {
        if (h(i, j) != 0 && (best == h.cols() || cmpabs(h(i, j), h(i, best)) < 0)) best = j;
      }
      if (best == h.cols()) break;
      h.swap_cols(next, best);
      v.swap_cols(next, best);
      bool done = true;
      for (std::size_t j = next + 1; j < h.cols(); ++j) {
        if (h(i, j) == 0) continue;
        Integer q = nearest(h(i, j), h(i, next));
        h.add_col_multiple(j, next, -q);
        v.add_col_multiple(j, next, -q);
        if (h(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (next >= h.cols() || h(i, next) == 0) continue;
    if (h(i, next) < 0) {
      negate_col(h, next);
      negate_col(v, next);
    }
    for (std::size_t k = 0; k < next; ++k) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, k).get_mpz_t(), h(i, next).get_mpz_t());
      h.add_col_multiple(k, next, -q);
      v.add_col_multiple(k, next, -q);
    }
    pivots.push_back(i);
    ++next;
  }
  return {h.columns(0, pivots.size()), std::move(pivots), std::move(v)};
}

IntMatrix image_basis(const IntMatrix& a) { return column_echelon(a).basis; }

IntMatrix kernel_basis(const IntMatrix& a) {
  auto e = column_echelon(a);
  return e.transform.columns(e.rank(), a.cols() - e.rank());
}

std::optional<std::vector<Integer>> solve_in_lattice(const ColumnEchelon& lattice, std::vector<Integer> target) {
  const IntMatrix& b = lattice.basis;
  if (target.size() != b.rows()) throw std::invalid_argument("vector length mismatch");
  std::vector<Integer> x(lattice.rank());
  for (std::size_t k = 0; k < lattice.rank(); ++k) {
    std::size_t p = lattice.pivot_rows[k];
    if (target[p] % b(p, k) != 0) return std::nullopt;
    x[k] = target[p] / b(p, k);
    if (x[k] == 0) continue;
    for (std::size_t r = p; r < b.rows(); ++r) target[r] -= x[k] * b(r, k);
  }
  for (const auto& t : target) {
    if (t != 0) return std::nullopt;
  }
  return x;
}

bool lattice_contains(const IntMatrix& generators, const IntMatrix& vectors) {
  auto e = column_echelon(generators);
  for (std::size_t c = 0; c < vectors.cols(); ++c) {
    if (!solve_in_lattice(e, vectors.column(c))) return false;
  }
  return true;
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
  return lattice_contains(a, b) && lattice_contains(b, a);
}

IntMatrix lattice_sum(const IntMatrix& a, const IntMatrix& b) { return image_basis(a.hstack(b)); }

IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix ba = image_basis(a), bb = image_basis(b);
  IntMatrix stacked = ba.hstack(bb.scaled(-1));
  IntMatrix k = kernel_basis(stacked);
  // u in ker[A | -B] gives A u_top = B u_bottom in the intersection
  IntMatrix top = k.rows_range(0, ba.cols());
  return image_basis(ba * top);
}

QuotientGroup lattice_quotient(const IntMatrix& outer, const IntMatrix& inner) {
  auto e = column_echelon(outer);
  IntMatrix coords(e.rank(), inner.cols());
  for (std::size_t c = 0; c < inner.cols(); ++c) {
    auto x = solve_in_lattice(e, inner.column(c));
    if (!x) throw std::invalid_argument("inner lattice is not contained in outer lattice");
    for (std::size_t r = 0; r < e.rank(); ++r) coords(r, c) = (*x)[r];
  }
  auto snf = smith_normal_form(coords);
  return {e.rank() - snf.rank(), snf.torsion()};
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1, previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace mh
