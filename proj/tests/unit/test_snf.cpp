#include <doctest.h>

#include <random>
#include <sstream>

#include "mh/lattice.hpp"
#include "mh/snf.hpp"

using namespace mh;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range, int zero_bias) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (static_cast<int>(rng() % 10) < zero_bias) continue;
      m(r, c) = static_cast<long>(rng() % (2 * range + 1)) - range;
    }
  }
  return m;
}

/// Product of random elementary operations: determinant +-1.
IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  for (int k = 0; k < 3 * static_cast<int>(n); ++k) {
    std::size_t a = rng() % n, b = rng() % n;
    if (a == b) continue;
    u.add_row_multiple(a, b, static_cast<long>(rng() % 5) - 2);
    if (rng() % 4 == 0) u.swap_rows(a, b);
  }
  return u;
}

IntMatrix diagonal_of(const SmithNormalForm& s) {
  IntMatrix d(s.rows, s.cols);
  for (std::size_t i = 0; i < s.diagonal.size(); ++i) d(i, i) = s.diagonal[i];
  return d;
}

}  // namespace

TEST_CASE("smith normal form of small examples") {
  auto m = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  auto s = smith_normal_form(m);
  CHECK(s.diagonal == std::vector<Integer>{2, 6, 12});
  CHECK(s.rank() == 3);
  CHECK(s.torsion() == std::vector<Integer>{2, 6, 12});

  auto z2 = smith_normal_form(IntMatrix::from_rows({{2}}));
  CHECK(z2.torsion() == std::vector<Integer>{2});
  CHECK(smith_normal_form(IntMatrix(3, 2)).rank() == 0);
  CHECK(smith_normal_form(IntMatrix::from_rows({{1, 1}, {1, -1}})).diagonal == std::vector<Integer>{1, 2});
}

TEST_CASE("sparse and dense eliminations agree and transforms are exact") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = random_matrix(rng, 2 + rng() % 6, 2 + rng() % 6, 4, 4);
    auto sparse = smith_normal_form(SparseIntMatrix::from_dense(m));
    auto dense = smith_normal_form(m, true);
    CHECK(sparse.diagonal == dense.diagonal);
    REQUIRE(dense.left);
    REQUIRE(dense.right);
    CHECK(*dense.left * m * *dense.right == diagonal_of(dense));
    CHECK(abs(determinant(*dense.left)) == 1);
    CHECK(abs(determinant(*dense.right)) == 1);
    for (std::size_t i = 1; i < dense.rank(); ++i) CHECK(dense.diagonal[i] % dense.diagonal[i - 1] == 0);
  }
}

TEST_CASE("invariant factors are unchanged by unimodular transforms") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t rows = 2 + rng() % 5, cols = 2 + rng() % 5;
    auto m = random_matrix(rng, rows, cols, 6, 5);
    auto moved = random_unimodular(rng, rows) * m * random_unimodular(rng, cols);
    CHECK(smith_normal_form(SparseIntMatrix::from_dense(m)).diagonal ==
          smith_normal_form(SparseIntMatrix::from_dense(moved)).diagonal);
  }
}

TEST_CASE("invariant factor chains") {
  CHECK(invariant_factors({4, 6}) == std::vector<Integer>{2, 12});
  CHECK(invariant_factors({1, 1, 3}) == std::vector<Integer>{1, 1, 3});
  CHECK(invariant_factors({-2, 2}) == std::vector<Integer>{2, 2});
}

TEST_CASE("sparse matrix arithmetic and coordinate format") {
  SparseIntMatrix a(2, 3);
  a.add(0, 1, 5);
  a.add(0, 1, -5);
  CHECK(a.nnz() == 0);
  a.set(1, 2, 7);
  a.set(0, 0, -1);
  CHECK(a.at(1, 2) == 7);
  CHECK(a.transpose().transpose() == a);
  CHECK((a * SparseIntMatrix::identity(3)) == a);
  CHECK(a.apply({1, 1, 1}) == std::vector<Integer>{-1, 7});
  std::stringstream io;
  a.write_coordinate(io);
  CHECK(SparseIntMatrix::read_coordinate(io) == a);
  CHECK(a.to_dense() * IntMatrix::identity(3) == a.to_dense());
}

TEST_CASE("lattices") {
  auto a = IntMatrix::from_rows({{2, 0}, {0, 3}});
  auto b = IntMatrix::from_rows({{2, 2}, {0, 3}});
  CHECK(lattice_equal(a, b));
  CHECK(lattice_contains(a, IntMatrix::from_rows({{6}, {9}})));
  CHECK_FALSE(lattice_contains(a, IntMatrix::from_rows({{1}, {0}})));

  auto k = kernel_basis(IntMatrix::from_rows({{1, 2, 3}}));
  CHECK(k.cols() == 2);
  CHECK((IntMatrix::from_rows({{1, 2, 3}}) * k).is_zero());

  auto two = IntMatrix::from_rows({{2}});
  auto three = IntMatrix::from_rows({{3}});
  CHECK(lattice_equal(lattice_intersection(two, three), IntMatrix::from_rows({{6}})));
  CHECK(lattice_equal(lattice_sum(two, three), IntMatrix::from_rows({{1}})));

  auto q = lattice_quotient(IntMatrix::identity(2), IntMatrix::from_rows({{2, 0}, {0, 0}}));
  CHECK(q.rank == 1);
  CHECK(q.torsion == std::vector<Integer>{2});
  CHECK(determinant(IntMatrix::from_rows({{2, 1}, {7, 4}})) == 1);
}
