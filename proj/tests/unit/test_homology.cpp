#include <doctest.h>

#include "../support.hpp"
#include "mh/error.hpp"
#include "mh/families.hpp"
#include "mh/homology.hpp"
#include "mh/theta.hpp"

using namespace mh;

TEST_CASE("homology of the 5-cycle in low bidegrees") {
  auto c5 = family::cycle(5);
  CHECK(homology(c5, 0, Rational(0)) == HomologyGroup{5, {}});
  CHECK(homology(c5, 1, Rational(1)) == HomologyGroup{10, {}});
  CHECK(homology(c5, 2, Rational(2)) == HomologyGroup{10, {}});
  CHECK(homology(c5, 2, Rational(3)) == HomologyGroup{10, {}});
  CHECK(homology(c5, 1, Rational(2)).is_zero());
  CHECK(homology(c5, 0, Rational(1)).is_zero());
  for (int n = 0; n <= 4; ++n) {
    for (int ell = 0; ell <= 6; ++ell) {
      auto h = homology(c5, n, Rational(ell));
      CHECK(h.torsion.empty());
      CHECK(h.rank == rank_prediction(c5, n, Rational(ell)));
    }
  }
}

TEST_CASE("normalized and unnormalized complexes agree") {
  std::vector<QuasiMetricSpace> spaces{family::cycle(5), family::path(4), family::complete(3)};
  for (std::uint64_t seed = 1; seed <= 3; ++seed) spaces.push_back(testing::random_quasi_metric(4, seed));
  for (const auto& space : spaces) {
    for (int n = 0; n <= 3; ++n) {
      for (Integer k = 0; k <= 4; ++k) {
        Rational ell(k, space.scale());
        ell.canonicalize();
        CHECK(homology(space, n, ell, Variant::normalized) == homology(space, n, ell, Variant::unnormalized));
      }
    }
  }
}

TEST_CASE("homology of an explicit complex with torsion") {
  // Z --2--> Z --0--> 0
  SparseIntMatrix in(1, 1);
  in.set(0, 0, 2);
  SparseIntMatrix out(0, 1);
  auto h = complex_homology(out, in, 1);
  CHECK(h.rank == 0);
  CHECK(h.torsion == std::vector<Integer>{2});
  CHECK(complex_homology(SparseIntMatrix(0, 3), SparseIntMatrix(3, 0), 3) == HomologyGroup{3, {}});
}

TEST_CASE("cycle classes") {
  auto c5 = family::cycle(5);
  auto theta = theta_enumerate(c5, 1, Rational(1)).tuples;
  std::vector<Chain> chains;
  for (const auto& t : theta) {
    Chain c;
    c.n = 1;
    c.ell = 1;
    c.add(t, 1);
    chains.push_back(c);
  }
  CHECK(classes_independent(c5, chains, 1, Rational(1)));
  CHECK(classes_span(c5, chains, 1, Rational(1)));
  auto doubled = chains;
  doubled[0].terms.begin()->second = 2;
  CHECK_FALSE(classes_span(c5, doubled, 1, Rational(1)));
  chains.pop_back();
  CHECK_FALSE(classes_span(c5, chains, 1, Rational(1)));

  Chain open;
  open.n = 2;
  open.ell = 2;
  open.add({0, 1, 2}, 1);
  CHECK_FALSE(is_cycle(c5, open));
  CHECK_THROWS_AS(classes_independent(c5, {open}, 2, Rational(2)), NotACycle);
  CHECK_THROWS_AS(homology(family::complete(9), 6, Rational(6), Variant::normalized, 100), ResourceLimit);
}
