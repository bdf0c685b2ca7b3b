#include <doctest.h>

#include "../support.hpp"
#include "mh/error.hpp"
#include "mh/families.hpp"
#include "mh/homology.hpp"
#include "mh/theta.hpp"

using namespace mh;

TEST_CASE("kappa, beta and iota on small graphs") {
  auto p3 = family::path(3);
  CHECK(kappa(p3, 0, 1) == PairSet{{1, 0}});
  CHECK(kappa(p3, 1, 0) == PairSet{{0, 1}, {0, 2}});
  // e_01 and e_02 with 0 <= 1 <= 2: e_02 is dropped
  CHECK(beta(p3, PairSet{{0, 1}, {0, 2}}) == PairSet{{0, 1}});
  CHECK(beta(p3, positive_pairs(p3)) == PairSet{{0, 1}, {1, 0}, {1, 2}, {2, 1}});
  CHECK(iota_left(p3, 0, 1, PairSet{{1, 2}, {1, 0}}) == PairSet{{0, 2}});
  CHECK(iota_right(p3, PairSet{{0, 1}, {2, 1}}, 1, 2) == PairSet{{0, 2}});

  auto c5 = family::cycle(5);
  CHECK(positive_pairs(c5).size() == 20);
  CHECK(beta(c5, positive_pairs(c5)).size() == 10);
}

TEST_CASE("theta agrees with the direct filter and consists of cycles") {
  auto graphs = testing::random_geodetic_graphs(12, 7, 3);
  graphs.push_back(family::cycle(5));
  graphs.push_back(family::petersen());
  for (const auto& g : graphs) {
    for (int n = 0; n <= 3; ++n) {
      for (int ell = 0; ell <= 5; ++ell) {
        auto theta = theta_enumerate(g, n, Rational(ell));
        CHECK(std::is_sorted(theta.tuples.begin(), theta.tuples.end()));
        CHECK(theta_count(g, n, Rational(ell)) == theta.tuples.size());
        if (g.size() <= 8) CHECK(theta.tuples == theta_direct_filter(g, n, Rational(ell)));
        for (const auto& t : theta.tuples) {
          CHECK(satisfies_theta_conditions(g, t));
          Chain c;
          c.n = n;
          c.ell = ell;
          c.add(t, 1);
          CHECK(is_cycle(g, c));
        }
      }
    }
  }
}

TEST_CASE("theta requires a geodetic space") {
  CHECK_THROWS_AS(theta_enumerate(family::cycle(4), 1, Rational(1)), NotGeodetic);
  CHECK_THROWS_AS(is_diagonal(family::cycle(6)), NotGeodetic);
}

TEST_CASE("theta on the Hoffman-Singleton graph") {
  auto hs = family::hoffman_singleton();
  CHECK(theta_count(hs, 2, Rational(3)) == 12600);
  CHECK(theta_count(hs, 1, Rational(1)) == 350);
}

TEST_CASE("diagonality certificates") {
  CHECK(is_diagonal(family::complete(5)).diagonal);
  CHECK(is_diagonal(family::path(6)).diagonal);
  CHECK(is_diagonal(family::star(5)).diagonal);
  auto c5 = is_diagonal(family::cycle(5));
  CHECK_FALSE(c5.diagonal);
  REQUIRE(c5.cut);
  CHECK_FALSE(is_diagonal(family::petersen()).diagonal);
}

TEST_CASE("thin frames below the 4-cut length") {
  auto c5 = family::cycle(5);
  for (int n = 0; n <= 3; ++n) {
    for (int ell = 0; ell < 3; ++ell) CHECK(thin_frames(c5, n, Rational(ell)) == theta_enumerate(c5, n, Rational(ell)).tuples);
  }
  CHECK(thin_frames(c5, 2, Rational(3)).empty());
  CHECK(theta_enumerate(c5, 2, Rational(3)).tuples.size() == 10);
  CHECK(is_thin_frame(c5, Tuple{0, 1, 0}));
  CHECK_FALSE(is_thin_frame(c5, Tuple{0, 1, 2}));
}
