#include <doctest.h>

#include "mh/families.hpp"
#include "mh/resolution.hpp"
#include "mh/theta.hpp"

using namespace mh;

TEST_CASE("bar faces") {
  auto p3 = family::path(3);
  auto f = bar_faces(p3, Tuple{0, 1, 2});
  // x_0 = 0 sits between x_1 = 1 and itself only when d(1,0)+d(0,1) = d(1,1): no
  REQUIRE(f.size() == 1);
  CHECK(f[0].first == Tuple{0, 2});
  CHECK(f[0].second == -1);
  // both x_0 and x_1 can go, with opposite signs
  auto g = bar_faces(p3, Tuple{1, 1, 2});
  REQUIRE(g.size() == 2);
  CHECK(g[0].first == Tuple{1, 2});
  CHECK(g[1].first == Tuple{1, 2});
  CHECK(g[0].second + g[1].second == 0);
}

TEST_CASE("minimal resolution of geodetic spaces") {
  for (const auto& space : {family::cycle(5), family::cycle(7), family::complete(4), family::path(5)}) {
    auto res = minimal_resolution_geodetic(space, 4);
    REQUIRE(res.size() == 5);
    std::size_t finite_pairs = 0;
    for (Point x = 0; x < space.size(); ++x)
      for (Point y = 0; y < space.size(); ++y) finite_pairs += space.distance(x, y).is_finite();
    CHECK(res[0].generators.size() == finite_pairs);
    for (int k = 1; k <= 4; ++k) {
      std::size_t theta = 0;
      for (Integer u = 0; u <= 10 * k; ++u) theta += theta_enumerate(space, k, Rational(u)).tuples.size();
      CHECK(res[k].generators.size() == theta * space.size());
    }
    auto report = certify_exactness(res, space.size());
    CHECK(all_pass(report));
    CHECK(verify_tensored_zero(res));
    CHECK_FALSE(all_pass(certify_exactness(corrupt_differential(res, 2), space.size())));
  }
  auto point = family::complete(1);
  auto res = minimal_resolution_geodetic(point, 3);
  CHECK(verify_tensored_zero(res));
  CHECK(all_pass(certify_exactness(res, 1)));
}

TEST_CASE("bar resolution is exact but not minimal") {
  auto k2 = family::complete(2);
  auto res = bar_resolution(k2, 3);
  CHECK(all_pass(certify_exactness(res, 2)));
  CHECK_FALSE(verify_tensored_zero(res));
  CHECK_FALSE(all_pass(certify_exactness(corrupt_differential(res, 1), 2)));
}

TEST_CASE("even cycle double complex") {
  for (long N : {6L, 8L}) {
    EvenDoubleComplex d(N);
    long m = d.m();
    CHECK(d.horizontal(1, 0) == d.power(1));
    CHECK(d.horizontal(2, 0) == d.power(-1));
    IntMatrix minus = d.power(-(m - 1));
    for (std::size_t r = 0; r < minus.rows(); ++r)
      for (std::size_t c = 0; c < minus.cols(); ++c) minus(r, c) = -minus(r, c);
    CHECK(d.horizontal(1, 1) == minus);
    CHECK(all_pass(d.check_anticommutation(3)));
  }
  CHECK(all_pass(verify_mult_relations(6)));
  CHECK_FALSE(all_pass(verify_mult_relations(6, true)));
  CHECK(all_pass(verify_total_complex(6, 3)));
  CHECK(all_pass(verify_homolk_hypotheses(6, 3)));
  CHECK(all_pass(verify_chain_map_f(6, 2)));
  CHECK_FALSE(all_pass(verify_chain_map_f(6, 2, {true, false})));
  CHECK_FALSE(all_pass(verify_chain_map_f(6, 2, {false, true})));
}
