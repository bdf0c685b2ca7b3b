#include <doctest.h>

#include "mh/closedform.hpp"
#include "mh/error.hpp"
#include "mh/families.hpp"
#include "mh/theta.hpp"

using namespace mh;

TEST_CASE("binomial conventions") {
  CHECK(binomial_convention(-1, -1) == 1);
  CHECK(binomial_convention(4, 2) == 6);
  CHECK(binomial_convention(0, 0) == 1);
  CHECK(binomial_convention(2, 5) == 0);
  CHECK(binomial_convention(3, -1) == 0);
  CHECK(binomial_convention(0, -1) == 0);
  CHECK(binomial_convention(-1, 0) == 0);
  CHECK_THROWS_AS(binomial_convention(-1, -2), UsageError);
  CHECK_THROWS_AS(binomial_convention(-2, -3), UsageError);
}

TEST_CASE("recurrence and closed form agree") {
  for (auto [D, m] : std::vector<std::pair<long, long>>{{2, 2}, {2, 3}, {3, 2}, {7, 2}, {57, 2}}) {
    auto params = moore_params(D, m);
    for (int n = 0; n <= 40; ++n) {
      for (long ell = 0; ell <= (m + 1) * n; ++ell) {
        CHECK(moore_rank_recurrence(params, n, ell) == moore_rank_closed(params, n, ell));
      }
    }
  }
}

TEST_CASE("Moore parameters") {
  CHECK(moore_params(3, 2).N == 10);
  CHECK(moore_params(7, 2).N == 50);
  CHECK(moore_params(57, 2).N == 3250);
  CHECK(moore_params(2, 3).N == 7);
  auto missing = moore_params(57, 2);
  CHECK(moore_rank(missing, 2, 3) == Integer("580944000"));
  CHECK(moore_rank(missing, 1, 1) == 3250 * 57);
  CHECK(moore_rank(missing, 0, 0) == 3250);
  CHECK(moore_rank(missing, 1, 2) == 0);

  CHECK(moore_detect(family::petersen()) == MooreParams{3, 2, 10});
  CHECK(moore_detect(family::cycle(5)) == MooreParams{2, 2, 5});
  CHECK(moore_detect(family::cycle(7)) == MooreParams{2, 3, 7});
  CHECK(moore_detect(family::hoffman_singleton()) == MooreParams{7, 2, 50});
  CHECK_FALSE(moore_detect(family::cycle(6)));
  CHECK_FALSE(moore_detect(family::complete(4)));
  CHECK_FALSE(moore_detect(family::path(4)));
  CHECK(girth(family::petersen()) == 5);
  CHECK(girth(family::path(4)) == 0);

  auto support = moore_support(moore_params(3, 2), 3, 4);
  REQUIRE(support);
  CHECK((*support)[0] == 1);
  CHECK((*support)[1] == 1);
  CHECK_FALSE(moore_support(moore_params(3, 2), 2, 2 + 1 + 1));
}

TEST_CASE("Moore cycles match Theta") {
  auto petersen = family::petersen();
  auto params = *moore_detect(petersen);
  CHECK(moore_cycles(petersen, params, 2, 3).size() == 120);
  CHECK(moore_cycles(petersen, params, 3, 4).size() == 480);
  CHECK(moore_cycles(petersen, params, 3, 4) == theta_enumerate(petersen, 3, Rational(4)).tuples);
  CHECK_THROWS_AS(moore_cycles(petersen, params, 2, 5), UsageError);
}

TEST_CASE("shuffles and signs") {
  CHECK(shuffles(2, 1).size() == 3);
  CHECK(shuffles(3, 3).size() == 20);
  CHECK(shuffles(0, 0).size() == 1);
  auto s = shuffles(1, 1);
  REQUIRE(s.size() == 2);
  CHECK(s[0] == Shuffle{{0, 0}, {1, 0}, {1, 1}});
  CHECK(xi(0) == 1);
  CHECK(xi(3) == 1);
  CHECK(xi(-1) == 0);
}

TEST_CASE("even cycle classes") {
  auto c6 = family::cycle(6);
  auto t21 = even_theta(c6, 2, 1, 0);
  CHECK(t21.n == 3);
  CHECK(t21.ell == Rational(4));
  CHECK(t21.terms.size() == 3);
  CHECK(t21.terms.at(Tuple{0, 1, 0, 4}) == -1);
  CHECK(t21.terms.at(Tuple{0, 1, 3, 4}) == 1);
  CHECK(t21.terms.at(Tuple{0, 5, 3, 4}) == -1);

  auto t00 = even_theta(c6, 0, 0, 2);
  CHECK(t00.terms.size() == 1);
  CHECK(t00.terms.begin()->first == Tuple{2});
  auto t10 = even_theta(c6, 1, 0, 2);
  CHECK(t10.terms.size() == 1);
  CHECK(t10.ell == Rational(1));
  auto t11 = even_theta(c6, 1, 1, 0);
  CHECK(t11.ell == Rational(3));
  CHECK(t11.terms.size() == 2);

  EvenCycle order(c6);
  CHECK(order.rotate(0, -1) == 5);
  CHECK(order.rotate(4, 3) == 1);

  CHECK(even_rank(6, 0, 0) == 6);
  CHECK(even_rank(6, 2, 3) == 6);
  CHECK(even_rank(6, 1, 1) == 12);
  CHECK(even_rank(8, 3, 5) == 16);
  CHECK(even_rank(6, 2, 2) == 12);
  CHECK(even_rank(6, 2, 4) == 0);
  CHECK_THROWS_AS(even_rank(5, 1, 1), UsageError);
  CHECK_THROWS_AS(even_rank(4, 1, 1), UsageError);
  CHECK(even_basis_cycles(c6, 1, 1).size() == 12);
  CHECK(even_basis_cycles(c6, 2, 4).empty());
}

TEST_CASE("magnitude") {
  CHECK(magnitude_distance_regular(family::petersen()).to_string() == "10/(1+3q+6q^2)");
  CHECK(magnitude_distance_regular(family::cycle(5)).to_string() == "5/(1+2q+2q^2)");
  for (std::size_t n = 2; n <= 6; ++n) {
    CHECK(magnitude_distance_regular(family::complete(n)).to_string() ==
          std::to_string(n) + "/(1+" + (n == 2 ? std::string() : std::to_string(n - 1)) + "q)");
  }
  RationalFunction missing{{3250}, {1, 57, 3192}};
  CHECK(missing.to_string() == "3250/(1+57q+3192q^2)");
  for (const auto& c : missing.series(6)) CHECK(c.get_den() == 1);
  CHECK_THROWS_AS(magnitude_distance_regular(family::path(4)), NotDistanceRegular);

  auto hs = family::hoffman_singleton();
  auto series = magnitude_distance_regular(hs).series(4);
  auto direct = magnitude_series(family::petersen(), 4);
  auto petersen = magnitude_distance_regular(family::petersen()).series(4);
  for (int i = 0; i <= 4; ++i) CHECK(Rational(direct[i]) == petersen[i]);
  CHECK(series[0] == 50);
  CHECK(series[1] == -350);
}
