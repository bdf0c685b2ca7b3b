#include <doctest.h>

#include "mh/error.hpp"
#include "mh/families.hpp"
#include "mh/sigma.hpp"

using namespace mh;

TEST_CASE("distance algebra products") {
  auto p4 = family::path(4);
  SigmaAlgebra alg(p4);
  CHECK(alg.size() == 16);
  auto e01 = alg.basis_element(0, 1), e12 = alg.basis_element(1, 2), e10 = alg.basis_element(1, 0);
  CHECK(alg.multiply(e01, e12) == alg.basis_element(0, 2));
  CHECK(alg.multiply(e01, e10) == alg.zero());  // 1 is not between 0 and 0
  CHECK(alg.multiply(e12, e01) == alg.zero());
  CHECK(alg.multiply(alg.unit(), e12) == e12);
  CHECK(alg.multiply(e12, alg.unit()) == e12);
  CHECK(alg.in_radical(e01));
  CHECK_FALSE(alg.in_radical(alg.unit()));
  CHECK(alg.augmentation_matrix().rows() == 4);
  std::vector<std::vector<long>> col;
  for (const auto& v : e01) col.push_back({v.get_si()});
  CHECK((alg.augmentation_matrix() * IntMatrix::from_rows(col)).is_zero());
}

TEST_CASE("distance algebra is associative with matching multiplication matrices") {
  for (const auto& space : {family::cycle(5), family::cycle(6), family::star(4)}) {
    SigmaAlgebra alg(space);
    const auto& pairs = alg.pairs();
    for (const auto& [a0, a1] : pairs) {
      auto a = alg.basis_element(a0, a1);
      for (const auto& [b0, b1] : pairs) {
        auto b = alg.basis_element(b0, b1);
        auto ab = alg.multiply(a, b);
        for (const auto& [c0, c1] : pairs) {
          if (b1 != c0 && a1 != b0) continue;
          auto c = alg.basis_element(c0, c1);
          CHECK(alg.multiply(ab, c) == alg.multiply(a, alg.multiply(b, c)));
        }
      }
    }
    auto x = alg.add(alg.basis_element(pairs[1].first, pairs[1].second), alg.basis_element(1, 1));
    auto y = alg.add(alg.basis_element(pairs[3].first, pairs[3].second), alg.unit());
    auto column = [](const SigmaAlgebra::Element& e) {
      std::vector<std::vector<long>> rows;
      for (const auto& v : e) rows.push_back({v.get_si()});
      return IntMatrix::from_rows(rows);
    };
    CHECK(alg.left_mult_matrix(x) * column(y) == column(alg.multiply(x, y)));
    CHECK(alg.right_mult_matrix(y) * column(x) == column(alg.multiply(x, y)));
    CHECK(alg.power(x, 3) == alg.multiply(x, alg.multiply(x, x)));
    CHECK(alg.power(x, 0) == alg.unit());
  }
}

TEST_CASE("even cycle orientation") {
  auto c8 = family::cycle(8);
  auto order = even_cycle_order(c8);
  CHECK(order == std::vector<Point>{0, 1, 2, 3, 4, 5, 6, 7});
  SigmaAlgebra alg(c8);
  auto [a, b] = ab_elements(alg);
  CHECK(a[*alg.index_of(0, 1)] == 1);
  CHECK(a[*alg.index_of(1, 0)] == 0);
  CHECK(b[*alg.index_of(1, 0)] == 1);
  CHECK(alg.multiply(a, b) == alg.zero());
  CHECK_THROWS_AS(even_cycle_order(family::cycle(5)), HypothesisError);
  CHECK_THROWS_AS(even_cycle_order(family::cycle(4)), HypothesisError);
  CHECK_THROWS_AS(even_cycle_order(family::path(6)), HypothesisError);
}
