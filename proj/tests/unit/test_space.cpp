#include <doctest.h>

#include <sstream>

#include "../support.hpp"
#include "mh/error.hpp"
#include "mh/families.hpp"
#include "mh/io.hpp"
#include "mh/space.hpp"

using namespace mh;

namespace {

std::vector<std::vector<ExtDist>> matrix(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<ExtDist>> out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (long v : r) out.back().push_back(v < 0 ? ExtDist::infinity() : ExtDist(v));
  }
  return out;
}

AxiomKind violation_kind(const std::vector<std::vector<long>>& rows) {
  try {
    QuasiMetricSpace::from_distance_matrix(matrix(rows));
  } catch (const AxiomViolation& e) {
    return e.kind();
  }
  FAIL("no violation raised");
  return AxiomKind::shape;
}

}  // namespace

TEST_CASE("extended distances") {
  CHECK(ExtDist(2) + ExtDist::infinity() == ExtDist::infinity());
  CHECK(ExtDist(Rational(1, 2)) < ExtDist(1));
  CHECK(ExtDist(5) < ExtDist::infinity());
  CHECK(ExtDist::parse("3/6")->value() == Rational(1, 2));
  CHECK(ExtDist::parse("inf")->is_infinite());
  CHECK_FALSE(ExtDist::parse("-1"));
  CHECK(format_rational(Rational(4, 2)) == "2");
  CHECK(format_rational(Rational(3, 6)) == "1/2");
}

TEST_CASE("axioms are enforced with witnesses") {
  CHECK(violation_kind({{1, 1}, {1, 0}}) == AxiomKind::self_distance);
  CHECK(violation_kind({{0, 0}, {1, 0}}) == AxiomKind::zero_separation);
  CHECK(violation_kind({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}) == AxiomKind::triangle);
  CHECK(violation_kind({{0, 1}, {1}}) == AxiomKind::shape);
  auto ok = QuasiMetricSpace::from_distance_matrix(matrix({{0, 1, -1}, {2, 0, -1}, {3, 1, 0}}));
  CHECK_FALSE(ok.is_symmetric());
  CHECK_FALSE(ok.finite(0, 2));
}

TEST_CASE("betweenness and units") {
  auto space = QuasiMetricSpace::from_distance_matrix(
      {{ExtDist(0), ExtDist(Rational(1, 2)), ExtDist(Rational(3, 2))},
       {ExtDist(Rational(1, 2)), ExtDist(0), ExtDist(1)},
       {ExtDist(Rational(3, 2)), ExtDist(1), ExtDist(0)}});
  CHECK(space.scale() == 2);
  CHECK(space.units(0, 2) == 3);
  CHECK(space.between(0, 1, 2));
  CHECK_FALSE(space.between(1, 0, 2));
  CHECK(space.min_positive_units() == 1);
  CHECK(space.length(Tuple{0, 1, 2, 1}) == Rational(5, 2));
  CHECK_FALSE(space.to_units(Rational(1, 3)));
}

TEST_CASE("geodeticity") {
  CHECK(family::cycle(5).is_geodetic());
  CHECK(family::cycle(7).is_geodetic());
  CHECK_FALSE(family::cycle(6).is_geodetic());
  CHECK_FALSE(family::cycle(4).is_geodetic());
  CHECK(family::petersen().is_geodetic());
  CHECK(family::path(6).is_geodetic());
  auto check = family::cycle(6).geodetic_check();
  CHECK_FALSE(check.geodetic);
  CHECK(check.x != check.y);
}

TEST_CASE("geodeticity is hereditary") {
  for (const auto& g : testing::random_geodetic_graphs(10, 8, 11)) {
    std::vector<Point> keep;
    for (Point x = 0; x < g.size(); x += 2) keep.push_back(x);
    CHECK(g.subspace(keep).is_geodetic());
  }
}

TEST_CASE("four cuts") {
  CHECK_FALSE(family::complete(5).has_four_cut());
  CHECK_FALSE(family::path(6).has_four_cut());
  CHECK_FALSE(family::star(5).has_four_cut());
  auto c5 = family::cycle(5);
  CHECK(c5.has_four_cut());
  CHECK(c5.min_four_cut_length() == ExtDist(3));
  auto cut = c5.minimal_four_cut();
  REQUIRE(cut);
  CHECK(cut->length == 3);
  CHECK(c5.between(cut->x0, cut->x1, cut->x2));
  CHECK(c5.between(cut->x1, cut->x2, cut->x3));
  CHECK_FALSE(c5.between(cut->x0, cut->x1, cut->x3));
  CHECK(family::complete(4).min_four_cut_length().is_infinite());
}

TEST_CASE("distance regularity") {
  auto p = family::petersen().distance_regularity();
  CHECK(p.regular);
  CHECK(p.counts.at(Rational(1)) == 3);
  CHECK(p.counts.at(Rational(2)) == 6);
  CHECK_FALSE(family::path(4).distance_regularity().regular);
  CHECK_THROWS_AS(family::random_graph(6, 0.0, 1).distance_regularity(), HypothesisError);
}

TEST_CASE("families") {
  auto hs = family::hoffman_singleton();
  CHECK(hs.size() == 50);
  for (Point x = 0; x < hs.size(); ++x) {
    int degree = 0;
    for (Point y = 0; y < hs.size(); ++y) degree += hs.distance(x, y) == ExtDist(1);
    CHECK(degree == 7);
  }
  CHECK(family::petersen().size() == 10);
  CHECK(family::star(4).size() == 4);
  CHECK(named_family("cycle", {"7"}).size() == 7);
  CHECK_THROWS_AS(named_family("cycle", {}), UsageError);
  CHECK_THROWS_AS(named_family("nonsense", {}), UsageError);
  CHECK(family::random_graph(8, 0.5, 42).canonical_text() == family::random_graph(8, 0.5, 42).canonical_text());
}

TEST_CASE("csv and json round trips") {
  auto space = testing::random_quasi_metric(5, 3);
  std::stringstream csv;
  write_distance_csv(csv, space);
  CHECK(read_distance_csv(csv).canonical_text() == space.canonical_text());
  std::stringstream js;
  write_space_json(js, space);
  CHECK(read_space_json(js).canonical_text() == space.canonical_text());
}

TEST_CASE("parse errors carry positions") {
  std::istringstream in("a,b\n0,1\n1,zz\n");
  try {
    read_distance_csv(in);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
  }
  std::istringstream edges("0 1\n1 x\n");
  CHECK_THROWS_AS(read_edge_list(edges, false), ParseError);
  std::istringstream good("# pentagon\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  CHECK(read_edge_list(good, false).canonical_text() == family::cycle(5).canonical_text());
}
