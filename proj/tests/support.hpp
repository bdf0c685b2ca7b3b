#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mh/families.hpp"
#include "mh/space.hpp"

namespace mh::testing {

/// Connected geodetic G(n, p) graphs with 4..max_points vertices and p drawn
/// from [p_low, p_high), seeded from `seed`.
inline std::vector<QuasiMetricSpace> random_geodetic_graphs(std::size_t count, std::size_t max_points,
                                                            std::uint64_t seed, double p_low = 0.25,
                                                            double p_high = 0.75) {
  std::vector<QuasiMetricSpace> out;
  std::mt19937_64 rng(seed);
  while (out.size() < count) {
    std::size_t n = 4 + rng() % (max_points - 3);
    double p = p_low + (p_high - p_low) * static_cast<double>(rng() % 1000) / 1000.0;
    auto g = family::random_graph(n, p, rng());
    if (g.all_finite() && g.is_geodetic()) out.push_back(std::move(g));
  }
  return out;
}

/// Random trees on 5..max_points vertices plus one chord joining two vertices
/// at even tree distance >= 4, kept when geodetic. The chord closes an odd
/// cycle of length >= 5, which carries a 4-cut, so these cover the
/// non-diagonal side that G(n, p) rarely reaches.
inline std::vector<QuasiMetricSpace> random_chorded_trees(std::size_t count, std::size_t max_points,
                                                          std::uint64_t seed) {
  std::vector<QuasiMetricSpace> out;
  std::mt19937_64 rng(seed);
  while (out.size() < count) {
    std::size_t n = 5 + rng() % (max_points - 4);
    std::vector<Edge> edges;
    for (Point v = 1; v < n; ++v) edges.emplace_back(static_cast<Point>(rng() % v), v);
    auto tree = from_graph(edges, false, n);
    std::vector<Edge> chords;
    for (Point a = 0; a < n; ++a) {
      for (Point b = a + 1; b < n; ++b) {
        auto d = tree.distance(a, b).value();
        if (d >= 4 && d.get_num() % 2 == 0) chords.emplace_back(a, b);
      }
    }
    if (chords.empty()) continue;
    edges.push_back(chords[rng() % chords.size()]);
    auto g = from_graph(edges, false, n);
    if (g.is_geodetic()) out.push_back(std::move(g));
  }
  return out;
}

/// Shortest-path closure of random positive rational weights on a random
/// directed graph: a quasi metric, possibly with infinite distances.
inline QuasiMetricSpace random_quasi_metric(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<ExtDist>> d(n, std::vector<ExtDist>(n, ExtDist::infinity()));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = ExtDist(0);
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && rng() % 3 != 0) d[i][j] = ExtDist(Rational(1 + static_cast<long>(rng() % 5), 1 + rng() % 2));
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return QuasiMetricSpace::from_distance_matrix(std::move(d));
}

}  // namespace mh::testing
