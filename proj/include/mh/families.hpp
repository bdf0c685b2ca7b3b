#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mh/space.hpp"

namespace mh {

using Edge = std::pair<Point, Point>;

/// Shortest-path (hop count) metric of a graph; unreachable pairs are at
/// infinite distance. Throws UsageError for out-of-range endpoints.
QuasiMetricSpace from_graph(const std::vector<Edge>& edges, bool directed, std::size_t vertex_count,
                            std::vector<std::string> labels = {});

namespace family {

std::vector<Edge> cycle_edges(std::size_t n);
std::vector<Edge> petersen_edges();
std::vector<Edge> hoffman_singleton_edges();

QuasiMetricSpace cycle(std::size_t n);
QuasiMetricSpace complete(std::size_t n);
QuasiMetricSpace path(std::size_t n);
/// n vertices in total: vertex 0 is the centre.
QuasiMetricSpace star(std::size_t n);
/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5+i -- 5+(i+2)%5.
QuasiMetricSpace petersen();
/// Pentagons P_h (vertex 5h+j adjacent to j+-1) and pentagrams Q_i (vertex
/// 25+5i+j adjacent to j+-2), with P_h vertex j joined to Q_i vertex h*i+j.
QuasiMetricSpace hoffman_singleton();
/// Erdos-Renyi G(n, p) from a seeded mt19937_64; may be disconnected.
QuasiMetricSpace random_graph(std::size_t n, double p, std::uint64_t seed);

}  // namespace family

/// Dispatches on `name` in {cycle, complete, path, star, petersen,
/// hoffman_singleton, random_graph}. Throws UsageError for unknown names
/// or malformed parameters.
QuasiMetricSpace named_family(const std::string& name, const std::vector<std::string>& params);

}  // namespace mh
