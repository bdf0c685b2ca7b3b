#include "mh/families.hpp"

#include <charconv>
#include <deque>
#include <random>

#include "mh/error.hpp"

namespace mh {

QuasiMetricSpace from_graph(const std::vector<Edge>& edges, bool directed, std::size_t vertex_count,
                            std::vector<std::string> labels) {
  std::vector<std::vector<Point>> adjacency(vertex_count);
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw UsageError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for " +
                       std::to_string(vertex_count) + " vertices");
    }
    if (u == v) continue;
    adjacency[u].push_back(v);
    if (!directed) adjacency[v].push_back(u);
  }

  std::vector<std::vector<ExtDist>> dist(vertex_count, std::vector<ExtDist>(vertex_count, ExtDist::infinity()));
  std::vector<long> hops(vertex_count);
  std::deque<Point> queue;
  for (Point source = 0; source < vertex_count; ++source) {
    std::fill(hops.begin(), hops.end(), -1);
    hops[source] = 0;
    queue.assign(1, source);
    while (!queue.empty()) {
      Point u = queue.front();
      queue.pop_front();
      for (Point v : adjacency[u]) {
        if (hops[v] < 0) {
          hops[v] = hops[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (Point t = 0; t < vertex_count; ++t) {
      if (hops[t] >= 0) dist[source][t] = ExtDist(hops[t]);
    }
  }
  return QuasiMetricSpace::from_distance_matrix(std::move(dist), std::move(labels));
}

namespace family {

std::vector<Edge> cycle_edges(std::size_t n) {
  std::vector<Edge> edges;
  for (Point i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Point>((i + 1) % n));
  return edges;
}

std::vector<Edge> petersen_edges() {
  std::vector<Edge> edges;
  for (Point i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return edges;
}

std::vector<Edge> hoffman_singleton_edges() {
  auto pentagon = [](Point h, Point j) { return 5 * h + j; };
  auto pentagram = [](Point i, Point j) { return 25 + 5 * i + j; };
  std::vector<Edge> edges;
  for (Point h = 0; h < 5; ++h) {
    for (Point j = 0; j < 5; ++j) {
      edges.emplace_back(pentagon(h, j), pentagon(h, (j + 1) % 5));
      edges.emplace_back(pentagram(h, j), pentagram(h, (j + 2) % 5));
    }
  }
  for (Point h = 0; h < 5; ++h) {
    for (Point i = 0; i < 5; ++i) {
      for (Point j = 0; j < 5; ++j) edges.emplace_back(pentagon(h, j), pentagram(i, (h * i + j) % 5));
    }
  }
  return edges;
}

QuasiMetricSpace cycle(std::size_t n) {
  if (n < 3) throw UsageError("cycle needs at least 3 vertices");
  return from_graph(cycle_edges(n), false, n);
}

QuasiMetricSpace complete(std::size_t n) {
  if (n < 1) throw UsageError("complete graph needs at least 1 vertex");
  std::vector<Edge> edges;
  for (Point i = 0; i < n; ++i) {
    for (Point j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return from_graph(edges, false, n);
}

QuasiMetricSpace path(std::size_t n) {
  if (n < 1) throw UsageError("path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (Point i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return from_graph(edges, false, n);
}

QuasiMetricSpace star(std::size_t n) {
  if (n < 1) throw UsageError("star needs at least 1 vertex");
  std::vector<Edge> edges;
  for (Point i = 1; i < n; ++i) edges.emplace_back(0, i);
  return from_graph(edges, false, n);
}

QuasiMetricSpace petersen() { return from_graph(petersen_edges(), false, 10); }

QuasiMetricSpace hoffman_singleton() { return from_graph(hoffman_singleton_edges(), false, 50); }

QuasiMetricSpace random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw UsageError("random_graph needs at least 1 vertex");
  if (!(p >= 0.0 && p <= 1.0)) throw UsageError("random_graph edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Point i = 0; i < n; ++i) {
    for (Point j = i + 1; j < n; ++j) {
      // 53 random bits -> uniform double in [0, 1), independent of the
      // standard library's distribution implementations.
      double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) edges.emplace_back(i, j);
    }
  }
  return from_graph(edges, false, n);
}

}  // namespace family

namespace {

template <typename T>
T parse_param(const std::string& name, const std::vector<std::string>& params, std::size_t index) {
  if (index >= params.size()) throw UsageError(name + ": missing parameter " + std::to_string(index + 1));
  const std::string& text = params[index];
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError(name + ": malformed parameter '" + text + "'");
  }
  return value;
}

double parse_probability(const std::string& name, const std::string& text) {
  try {
    std::size_t used = 0;
    double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw UsageError(name + ": malformed probability '" + text + "'");
  }
}

void expect_count(const std::string& name, const std::vector<std::string>& params, std::size_t count) {
  if (params.size() != count) {
    throw UsageError(name + " takes " + std::to_string(count) + " parameter(s), got " +
                     std::to_string(params.size()));
  }
}

}  // namespace

QuasiMetricSpace named_family(const std::string& name, const std::vector<std::string>& params) {
  if (name == "cycle" || name == "complete" || name == "path" || name == "star") {
    expect_count(name, params, 1);
    auto n = parse_param<std::size_t>(name, params, 0);
    if (name == "cycle") return family::cycle(n);
    if (name == "complete") return family::complete(n);
    if (name == "path") return family::path(n);
    return family::star(n);
  }
  if (name == "petersen") {
    expect_count(name, params, 0);
    return family::petersen();
  }
  if (name == "hoffman_singleton" || name == "hoffman-singleton") {
    expect_count(name, params, 0);
    return family::hoffman_singleton();
  }
  if (name == "random_graph" || name == "random") {
    expect_count(name, params, 3);
    auto n = parse_param<std::size_t>(name, params, 0);
    double p = parse_probability(name, params[1]);
    auto seed = parse_param<std::uint64_t>(name, params, 2);
    return family::random_graph(n, p, seed);
  }
  throw UsageError("unknown family '" + name + "'");
}

}  // namespace mh
