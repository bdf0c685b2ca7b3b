#include "mh/theta.hpp"

#include "mh/chain.hpp"
#include "mh/error.hpp"

namespace mh {

namespace {

void require_geodetic(const QuasiMetricSpace& space) {
  auto check = space.geodetic_check();
  if (!check.geodetic) {
    const auto& l = space.labels();
    throw NotGeodetic("space is not geodetic: " + l[check.x] + " and " + l[check.y] + " are incomparable in I(" +
                      l[check.a] + ", " + l[check.b] + ")");
  }
}

}  // namespace

PairSet positive_pairs(const QuasiMetricSpace& space) {
  PairSet out;
  for (Point x = 0; x < space.size(); ++x) {
    for (Point y = 0; y < space.size(); ++y) {
      if (x != y && space.finite(x, y)) out.emplace(x, y);
    }
  }
  return out;
}

PairSet kappa(const QuasiMetricSpace& space, Point x, Point y) {
  PairSet out;
  for (Point w = 0; w < space.size(); ++w) {
    if (space.finite(y, w) && !space.between(x, y, w)) out.emplace(y, w);
  }
  return out;
}

PairSet beta(const QuasiMetricSpace& space, const PairSet& s) {
  PairSet out;
  for (const auto& [z, w] : s) {
    bool covered = false;
    for (auto it = s.lower_bound({z, 0}); it != s.end() && it->first == z; ++it) {
      Point a = it->second;
      if (a != w && space.between(z, a, w)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.emplace(z, w);
  }
  return out;
}

PairSet iota_left(const QuasiMetricSpace& space, Point x, Point y, const PairSet& s) {
  PairSet out;
  for (auto it = s.lower_bound({y, 0}); it != s.end() && it->first == y; ++it) {
    if (space.between(x, y, it->second)) out.emplace(x, it->second);
  }
  return out;
}

PairSet iota_right(const QuasiMetricSpace& space, const PairSet& s, Point x, Point y) {
  PairSet out;
  for (const auto& [z, t] : s) {
    if (t == x && space.between(z, x, y)) out.emplace(z, y);
  }
  return out;
}

ThetaEnumerator::ThetaEnumerator(const QuasiMetricSpace& space)
    : space_(space), cache_(space.size() * space.size()) {
  require_geodetic(space);
  auto seeds = beta(space, positive_pairs(space));
  seeds_.assign(seeds.begin(), seeds.end());
}

const std::vector<Point>& ThetaEnumerator::extensions(Point x, Point y) {
  auto& slot = cache_[x * space_.size() + y];
  if (!slot) {
    std::vector<Point> targets;
    for (const auto& [from, to] : beta(space_, kappa(space_, x, y))) targets.push_back(to);
    slot = std::move(targets);
  }
  return *slot;
}

void ThetaEnumerator::for_each(int n, std::int64_t ell_units, const std::function<void(const Tuple&)>& visit) {
  if (n == 0) {
    if (ell_units != 0) return;
    for (Point x = 0; x < space_.size(); ++x) visit(Tuple{x});
    return;
  }
  for (const auto& seed : seeds_) for_each_from(seed, n, ell_units, visit);
}

void ThetaEnumerator::for_each_from(Pair seed, int n, std::int64_t ell_units,
                                    const std::function<void(const Tuple&)>& visit) {
  if (n < 1) return;
  std::int64_t u = space_.units(seed.first, seed.second);
  std::int64_t rem = ell_units - u;
  if (rem < 0 || (n - 1) * space_.min_positive_units() > rem) return;
  Tuple tuple{seed.first, seed.second};
  tuple.reserve(static_cast<std::size_t>(n) + 1);
  extend(tuple, u, n, ell_units, visit);
}

void ThetaEnumerator::extend(Tuple& tuple, std::int64_t acc, int n, std::int64_t ell,
                             const std::function<void(const Tuple&)>& visit) {
  const int steps = static_cast<int>(tuple.size()) - 1;
  if (steps == n) {
    if (acc == ell) visit(tuple);
    return;
  }
  const int left = n - steps - 1;
  Point x = tuple[tuple.size() - 2], y = tuple.back();
  // copy: the cache may grow during recursion
  const std::vector<Point> targets = extensions(x, y);
  for (Point w : targets) {
    std::int64_t u = space_.units(y, w);
    std::int64_t rem = ell - acc - u;
    if (rem < 0 || left * space_.min_positive_units() > rem) continue;
    tuple.push_back(w);
    extend(tuple, acc + u, n, ell, visit);
    tuple.pop_back();
  }
}

ThetaBasis theta_enumerate(const QuasiMetricSpace& space, int n, const Rational& ell) {
  ThetaBasis out;
  out.n = n;
  out.ell = ell;
  ThetaEnumerator enumerator(space);
  auto units = space.to_units(ell);
  if (n < 0 || !units) return out;
  enumerator.for_each(n, *units, [&](const Tuple& t) { out.tuples.push_back(t); });
  return out;
}

Integer theta_count(const QuasiMetricSpace& space, int n, const Rational& ell) {
  ThetaEnumerator enumerator(space);
  auto units = space.to_units(ell);
  if (n < 0 || !units) return 0;
  Integer count = 0;
  enumerator.for_each(n, *units, [&](const Tuple&) { ++count; });
  return count;
}

bool satisfies_theta_conditions(const QuasiMetricSpace& space, const Tuple& t) {
  if (t.empty()) return false;
  const std::size_t n = t.size() - 1;
  if (n == 0) return true;
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i] == t[i + 1] || !space.finite(t[i], t[i + 1])) return false;
  }
  if (!space.is_saturated_pair(t[0], t[1])) return false;
  for (std::size_t i = 1; i < n; ++i) {
    if (space.between(t[i - 1], t[i], t[i + 1])) return false;
    for (Point a = 0; a < space.size(); ++a) {
      if (a != t[i + 1] && space.between(t[i], a, t[i + 1]) && !space.between(t[i - 1], t[i], a)) return false;
    }
  }
  return true;
}

std::vector<Tuple> theta_direct_filter(const QuasiMetricSpace& space, int n, const Rational& ell) {
  std::vector<Tuple> out;
  auto units = space.to_units(ell);
  if (!units) return out;
  for_each_trail(space, n, *units, Variant::normalized, std::nullopt, std::nullopt, [&](const Tuple& t) {
    if (satisfies_theta_conditions(space, t)) out.push_back(t);
  });
  return out;
}

bool is_thin_frame(const QuasiMetricSpace& space, const Tuple& t) {
  if (t.empty()) return false;
  const std::size_t n = t.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (!space.finite(t[i], t[i + 1]) || !space.is_saturated_pair(t[i], t[i + 1])) return false;
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (space.between(t[i - 1], t[i], t[i + 1])) return false;
  }
  return true;
}

std::vector<Tuple> thin_frames(const QuasiMetricSpace& space, int n, const Rational& ell) {
  std::vector<Tuple> out;
  auto units = space.to_units(ell);
  if (!units) return out;
  for_each_trail(space, n, *units, Variant::normalized, std::nullopt, std::nullopt, [&](const Tuple& t) {
    if (is_thin_frame(space, t)) out.push_back(t);
  });
  return out;
}

DiagonalityCertificate is_diagonal(const QuasiMetricSpace& space) {
  require_geodetic(space);
  DiagonalityCertificate out;
  out.diagonal = !space.has_four_cut();
  if (!out.diagonal) out.cut = space.minimal_four_cut();
  return out;
}

std::size_t rank_prediction(const QuasiMetricSpace& space, int n, const Rational& ell) {
  return theta_count(space, n, ell).get_ui();
}

}  // namespace mh
