#include "mh/space.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mh/error.hpp"

namespace mh {

namespace {

constexpr std::int64_t kMaxUnits = std::int64_t{1} << 40;

std::string label_or_index(const std::vector<std::string>& labels, std::size_t i) {
  return i < labels.size() ? labels[i] : std::to_string(i);
}

}  // namespace

QuasiMetricSpace QuasiMetricSpace::from_distance_matrix(std::vector<std::vector<ExtDist>> dist,
                                                        std::vector<std::string> labels) {
  const std::size_t n = dist.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i].size() != n) {
      throw AxiomViolation(AxiomKind::shape, i, 0, 0,
                           "distance matrix is not square: row " + std::to_string(i) + " has " +
                               std::to_string(dist[i].size()) + " entries, expected " + std::to_string(n));
    }
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != n) {
    throw AxiomViolation(AxiomKind::shape, 0, 0, 0, "label count does not match matrix size");
  }

  for (std::size_t x = 0; x < n; ++x) {
    if (dist[x][x] != ExtDist(0)) {
      throw AxiomViolation(AxiomKind::self_distance, x, x, x,
                           "d(" + labels[x] + "," + labels[x] + ") = " + dist[x][x].to_string() + " is not 0");
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && dist[x][y] == ExtDist(0)) {
        throw AxiomViolation(AxiomKind::zero_separation, x, y, y,
                             "d(" + labels[x] + "," + labels[y] + ") = 0 for distinct points");
      }
    }
  }

  QuasiMetricSpace space;
  space.labels_ = std::move(labels);
  space.dist_ = std::move(dist);

  Integer scale = 1;
  for (const auto& row : space.dist_) {
    for (const auto& d : row) {
      if (d.is_finite()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d.value().get_den_mpz_t());
    }
  }
  space.scale_ = scale;
  space.units_.assign(n * n, kInfiniteUnits);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto& d = space.dist_[x][y];
      if (!d.is_finite()) continue;
      Rational scaled = d.value() * Rational(scale);
      scaled.canonicalize();
      const Integer& u = scaled.get_num();
      if (!u.fits_slong_p() || u.get_si() > kMaxUnits) {
        throw ResourceLimit("distance " + d.to_string() + " too large relative to common denominator " +
                            scale.get_str());
      }
      space.units_[x * n + y] = u.get_si();
      if (x != y && (space.min_positive_units_ == 0 || u.get_si() < space.min_positive_units_)) {
        space.min_positive_units_ = u.get_si();
      }
    }
  }

  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      auto xy = space.units(x, y);
      if (xy == kInfiniteUnits) continue;
      for (Point z = 0; z < n; ++z) {
        auto yz = space.units(y, z);
        if (yz == kInfiniteUnits) continue;
        auto xz = space.units(x, z);
        if (xz == kInfiniteUnits || xz > xy + yz) {
          throw AxiomViolation(AxiomKind::triangle, x, y, z,
                               "triangle inequality fails: d(" + space.labels_[x] + "," + space.labels_[y] +
                                   ") + d(" + space.labels_[y] + "," + space.labels_[z] + ") < d(" +
                                   space.labels_[x] + "," + space.labels_[z] + ")");
        }
      }
    }
  }
  return space;
}

std::optional<std::int64_t> QuasiMetricSpace::to_units(const Rational& ell) const {
  Rational scaled = ell * Rational(scale_);
  scaled.canonicalize();
  if (scaled.get_den() != 1 || !scaled.get_num().fits_slong_p()) return std::nullopt;
  return scaled.get_num().get_si();
}

Rational QuasiMetricSpace::from_units(std::int64_t units) const {
  Rational r(Integer(static_cast<long>(units)), scale_);
  r.canonicalize();
  return r;
}

std::optional<std::int64_t> QuasiMetricSpace::length_units(const Tuple& tuple) const {
  std::int64_t total = 0;
  for (std::size_t i = 0; i + 1 < tuple.size(); ++i) {
    auto u = units(tuple[i], tuple[i + 1]);
    if (u == kInfiniteUnits) return std::nullopt;
    total += u;
  }
  return total;
}

Rational QuasiMetricSpace::length(const Tuple& tuple) const {
  auto u = length_units(tuple);
  if (!u) throw std::domain_error("tuple has an infinite step");
  return from_units(*u);
}

bool QuasiMetricSpace::is_symmetric() const {
  for (std::size_t x = 0; x < size(); ++x) {
    for (std::size_t y = x + 1; y < size(); ++y) {
      if (units_[x * size() + y] != units_[y * size() + x]) return false;
    }
  }
  return true;
}

bool QuasiMetricSpace::all_finite() const {
  return std::none_of(units_.begin(), units_.end(), [](std::int64_t u) { return u == kInfiniteUnits; });
}

Interval QuasiMetricSpace::interval(Point a, Point b) const {
  if (!finite(a, b)) {
    throw HypothesisError("interval I(" + labels_[a] + "," + labels_[b] + ") needs a finite distance");
  }
  Interval result;
  result.a = a;
  result.b = b;
  for (Point x = 0; x < size(); ++x) {
    if (between(a, x, b)) result.points.push_back(x);
  }
  std::sort(result.points.begin(), result.points.end(), [&](Point x, Point y) {
    return units(a, x) != units(a, y) ? units(a, x) < units(a, y) : x < y;
  });
  for (std::size_t i = 0; i < result.points.size() && result.totally_ordered; ++i) {
    for (std::size_t j = i + 1; j < result.points.size(); ++j) {
      Point x = result.points[i], y = result.points[j];
      if (!between(a, x, y) && !between(a, y, x)) {
        result.totally_ordered = false;
        break;
      }
    }
  }
  return result;
}

GeodeticCheck QuasiMetricSpace::geodetic_check() const {
  GeodeticCheck check;
  std::vector<Point> members;
  for (Point a = 0; a < size(); ++a) {
    for (Point b = 0; b < size(); ++b) {
      if (!finite(a, b)) continue;
      members.clear();
      for (Point x = 0; x < size(); ++x) {
        if (between(a, x, b)) members.push_back(x);
      }
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          Point x = members[i], y = members[j];
          if (!between(a, x, y) && !between(a, y, x)) {
            check.geodetic = false;
            check.a = a;
            check.b = b;
            check.x = x;
            check.y = y;
            return check;
          }
        }
      }
    }
  }
  return check;
}

std::vector<FourCut> QuasiMetricSpace::four_cuts(std::size_t max_count) const {
  std::vector<FourCut> cuts;
  const Point n = static_cast<Point>(size());
  for (Point x0 = 0; x0 < n; ++x0) {
    for (Point x1 = 0; x1 < n; ++x1) {
      for (Point x2 = 0; x2 < n; ++x2) {
        if (x1 == x2 || !between(x0, x1, x2)) continue;
        for (Point x3 = 0; x3 < n; ++x3) {
          if (!between(x1, x2, x3) || between(x0, x1, x3)) continue;
          if (cuts.size() >= max_count) return cuts;
          cuts.push_back({x0, x1, x2, x3, from_units(units(x0, x1) + units(x1, x2) + units(x2, x3))});
        }
      }
    }
  }
  return cuts;
}

std::optional<FourCut> QuasiMetricSpace::minimal_four_cut() const {
  std::optional<FourCut> best;
  std::int64_t best_units = 0;
  const Point n = static_cast<Point>(size());
  for (Point x0 = 0; x0 < n; ++x0) {
    for (Point x1 = 0; x1 < n; ++x1) {
      for (Point x2 = 0; x2 < n; ++x2) {
        if (x1 == x2 || !between(x0, x1, x2)) continue;
        for (Point x3 = 0; x3 < n; ++x3) {
          if (!between(x1, x2, x3) || between(x0, x1, x3)) continue;
          std::int64_t len = units(x0, x1) + units(x1, x2) + units(x2, x3);
          if (!best || len < best_units) {
            best_units = len;
            best = FourCut{x0, x1, x2, x3, from_units(len)};
          }
        }
      }
    }
  }
  return best;
}

ExtDist QuasiMetricSpace::min_four_cut_length() const {
  auto cut = minimal_four_cut();
  return cut ? ExtDist(cut->length) : ExtDist::infinity();
}

bool QuasiMetricSpace::has_four_cut() const {
  const bool restrict_first_pair = is_geodetic();
  const Point n = static_cast<Point>(size());
  for (Point x0 = 0; x0 < n; ++x0) {
    for (Point x1 = 0; x1 < n; ++x1) {
      if (x0 == x1 || !finite(x0, x1)) continue;
      if (restrict_first_pair && !is_saturated_pair(x0, x1)) continue;
      for (Point x2 = 0; x2 < n; ++x2) {
        if (x1 == x2 || !between(x0, x1, x2)) continue;
        for (Point x3 = 0; x3 < n; ++x3) {
          if (between(x1, x2, x3) && !between(x0, x1, x3)) return true;
        }
      }
    }
  }
  return false;
}

bool QuasiMetricSpace::is_saturated_pair(Point x, Point y) const {
  for (Point a = 0; a < size(); ++a) {
    if (a != x && a != y && between(x, a, y)) return false;
  }
  return true;
}

bool QuasiMetricSpace::is_saturated(const Tuple& tuple) const {
  for (std::size_t i = 0; i + 1 < tuple.size(); ++i) {
    if (!is_saturated_pair(tuple[i], tuple[i + 1])) return false;
  }
  return true;
}

DistanceRegularity QuasiMetricSpace::distance_regularity() const {
  if (!is_symmetric()) throw HypothesisError("distance regularity needs a symmetric metric");
  if (!all_finite()) throw HypothesisError("distance regularity needs a connected space (all distances finite)");
  DistanceRegularity result;
  if (size() == 0) {
    result.regular = true;
    return result;
  }
  auto profile = [&](Point x) {
    std::map<std::int64_t, std::size_t> counts;
    for (Point y = 0; y < size(); ++y) ++counts[units(x, y)];
    return counts;
  };
  auto reference = profile(0);
  result.regular = true;
  for (Point x = 1; x < size() && result.regular; ++x) result.regular = profile(x) == reference;
  for (const auto& [u, c] : reference) result.counts.emplace(from_units(u), c);
  return result;
}

QuasiMetricSpace QuasiMetricSpace::subspace(const std::vector<Point>& points) const {
  std::vector<std::vector<ExtDist>> dist(points.size(), std::vector<ExtDist>(points.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < points.size(); ++i) {
    labels.push_back(label_or_index(labels_, points[i]));
    for (std::size_t j = 0; j < points.size(); ++j) dist[i][j] = dist_[points[i]][points[j]];
  }
  return from_distance_matrix(std::move(dist), std::move(labels));
}

std::string QuasiMetricSpace::canonical_text() const {
  std::ostringstream out;
  out << size() << '\n';
  for (const auto& l : labels_) out << l << '\n';
  for (const auto& row : dist_) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j].to_string();
    out << '\n';
  }
  return out.str();
}

}  // namespace mh
