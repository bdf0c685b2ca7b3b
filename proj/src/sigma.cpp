#include "mh/sigma.hpp"

#include <algorithm>

#include "mh/error.hpp"

namespace mh {

SigmaAlgebra::SigmaAlgebra(const QuasiMetricSpace& space) : space_(&space) {
  const std::size_t n = space.size();
  index_.assign(n * n, -1);
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      if (!space.finite(x, y)) continue;
      index_[x * n + y] = static_cast<std::ptrdiff_t>(pairs_.size());
      pairs_.emplace_back(x, y);
    }
  }
}

std::optional<std::size_t> SigmaAlgebra::index_of(Point x, Point y) const {
  if (x >= space_->size() || y >= space_->size()) return std::nullopt;
  auto i = index_[x * space_->size() + y];
  if (i < 0) return std::nullopt;
  return static_cast<std::size_t>(i);
}

SigmaAlgebra::Element SigmaAlgebra::unit() const {
  Element e = zero();
  for (Point x = 0; x < space_->size(); ++x) e[*index_of(x, x)] = 1;
  return e;
}

SigmaAlgebra::Element SigmaAlgebra::basis_element(Point x, Point y) const {
  auto i = index_of(x, y);
  if (!i) throw UsageError("pair at infinite distance is not in the algebra");
  Element e = zero();
  e[*i] = 1;
  return e;
}

SigmaAlgebra::Element SigmaAlgebra::multiply(const Element& a, const Element& b) const {
  Element out = zero();
  for (std::size_t i = 0; i < size(); ++i) {
    if (a[i] == 0) continue;
    auto [x, y] = pairs_[i];
    for (Point w = 0; w < space_->size(); ++w) {
      if (!space_->between(x, y, w)) continue;
      const Integer& c = b[*index_of(y, w)];
      if (c != 0) out[*index_of(x, w)] += a[i] * c;
    }
  }
  return out;
}

SigmaAlgebra::Element SigmaAlgebra::add(const Element& a, const Element& b) const {
  Element out = a;
  for (std::size_t i = 0; i < size(); ++i) out[i] += b[i];
  return out;
}

SigmaAlgebra::Element SigmaAlgebra::power(const Element& a, unsigned k) const {
  Element out = unit();
  for (unsigned i = 0; i < k; ++i) out = multiply(out, a);
  return out;
}

IntMatrix SigmaAlgebra::left_mult_matrix(const Element& element) const {
  IntMatrix m(size(), size());
  for (std::size_t col = 0; col < size(); ++col) {
    auto [z, w] = pairs_[col];
    for (Point x = 0; x < space_->size(); ++x) {
      if (!space_->between(x, z, w)) continue;
      const Integer& c = element[*index_of(x, z)];
      if (c != 0) m(*index_of(x, w), col) += c;
    }
  }
  return m;
}

IntMatrix SigmaAlgebra::right_mult_matrix(const Element& element) const {
  IntMatrix m(size(), size());
  for (std::size_t col = 0; col < size(); ++col) {
    auto [x, y] = pairs_[col];
    for (Point w = 0; w < space_->size(); ++w) {
      if (!space_->between(x, y, w)) continue;
      const Integer& c = element[*index_of(y, w)];
      if (c != 0) m(*index_of(x, w), col) += c;
    }
  }
  return m;
}

bool SigmaAlgebra::in_radical(const Element& element) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (element[i] != 0 && pairs_[i].first == pairs_[i].second) return false;
  }
  return true;
}

IntMatrix SigmaAlgebra::augmentation_matrix() const {
  IntMatrix m(space_->size(), size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (pairs_[i].first == pairs_[i].second) m(pairs_[i].first, i) = 1;
  }
  return m;
}

std::vector<Point> even_cycle_order(const QuasiMetricSpace& space) {
  const std::size_t n = space.size();
  if (n < 6 || n % 2 != 0) throw HypothesisError("not an even cycle: need an even number N >= 6 of points");
  if (!space.is_symmetric() || !space.all_finite()) throw HypothesisError("not an even cycle: not a connected graph");
  const Rational one(1);
  std::vector<std::vector<Point>> neighbours(n);
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      if (space.distance(x, y) == ExtDist(one)) neighbours[x].push_back(y);
    }
    if (neighbours[x].size() != 2) throw HypothesisError("not an even cycle: a vertex does not have degree 2");
  }
  std::vector<Point> order{0, neighbours[0][0]};
  while (order.size() < n) {
    Point prev = order[order.size() - 2], cur = order.back();
    Point next = neighbours[cur][0] == prev ? neighbours[cur][1] : neighbours[cur][0];
    if (next == 0) throw HypothesisError("not an even cycle: the graph is not a single cycle");
    order.push_back(next);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t gap = i > j ? i - j : j - i;
      long expected = static_cast<long>(std::min(gap, n - gap));
      if (space.distance(order[i], order[j]) != ExtDist(expected)) {
        throw HypothesisError("not an even cycle: distances differ from the cycle metric");
      }
    }
  }
  return order;
}

std::pair<SigmaAlgebra::Element, SigmaAlgebra::Element> ab_elements(const SigmaAlgebra& algebra) {
  auto order = even_cycle_order(algebra.space());
  const std::size_t n = order.size();
  auto a = algebra.zero(), b = algebra.zero();
  for (std::size_t i = 0; i < n; ++i) {
    a[*algebra.index_of(order[i], order[(i + 1) % n])] += 1;
    b[*algebra.index_of(order[(i + 1) % n], order[i])] += 1;
  }
  return {a, b};
}

}  // namespace mh
