#include "mh/chain.hpp"

#include <algorithm>
#include <unordered_map>

#include "mh/error.hpp"

namespace mh {

std::optional<std::size_t> GradedPiece::index_of(const Tuple& tuple) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), tuple);
  if (it == basis.end() || *it != tuple) return std::nullopt;
  return static_cast<std::size_t>(it - basis.begin());
}

namespace {

class TrailWalker {
 public:
  TrailWalker(const QuasiMetricSpace& space, int n, std::int64_t ell, Variant variant, std::optional<Point> last,
              const std::function<void(const Tuple&)>& visit)
      : space_(space), n_(n), ell_(ell), normalized_(variant == Variant::normalized), last_(last), visit_(visit) {
    tuple_.reserve(static_cast<std::size_t>(n) + 1);
  }

  void start(Point x0) {
    tuple_.assign(1, x0);
    if (n_ == 0) {
      if (ell_ == 0 && (!last_ || *last_ == x0)) visit_(tuple_);
      return;
    }
    if (last_ && space_.units(x0, *last_) == QuasiMetricSpace::kInfiniteUnits) return;
    extend(0);
  }

 private:
  void extend(std::int64_t acc) {
    const Point cur = tuple_.back();
    const int left = n_ - static_cast<int>(tuple_.size());  // steps remaining after this one
    const std::int64_t min_step = space_.min_positive_units();
    for (Point y = 0; y < space_.size(); ++y) {
      if (normalized_ && y == cur) continue;
      std::int64_t u = space_.units(cur, y);
      if (u == QuasiMetricSpace::kInfiniteUnits) continue;
      std::int64_t rem = ell_ - acc - u;
      if (rem < 0) continue;
      if (normalized_ && left * min_step > rem) continue;
      if (left == 0) {
        if (rem != 0 || (last_ && y != *last_)) continue;
      } else if (last_) {
        std::int64_t to_last = space_.units(y, *last_);
        if (to_last == QuasiMetricSpace::kInfiniteUnits || to_last > rem) continue;
      }
      tuple_.push_back(y);
      if (left == 0) {
        visit_(tuple_);
      } else {
        extend(acc + u);
      }
      tuple_.pop_back();
    }
  }

  const QuasiMetricSpace& space_;
  int n_;
  std::int64_t ell_;
  bool normalized_;
  std::optional<Point> last_;
  const std::function<void(const Tuple&)>& visit_;
  Tuple tuple_;
};

}  // namespace

void for_each_trail(const QuasiMetricSpace& space, int n, std::int64_t ell_units, Variant variant,
                    std::optional<Point> first, std::optional<Point> last,
                    const std::function<void(const Tuple&)>& visit) {
  if (n < 0 || ell_units < 0) return;
  TrailWalker walker(space, n, ell_units, variant, last, visit);
  if (first) {
    walker.start(*first);
    return;
  }
  for (Point x0 = 0; x0 < space.size(); ++x0) walker.start(x0);
}

Integer count_trails(const QuasiMetricSpace& space, int n, const Rational& ell, Variant variant) {
  auto ell_units = space.to_units(ell);
  if (n < 0 || !ell_units || *ell_units < 0) return 0;
  const bool normalized = variant == Variant::normalized;
  const std::int64_t min_step = space.min_positive_units();
  using Layer = std::vector<std::unordered_map<std::int64_t, Integer>>;
  Layer layer(space.size());
  for (Point x = 0; x < space.size(); ++x) layer[x][0] = 1;
  for (int step = 0; step < n; ++step) {
    const int left = n - step - 1;
    Layer next(space.size());
    for (Point x = 0; x < space.size(); ++x) {
      for (const auto& [acc, count] : layer[x]) {
        for (Point y = 0; y < space.size(); ++y) {
          if (normalized && y == x) continue;
          std::int64_t u = space.units(x, y);
          if (u == QuasiMetricSpace::kInfiniteUnits) continue;
          std::int64_t rem = *ell_units - acc - u;
          if (rem < 0 || (normalized && left * min_step > rem)) continue;
          next[y][acc + u] += count;
        }
      }
    }
    layer = std::move(next);
  }
  Integer total = 0;
  for (const auto& per_point : layer) {
    auto it = per_point.find(*ell_units);
    if (it != per_point.end()) total += it->second;
  }
  return total;
}

GradedPiece enumerate_basis(const QuasiMetricSpace& space, int n, const Rational& ell, Variant variant,
                            std::size_t cap) {
  GradedPiece piece;
  piece.n = n;
  piece.ell = ell;
  piece.variant = variant;
  auto ell_units = space.to_units(ell);
  if (!ell_units) return piece;
  Integer count = count_trails(space, n, ell, variant);
  if (count > cap) {
    throw ResourceLimit("basis of MC_" + std::to_string(n) + "^" + format_rational(ell) + " has " + count.get_str() +
                        " elements, above the cap of " + std::to_string(cap));
  }
  piece.basis.reserve(count.get_ui());
  for_each_trail(space, n, *ell_units, variant, std::nullopt, std::nullopt,
                 [&](const Tuple& t) { piece.basis.push_back(t); });
  return piece;
}

std::vector<std::pair<Tuple, int>> faces(const QuasiMetricSpace& space, const Tuple& trail, Variant variant) {
  std::vector<std::pair<Tuple, int>> out;
  const std::size_t n = trail.empty() ? 0 : trail.size() - 1;
  if (n == 0) return out;
  auto face = [&](std::size_t i) {
    Tuple t;
    t.reserve(n);
    for (std::size_t k = 0; k <= n; ++k) {
      if (k != i) t.push_back(trail[k]);
    }
    out.emplace_back(std::move(t), i % 2 == 0 ? 1 : -1);
  };
  if (variant == Variant::normalized) {
    for (std::size_t i = 1; i < n; ++i) {
      if (space.between(trail[i - 1], trail[i], trail[i + 1])) face(i);
    }
    return out;
  }
  for (std::size_t i = 0; i <= n; ++i) {
    Point before = i == 0 ? trail[1] : trail[i - 1];
    Point after = i == n ? trail[n - 1] : trail[i + 1];
    if (space.between(before, trail[i], after)) face(i);
  }
  return out;
}

SparseIntMatrix boundary_matrix(const QuasiMetricSpace& space, const std::vector<Tuple>& source,
                                const std::vector<Tuple>& target, Variant variant) {
  SparseIntMatrix m(target.size(), source.size());
  for (std::size_t j = 0; j < source.size(); ++j) {
    for (const auto& [face, sign] : faces(space, source[j], variant)) {
      auto it = std::lower_bound(target.begin(), target.end(), face);
      if (it == target.end() || *it != face) {
        throw ConventionMismatch("boundary face outside the target basis");
      }
      m.add(static_cast<std::size_t>(it - target.begin()), j, sign);
    }
  }
  return m;
}

SparseIntMatrix boundary_matrix(const QuasiMetricSpace& space, int n, const Rational& ell, Variant variant,
                                std::size_t cap) {
  auto source = enumerate_basis(space, n, ell, variant, cap);
  auto target = enumerate_basis(space, n - 1, ell, variant, cap);
  return boundary_matrix(space, source.basis, target.basis, variant);
}

void Chain::add(const Tuple& trail, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms.try_emplace(trail, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms.erase(it);
  }
}

Chain& Chain::operator+=(const Chain& other) {
  for (const auto& [t, c] : other.terms) add(t, c);
  return *this;
}

Chain Chain::operator-() const {
  Chain out = *this;
  for (auto& [t, c] : out.terms) c = -c;
  return out;
}

std::vector<Integer> Chain::coordinates(const GradedPiece& piece) const {
  std::vector<Integer> out(piece.size());
  for (const auto& [t, c] : terms) {
    auto index = piece.index_of(t);
    if (!index) throw UnknownTrail("trail is not in the basis of the requested bidegree");
    out[*index] = c;
  }
  return out;
}

void check_chain(const QuasiMetricSpace& space, const Chain& chain, Variant variant) {
  for (const auto& [t, c] : chain.terms) {
    if (t.size() != static_cast<std::size_t>(chain.n) + 1) throw UnknownTrail("trail of the wrong degree");
    for (Point p : t) {
      if (p >= space.size()) throw UnknownTrail("trail point out of range");
    }
    auto len = space.length_units(t);
    if (!len) throw UnknownTrail("trail has an infinite step");
    if (space.from_units(*len) != chain.ell) throw UnknownTrail("trail of the wrong length");
    if (variant == Variant::normalized) {
      for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        if (t[i] == t[i + 1]) throw UnknownTrail("repeated consecutive point in a normalized trail");
      }
    }
  }
}

Chain boundary(const QuasiMetricSpace& space, const Chain& chain, Variant variant) {
  check_chain(space, chain, variant);
  Chain out;
  out.n = chain.n - 1;
  out.ell = chain.ell;
  for (const auto& [t, c] : chain.terms) {
    for (const auto& [face, sign] : faces(space, t, variant)) out.add(face, c * sign);
  }
  return out;
}

}  // namespace mh
