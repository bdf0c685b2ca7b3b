#include "mh/closedform.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "mh/error.hpp"
#include "mh/homology.hpp"
#include "mh/sigma.hpp"

namespace mh {

namespace {

Integer ipow(const Integer& base, long e) {
  Integer out = 1;
  for (long i = 0; i < e; ++i) out *= base;
  return out;
}

long mod(long a, long n) { return ((a % n) + n) % n; }

int parity_sign(long e) { return mod(e, 2) == 0 ? 1 : -1; }

bool is_unit_distance(const QuasiMetricSpace& space, Point x, Point y) {
  return space.finite(x, y) && Integer(space.units(x, y)) == space.scale();
}

std::vector<std::vector<Point>> unit_neighbours(const QuasiMetricSpace& space) {
  std::vector<std::vector<Point>> adj(space.size());
  for (Point x = 0; x < space.size(); ++x) {
    for (Point y = 0; y < space.size(); ++y) {
      if (is_unit_distance(space, x, y) && is_unit_distance(space, y, x)) adj[x].push_back(y);
    }
  }
  return adj;
}

}  // namespace

MooreParams moore_params(long D, long m) {
  if (D < 2 || m < 1) throw UsageError("Moore parameters need D >= 2 and m >= 1");
  MooreParams p{D, m, 1};
  for (long i = 0; i < m; ++i) p.N += D * ipow(D - 1, i);
  return p;
}

std::size_t girth(const QuasiMetricSpace& space) {
  auto adj = unit_neighbours(space);
  const std::size_t n = space.size();
  std::size_t best = 0;
  for (Point s = 0; s < n; ++s) {
    std::vector<long> dist(n, -1);
    std::vector<long> parent(n, -1);
    std::queue<Point> queue;
    dist[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      Point u = queue.front();
      queue.pop();
      for (Point w : adj[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push(w);
        } else if (static_cast<long>(w) != parent[u]) {
          auto len = static_cast<std::size_t>(dist[u] + dist[w] + 1);
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

std::optional<MooreParams> moore_detect(const QuasiMetricSpace& space) {
  const std::size_t n = space.size();
  if (n < 3 || !space.is_symmetric() || !space.all_finite() || space.scale() != 1) return std::nullopt;
  auto adj = unit_neighbours(space);
  // graph metric: every pair at distance k > 1 has a neighbour of x at distance k - 1 from y
  long diameter = 0;
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      long k = space.units(x, y);
      diameter = std::max(diameter, k);
      if (k <= 1) continue;
      bool ok = std::any_of(adj[x].begin(), adj[x].end(), [&](Point z) { return space.units(z, y) == k - 1; });
      if (!ok) return std::nullopt;
    }
  }
  const long D = static_cast<long>(adj[0].size());
  for (const auto& row : adj) {
    if (static_cast<long>(row.size()) != D) return std::nullopt;
  }
  if (diameter <= 1 || D < 2) return std::nullopt;
  if (girth(space) != static_cast<std::size_t>(2 * diameter + 1)) return std::nullopt;
  auto params = moore_params(D, diameter);
  if (params.N != static_cast<unsigned long>(n)) return std::nullopt;
  return params;
}

Integer binomial_convention(long s, long t) {
  if (s == -1 && t == -1) return 1;
  if (s >= 0 && t >= 0) {
    if (t > s) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(s), static_cast<unsigned long>(t));
    return out;
  }
  if (s < t) return 0;
  if (t < 0 && s >= 0) return 0;
  throw UsageError("binomial coefficient C(" + std::to_string(s) + ", " + std::to_string(t) + ") is not defined");
}

Integer moore_rank_recurrence(const MooreParams& params, int n, long ell) {
  const Integer factor = params.D * ipow(params.D - 1, params.m);
  std::map<std::pair<int, long>, Integer> memo;
  auto rec = [&](auto& self, int k, long l) -> Integer {
    if (k < 0 || l < 0) return 0;
    if (k == 0) return l == 0 ? params.N : Integer(0);
    if (k == 1) return l == 1 ? Integer(params.N * params.D) : Integer(0);
    auto key = std::make_pair(k, l);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer value = self(self, k - 1, l - 1) + factor * self(self, k - 2, l - params.m - 1);
    memo.emplace(key, value);
    return value;
  };
  return rec(rec, n, ell);
}

std::optional<std::array<long, 2>> moore_support(const MooreParams& params, int n, long ell) {
  if (n < 0 || ell < 0 || params.m < 2) return std::nullopt;
  long diff = ell - n;
  if (diff < 0 || diff % (params.m - 1) != 0) return std::nullopt;
  long i = diff / (params.m - 1);
  long j = n - 2 * i;
  if (j < 0) return std::nullopt;
  return std::array<long, 2>{i, j};
}

Integer moore_rank_closed(const MooreParams& params, int n, long ell) {
  auto ij = moore_support(params, n, ell);
  if (!ij) return 0;
  auto [i, j] = *ij;
  Integer factor = params.D * ipow(params.D - 1, params.m);
  return params.N * ipow(factor, i) *
         (binomial_convention(i + j - 1, i - 1) + params.D * binomial_convention(i + j - 1, i));
}

Integer moore_rank(const MooreParams& params, int n, long ell) {
  Integer a = moore_rank_recurrence(params, n, ell);
  Integer b = moore_rank_closed(params, n, ell);
  if (a != b) {
    throw ConventionMismatch("Moore rank at (" + std::to_string(n) + ", " + std::to_string(ell) +
                             "): recurrence " + a.get_str() + " but closed form " + b.get_str());
  }
  return a;
}

std::vector<Tuple> moore_cycles(const QuasiMetricSpace& space, const MooreParams& params, int n, long ell) {
  auto ij = moore_support(params, n, ell);
  if (!ij) {
    throw UsageError("(" + std::to_string(n) + ", " + std::to_string(ell) + ") is off the Moore support");
  }
  const long m_steps = (*ij)[0];
  const long m = params.m;
  std::vector<Tuple> out;
  Tuple t;
  auto extend = [&](auto& self, long used) -> void {
    const int steps = static_cast<int>(t.size()) - 1;
    if (steps == n) {
      if (used == m_steps) out.push_back(t);
      return;
    }
    if (used > m_steps) return;
    Point prev = t[t.size() - 2], cur = t.back();
    long last = space.units(prev, cur);
    for (Point w = 0; w < space.size(); ++w) {
      long d = space.units(cur, w);
      if (d == 1) {
        if (last == 1 && w != prev) continue;
      } else if (d == m) {
        if (last != 1 || space.between(cur, prev, w)) continue;
      } else {
        continue;
      }
      t.push_back(w);
      self(self, used + (d == m && m != 1 ? 1 : 0));
      t.pop_back();
    }
  };
  if (n == 0) {
    for (Point x = 0; x < space.size(); ++x) out.push_back(Tuple{x});
    return out;
  }
  for (Point x = 0; x < space.size(); ++x) {
    for (Point y = 0; y < space.size(); ++y) {
      if (space.units(x, y) != 1) continue;
      t = {x, y};
      extend(extend, 0);
    }
  }
  return out;
}

std::vector<Shuffle> shuffles(long p, long q) {
  if (p < 0 || q < 0) throw UsageError("shuffles need p, q >= 0");
  std::vector<Shuffle> out;
  Shuffle s{{0, 0}};
  auto rec = [&](auto& self) -> void {
    auto [a, b] = s.back();
    if (a == p && b == q) {
      out.push_back(s);
      return;
    }
    if (a < p) {
      s.push_back({a + 1, b});
      self(self);
      s.pop_back();
    }
    if (b < q) {
      s.push_back({a, b + 1});
      self(self);
      s.pop_back();
    }
  };
  rec(rec);
  return out;
}

int xi(long t) { return t >= 0 ? 1 : 0; }

long even_lambda(const std::array<long, 2>& step, long p, long q, long m) {
  if (step == std::array<long, 2>{1, 0}) return parity_sign(p + q + 1) * ((m - 2) * xi(q - p) + 1);
  if (step == std::array<long, 2>{0, 1}) return -even_lambda({1, 0}, q, p, m);
  throw UsageError("shuffle step must be (1,0) or (0,1)");
}

int even_mu(const std::array<long, 2>& step, long p, long q) {
  if (step == std::array<long, 2>{1, 0}) return parity_sign((p + q + 1) * xi(q - p));
  if (step == std::array<long, 2>{0, 1}) return parity_sign((p + q) * xi(p - q));
  throw UsageError("shuffle step must be (1,0) or (0,1)");
}

long even_nu(const Shuffle& s, long m) {
  const long n = static_cast<long>(s.size()) - 1;
  long count = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::array<long, 2> step{s[i][0] - s[i - 1][0], s[i][1] - s[i - 1][1]};
    if (even_lambda(step, s[i][0], s[i][1], m) == -(m - 1)) ++count;
  }
  return n * (n + 1) / 2 + count;
}

EvenCycle::EvenCycle(const QuasiMetricSpace& space) : order_(even_cycle_order(space)), position_(order_.size()) {
  for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i]] = i;
}

Point EvenCycle::rotate(Point x, long k) const {
  long n = static_cast<long>(order_.size());
  return order_[static_cast<std::size_t>(mod(static_cast<long>(position_[x]) + k, n))];
}

Tuple EvenCycle::phi(Point x, const Shuffle& s) const {
  Tuple t{x};
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::array<long, 2> step{s[i][0] - s[i - 1][0], s[i][1] - s[i - 1][1]};
    t.push_back(rotate(t.back(), even_lambda(step, s[i][0], s[i][1], m())));
  }
  return t;
}

Chain even_theta(const QuasiMetricSpace& space, long p, long q, Point x) {
  EvenCycle cycle(space);
  if (x >= space.size()) throw UsageError("basepoint out of range");
  Chain c;
  c.n = static_cast<int>(p + q);
  c.ell = Rational(cycle.m() * std::min(p, q) + std::abs(p - q));
  for (const auto& s : shuffles(p, q)) c.add(cycle.phi(x, s), parity_sign(even_nu(s, cycle.m())));
  return c;
}

namespace {

std::optional<std::array<long, 2>> even_support(long N, long n, long ell) {
  if (N < 6 || N % 2 != 0) throw UsageError("even cycle needs an even N >= 6");
  const long m = N / 2;
  if (n < 0 || ell < 0) return std::nullopt;
  long diff = ell - n;
  if (diff < 0 || diff % (m - 2) != 0) return std::nullopt;
  long i = diff / (m - 2);
  long j = n - 2 * i;
  if (j < 0) return std::nullopt;
  return std::array<long, 2>{i, j};
}

}  // namespace

Integer even_rank(long N, long n, long ell) {
  auto ij = even_support(N, n, ell);
  if (!ij) return 0;
  return (*ij)[1] == 0 ? Integer(N) : Integer(2 * N);
}

std::vector<Chain> even_basis_cycles(const QuasiMetricSpace& space, long n, long ell) {
  auto ij = even_support(static_cast<long>(space.size()), n, ell);
  std::vector<Chain> out;
  if (!ij) return out;
  auto [i, j] = *ij;
  for (Point x = 0; x < space.size(); ++x) {
    if (j == 0) {
      out.push_back(even_theta(space, i, i, x));
    } else {
      out.push_back(even_theta(space, i + j, i, x));
      out.push_back(even_theta(space, i, i + j, x));
    }
  }
  return out;
}

std::vector<Rational> RationalFunction::series(int order) const {
  if (denominator.empty() || denominator[0] == 0) throw std::domain_error("denominator vanishes at q = 0");
  std::vector<Rational> c;
  for (int k = 0; k <= order; ++k) {
    Rational acc = k < static_cast<int>(numerator.size()) ? Rational(numerator[k]) : Rational(0);
    for (int i = 1; i <= k && i < static_cast<int>(denominator.size()); ++i) acc -= Rational(denominator[i]) * c[k - i];
    acc /= Rational(denominator[0]);
    acc.canonicalize();
    c.push_back(acc);
  }
  return c;
}

namespace {

std::string polynomial_text(const std::vector<Integer>& coefficients) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    const Integer& c = coefficients[k];
    if (c == 0) continue;
    if (c < 0) {
      out << "-";
    } else if (!first) {
      out << "+";
    }
    Integer a = abs(c);
    if (k == 0 || a != 1) out << a.get_str();
    if (k >= 1) out << "q";
    if (k >= 2) out << "^" << k;
    first = false;
  }
  return first ? "0" : out.str();
}

}  // namespace

std::string RationalFunction::to_string() const {
  std::size_t terms = std::count_if(numerator.begin(), numerator.end(), [](const Integer& c) { return c != 0; });
  std::string num = polynomial_text(numerator);
  if (terms > 1) num = "(" + num + ")";
  return num + "/(" + polynomial_text(denominator) + ")";
}

RationalFunction magnitude_distance_regular(const QuasiMetricSpace& space) {
  auto regularity = space.distance_regularity();
  if (!regularity.regular) throw NotDistanceRegular("the number of points at distance l depends on the point");
  RationalFunction f;
  f.numerator = {Integer(static_cast<unsigned long>(space.size()))};
  for (const auto& [ell, count] : regularity.counts) {
    if (ell.get_den() != 1 || ell < 0) throw HypothesisError("magnitude function needs integer distances");
    std::size_t k = ell.get_num().get_ui();
    if (f.denominator.size() <= k) f.denominator.resize(k + 1);
    f.denominator[k] += static_cast<unsigned long>(count);
  }
  return f;
}

std::vector<Integer> magnitude_series(const QuasiMetricSpace& space, int order) {
  std::vector<Integer> out;
  for (int ell = 0; ell <= order; ++ell) {
    Integer total = 0;
    auto units = space.to_units(Rational(ell));
    std::int64_t max_n = 0;
    if (units && space.min_positive_units() > 0) max_n = *units / space.min_positive_units();
    for (int n = 0; n <= max_n; ++n) {
      Integer c = count_trails(space, n, Rational(ell), Variant::normalized);
      total += n % 2 == 0 ? c : Integer(-c);
    }
    out.push_back(total);
  }
  return out;
}

Report euler_crosscheck(const QuasiMetricSpace& space, int max_ell, std::size_t cap) {
  std::vector<Rational> series;
  std::string source;
  bool regular = false;
  try {
    regular = space.is_symmetric() && space.all_finite() && space.distance_regularity().regular;
  } catch (const HypothesisError&) {
    regular = false;
  }
  if (regular) {
    series = magnitude_distance_regular(space).series(max_ell);
    source = "distance-regular formula";
  } else {
    for (const auto& c : magnitude_series(space, max_ell)) series.emplace_back(c);
    source = "trail counts";
  }
  Report report;
  for (int ell = 0; ell <= max_ell; ++ell) {
    auto units = space.to_units(Rational(ell));
    std::int64_t max_n = 0;
    if (units && space.min_positive_units() > 0) max_n = *units / space.min_positive_units();
    Integer alternating = 0;
    for (int n = 0; n <= max_n; ++n) {
      auto h = homology(space, n, Rational(ell), Variant::normalized, cap);
      Integer r = static_cast<unsigned long>(h.rank);
      alternating += n % 2 == 0 ? r : Integer(-r);
    }
    CheckResult r;
    r.check = "euler";
    r.params = {{"ell", ell}, {"series", source}};
    r.pass = series[ell] == Rational(alternating);
    r.witness = "series " + format_rational(series[ell]) + ", alternating rank sum " + alternating.get_str();
    report.push_back(std::move(r));
  }
  return report;
}

}  // namespace mh
