#include "mh/resolution.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "mh/closedform.hpp"
#include "mh/error.hpp"
#include "mh/families.hpp"
#include "mh/homology.hpp"
#include "mh/lattice.hpp"
#include "mh/theta.hpp"

namespace mh {

namespace {

using Combination = std::map<Tuple, Integer>;

void accumulate(Combination& c, const Tuple& t, const Integer& value) {
  if (value == 0) return;
  auto [it, inserted] = c.emplace(t, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) c.erase(it);
  }
}

std::string tuple_text(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

std::size_t row_of(const std::vector<Tuple>& rows, const Tuple& t) {
  auto it = std::lower_bound(rows.begin(), rows.end(), t);
  if (it == rows.end() || *it != t) throw ConventionMismatch("face " + tuple_text(t) + " is not a generator");
  return static_cast<std::size_t>(it - rows.begin());
}

/// Attaches the bar differential to stages whose generators are already set.
void fill_differentials(const QuasiMetricSpace& space, Resolution& stages) {
  for (auto& stage : stages) {
    std::size_t rows = stage.degree == 0 ? space.size() : stages[stage.degree - 1].generators.size();
    stage.differential = SparseIntMatrix(rows, stage.generators.size());
    for (std::size_t col = 0; col < stage.generators.size(); ++col) {
      for (const auto& [face, sign] : bar_faces(space, stage.generators[col])) {
        std::size_t r = stage.degree == 0 ? face[0] : row_of(stages[stage.degree - 1].generators, face);
        stage.differential.add(r, col, sign);
      }
    }
  }
}

SparseIntMatrix sparse(const IntMatrix& m) { return SparseIntMatrix::from_dense(m); }

CheckResult result(std::string check, nlohmann::json params, bool pass, std::optional<std::string> witness = {}) {
  return CheckResult{std::move(check), std::move(params), pass, std::move(witness)};
}

}  // namespace

std::vector<std::pair<Tuple, int>> bar_faces(const QuasiMetricSpace& space, const Tuple& tuple) {
  std::vector<std::pair<Tuple, int>> out;
  if (tuple.size() < 2) return out;
  const std::size_t n = tuple.size() - 2;
  for (std::size_t i = 0; i <= n; ++i) {
    Point before = i == 0 ? tuple[1] : tuple[i - 1];
    if (!space.between(before, tuple[i], tuple[i + 1])) continue;
    Tuple face;
    face.reserve(tuple.size() - 1);
    for (std::size_t k = 0; k < tuple.size(); ++k) {
      if (k != i) face.push_back(tuple[k]);
    }
    out.emplace_back(std::move(face), i % 2 == 0 ? 1 : -1);
  }
  return out;
}

Resolution bar_resolution(const QuasiMetricSpace& space, int max_degree, std::size_t cap) {
  Resolution stages;
  for (int k = 0; k <= max_degree; ++k) {
    ResolutionStage stage;
    stage.degree = k;
    Tuple t;
    std::function<void()> extend = [&] {
      if (t.size() == static_cast<std::size_t>(k) + 2) {
        if (stage.generators.size() >= cap) {
          throw ResourceLimit("bar resolution stage " + std::to_string(k) + " exceeds " + std::to_string(cap));
        }
        stage.generators.push_back(t);
        return;
      }
      for (Point w = 0; w < space.size(); ++w) {
        if (!t.empty() && !space.finite(t.back(), w)) continue;
        t.push_back(w);
        extend();
        t.pop_back();
      }
    };
    extend();
    stages.push_back(std::move(stage));
  }
  fill_differentials(space, stages);
  return stages;
}

Resolution minimal_resolution_geodetic(const QuasiMetricSpace& space, int max_degree) {
  ThetaEnumerator enumerator(space);
  Resolution stages;
  for (int k = 0; k <= max_degree; ++k) {
    std::vector<Tuple> theta;
    if (k == 0) {
      for (Point x = 0; x < space.size(); ++x) theta.push_back({x});
    } else {
      Tuple t;
      std::function<void()> extend = [&] {
        if (t.size() == static_cast<std::size_t>(k) + 1) {
          theta.push_back(t);
          return;
        }
        const std::vector<Point> targets = enumerator.extensions(t[t.size() - 2], t.back());
        for (Point w : targets) {
          t.push_back(w);
          extend();
          t.pop_back();
        }
      };
      for (const auto& [x, y] : enumerator.seeds()) {
        t = {x, y};
        extend();
      }
    }
    ResolutionStage stage;
    stage.degree = k;
    for (const auto& t : theta) {
      for (Point w = 0; w < space.size(); ++w) {
        if (!space.finite(t.back(), w)) continue;
        Tuple g = t;
        g.push_back(w);
        stage.generators.push_back(std::move(g));
      }
    }
    std::sort(stage.generators.begin(), stage.generators.end());
    stages.push_back(std::move(stage));
  }
  fill_differentials(space, stages);
  return stages;
}

Report certify_exactness(const Resolution& resolution, std::size_t points) {
  Report report;
  for (std::size_t k = 1; k < resolution.size(); ++k) {
    bool zero = (resolution[k - 1].differential * resolution[k].differential).is_zero();
    report.push_back(result("composite zero", {{"degree", k}}, zero));
  }
  const long top = static_cast<long>(resolution.size()) - 1;
  for (long k = -1; k < top; ++k) {
    std::size_t dim = k < 0 ? points : resolution[k].generators.size();
    SparseIntMatrix out = k < 0 ? SparseIntMatrix() : resolution[k].differential;
    const SparseIntMatrix& in = resolution[k + 1].differential;
    auto h = complex_homology(out, in, dim);
    std::string witness = "rank " + std::to_string(h.rank);
    for (const auto& t : h.torsion) witness += ", Z/" + t.get_str();
    report.push_back(result("homology zero", {{"degree", k}}, h.is_zero(), witness));
  }
  return report;
}

bool verify_tensored_zero(const Resolution& resolution) {
  for (std::size_t k = 1; k < resolution.size(); ++k) {
    const auto& stage = resolution[k];
    const auto& targets = resolution[k - 1].generators;
    for (const auto& e : stage.differential.entries()) {
      const Tuple& g = stage.generators[e.col];
      if (g[g.size() - 1] != g[g.size() - 2]) continue;
      const Tuple& t = targets[e.row];
      if (t[t.size() - 1] == t[t.size() - 2]) return false;
    }
  }
  return true;
}

Resolution corrupt_differential(Resolution resolution, int degree) {
  auto& m = resolution.at(static_cast<std::size_t>(degree)).differential;
  auto entries = m.entries();
  if (entries.empty()) throw UsageError("differential has no entries to corrupt");
  std::map<std::size_t, std::size_t> per_column;
  for (const auto& e : entries) ++per_column[e.col];
  for (const auto& e : entries) {
    if (per_column[e.col] >= 2) {
      m.set(e.row, e.col, -e.value);
      return resolution;
    }
  }
  m.set(entries[0].row, entries[0].col, 2 * entries[0].value);
  return resolution;
}

EvenDoubleComplex::EvenDoubleComplex(long N, bool flip_horizontal_sign) : N_(N), flip_(flip_horizontal_sign) {
  if (N < 6 || N % 2 != 0) throw UsageError("even cycle needs an even N >= 6");
  space_ = std::make_unique<QuasiMetricSpace>(family::cycle(static_cast<std::size_t>(N)));
  algebra_ = std::make_unique<SigmaAlgebra>(*space_);
  auto [a, b] = ab_elements(*algebra_);
  a_ = algebra_->left_mult_matrix(a);
  b_ = algebra_->left_mult_matrix(b);
}

long EvenDoubleComplex::h_exponent(long p, long q) const { return even_lambda({1, 0}, p, q, m()); }
long EvenDoubleComplex::v_exponent(long p, long q) const { return even_lambda({0, 1}, p, q, m()); }

const IntMatrix& EvenDoubleComplex::power(long k) const {
  auto it = powers_.find(k);
  if (it != powers_.end()) return it->second;
  IntMatrix out = IntMatrix::identity(module_size());
  const IntMatrix& base = k > 0 ? a_ : b_;
  for (long i = 0; i < std::abs(k); ++i) out = base * out;
  return powers_.emplace(k, std::move(out)).first->second;
}

IntMatrix EvenDoubleComplex::horizontal(long p, long q) const {
  if (p <= 0 || q < 0) return IntMatrix(module_size(), module_size());
  int sign = even_mu({1, 0}, p, q) * (flip_ ? -1 : 1);
  return power(h_exponent(p, q)).scaled(sign);
}

IntMatrix EvenDoubleComplex::vertical(long p, long q) const {
  if (q <= 0 || p < 0) return IntMatrix(module_size(), module_size());
  return power(v_exponent(p, q)).scaled(even_mu({0, 1}, p, q));
}

Report EvenDoubleComplex::check_anticommutation(long bound) const {
  std::optional<std::string> hh, vv, hv;
  for (long p = 0; p <= bound; ++p) {
    for (long q = 0; q <= bound; ++q) {
      std::string at = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
      if (!hh && !(horizontal(p - 1, q) * horizontal(p, q)).is_zero()) hh = at;
      if (!vv && !(vertical(p, q - 1) * vertical(p, q)).is_zero()) vv = at;
      if (!hv && !(horizontal(p, q - 1) * vertical(p, q) + vertical(p - 1, q) * horizontal(p, q)).is_zero()) hv = at;
    }
  }
  nlohmann::json params{{"N", N_}, {"bound", bound}};
  return {result("dh dh = 0", params, !hh, hh), result("dv dv = 0", params, !vv, vv),
          result("dh dv + dv dh = 0", params, !hv, hv)};
}

IntMatrix EvenDoubleComplex::total_differential(long n) const {
  const std::size_t s = module_size();
  IntMatrix out(static_cast<std::size_t>(n) * s, static_cast<std::size_t>(n + 1) * s);
  auto place = [&](long row_block, long col_block, const IntMatrix& m) {
    for (std::size_t r = 0; r < s; ++r) {
      for (std::size_t c = 0; c < s; ++c) out(row_block * s + r, col_block * s + c) += m(r, c);
    }
  };
  for (long p = 0; p <= n; ++p) {
    long q = n - p;
    if (p > 0) place(p - 1, p, horizontal(p, q));
    if (q > 0) place(p, p, vertical(p, q));
  }
  return out;
}

Report verify_mult_relations(long N, bool swap_b_for_a) {
  EvenDoubleComplex dc(N);
  const long m = dc.m();
  const IntMatrix& la = dc.power(1);
  const IntMatrix& lb = swap_b_for_a ? dc.power(1) : dc.power(-1);
  auto pw = [&](const IntMatrix& base, long k) {
    IntMatrix out = IntMatrix::identity(base.rows());
    for (long i = 0; i < k; ++i) out = base * out;
    return out;
  };
  const IntMatrix la_m = pw(la, m), lb_m = pw(lb, m), la_m1 = pw(la, m - 1), lb_m1 = pw(lb, m - 1);
  const IntMatrix eps = dc.algebra().augmentation_matrix();
  nlohmann::json params{{"N", N}};
  if (swap_b_for_a) params["b"] = "a";
  Report report;

  bool item1 = (la * lb).is_zero() && (lb * la).is_zero() && la_m == lb_m;
  report.push_back(result("mult_rel (1)", params, item1));

  bool item2 = lattice_equal(kernel_basis(la), lb) && lattice_equal(kernel_basis(lb), la);
  report.push_back(result("mult_rel (2)", params, item2));

  std::vector<IntMatrix> same{lb_m, lattice_intersection(la_m1, lb), lattice_intersection(la, lb_m1),
                              lattice_intersection(la, lb)};
  bool item3 = std::all_of(same.begin(), same.end(), [&](const IntMatrix& x) { return lattice_equal(la_m, x); });
  report.push_back(result("mult_rel (3)", params, item3));

  bool item4 = lattice_equal(kernel_basis(eps), lattice_sum(la, lb));
  report.push_back(result("mult_rel (4)", params, item4));

  IntMatrix ka = kernel_basis(la_m1), kb = kernel_basis(lb_m1);
  bool item5 = lattice_equal(lattice_intersection(ka, kb), lattice_sum(la * kb, lb * ka));
  report.push_back(result("mult_rel (5)", params, item5));
  return report;
}

Report verify_total_complex(long N, long max_total_degree) {
  EvenDoubleComplex dc(N);
  const IntMatrix eps = dc.algebra().augmentation_matrix();
  Report report;
  nlohmann::json base{{"N", N}};
  auto anticommute = dc.check_anticommutation(max_total_degree);
  append(report, anticommute);

  std::vector<IntMatrix> d{eps};  // d[n]: tot_n -> tot_{n-1}, d[0] = augmentation
  for (long n = 1; n <= max_total_degree; ++n) d.push_back(dc.total_differential(n));
  for (long n = 1; n <= max_total_degree; ++n) {
    auto params = base;
    params["degree"] = n;
    report.push_back(result("composite zero", params, (d[n - 1] * d[n]).is_zero()));
  }
  for (long k = -1; k < max_total_degree; ++k) {
    std::size_t dim = k < 0 ? static_cast<std::size_t>(N) : static_cast<std::size_t>(k + 1) * dc.module_size();
    SparseIntMatrix out = k < 0 ? SparseIntMatrix() : sparse(d[k]);
    auto h = complex_homology(out, sparse(d[k + 1]), dim);
    std::string witness = "rank " + std::to_string(h.rank);
    for (const auto& t : h.torsion) witness += ", Z/" + t.get_str();
    auto params = base;
    params["degree"] = k;
    report.push_back(result("homology zero", params, h.is_zero(), witness));
  }

  std::optional<std::string> outside;
  const auto unit = dc.algebra().unit();
  for (long p = 0; p <= max_total_degree && !outside; ++p) {
    for (long q = 0; p + q <= max_total_degree && !outside; ++q) {
      const std::array<IntMatrix, 2> maps{dc.horizontal(p, q), dc.vertical(p, q)};
      for (const IntMatrix& m : maps) {
        SigmaAlgebra::Element image(dc.module_size());
        for (std::size_t r = 0; r < m.rows(); ++r) {
          for (std::size_t c = 0; c < m.cols(); ++c) image[r] += m(r, c) * unit[c];
        }
        if (!dc.algebra().in_radical(image)) {
          outside = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
        }
      }
    }
  }
  auto params = base;
  params["max_degree"] = max_total_degree;
  report.push_back(result("differential in radical", params, !outside, outside));
  return report;
}

Report verify_homolk_hypotheses(long N, long bound) {
  EvenDoubleComplex dc(N);
  std::optional<std::string> rows, cols, meet;
  for (long p = 0; p <= bound; ++p) {
    for (long q = 0; p + q <= bound; ++q) {
      std::string at = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
      if (p > q && !rows && !lattice_equal(kernel_basis(dc.horizontal(p, q)), dc.horizontal(p + 1, q))) rows = at;
      if (q > p && !cols && !lattice_equal(kernel_basis(dc.vertical(p, q)), dc.vertical(p, q + 1))) cols = at;
      if (!meet) {
        IntMatrix h = dc.horizontal(p + 1, q), v = dc.vertical(p, q + 1);
        if (!lattice_equal(lattice_intersection(h, v), h * dc.vertical(p + 1, q + 1))) meet = at;
      }
    }
  }
  nlohmann::json params{{"N", N}, {"bound", bound}};
  return {result("ker dh = im dh for p > q", params, !rows, rows),
          result("ker dv = im dv for q > p", params, !cols, cols),
          result("im dh cap im dv = im dh dv", params, !meet, meet)};
}

Report verify_chain_map_f(long N, long max_degree, ChainMapOptions options) {
  EvenDoubleComplex dc(N, options.flip_mu);
  EvenCycle cycle(dc.space());
  const auto& space = dc.space();
  const auto& pairs = dc.algebra().pairs();

  // f(v_pq) grouped by the last point of phi(x, s)
  std::map<std::pair<long, long>, std::vector<std::vector<std::pair<Tuple, int>>>> f_terms;
  auto terms = [&](long p, long q) -> const std::vector<std::vector<std::pair<Tuple, int>>>& {
    auto key = std::make_pair(p, q);
    auto it = f_terms.find(key);
    if (it != f_terms.end()) return it->second;
    std::vector<std::vector<std::pair<Tuple, int>>> by_end(space.size());
    for (Point x = 0; x < space.size(); ++x) {
      for (const auto& s : shuffles(p, q)) {
        Tuple t = cycle.phi(x, s);
        int sign = options.drop_nu ? 1 : (even_nu(s, cycle.m()) % 2 == 0 ? 1 : -1);
        by_end[t.back()].emplace_back(std::move(t), sign);
      }
    }
    return f_terms.emplace(key, std::move(by_end)).first->second;
  };
  // f(v_pq e_yz)
  auto f = [&](long p, long q, Point y, Point z, const Integer& coefficient, Combination& into) {
    for (const auto& [t, sign] : terms(p, q)[y]) {
      Tuple g = t;
      g.push_back(z);
      accumulate(into, g, coefficient * sign);
    }
  };

  Report report;
  for (long n = 0; n <= max_degree; ++n) {
    std::optional<std::string> failure;
    for (long p = 0; p <= n && !failure; ++p) {
      const long q = n - p;
      const IntMatrix h = dc.horizontal(p, q), v = dc.vertical(p, q);
      for (std::size_t col = 0; col < pairs.size() && !failure; ++col) {
        auto [y, z] = pairs[col];
        Combination image;
        f(p, q, y, z, 1, image);
        Combination lhs;
        for (const auto& [g, c] : image) {
          for (const auto& [face, sign] : bar_faces(space, g)) accumulate(lhs, face, c * sign);
        }
        Combination rhs;
        if (n == 0) {
          if (y == z) accumulate(rhs, Tuple{z}, 1);
        } else {
          for (std::size_t r = 0; r < pairs.size(); ++r) {
            if (p > 0 && h(r, col) != 0) f(p - 1, q, pairs[r].first, pairs[r].second, h(r, col), rhs);
            if (q > 0 && v(r, col) != 0) f(p, q - 1, pairs[r].first, pairs[r].second, v(r, col), rhs);
          }
        }
        if (lhs != rhs) {
          failure = "v_" + std::to_string(p) + std::to_string(q) + " e_" + std::to_string(y) + std::to_string(z);
        }
      }
    }
    nlohmann::json params{{"N", N}, {"degree", n}};
    if (options.drop_nu) params["nu"] = "dropped";
    if (options.flip_mu) params["mu"] = "flipped";
    report.push_back(result("d f = f d", params, !failure, failure));
  }
  return report;
}

}  // namespace mh
