// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "mh/closedform.hpp"
#include "mh/families.hpp"
#include "mh/homology.hpp"
#include "mh/resolution.hpp"
#include "mh/suites.hpp"
#include "mh/theta.hpp"
#include "support.hpp"

using namespace mh;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  void report(const Report& r, const std::string& label) {
    for (const auto& c : r) {
      if (!c.pass) {
        fail(label + ": " + c.check + " " + c.params.dump() + " " + c.witness.value_or(""));
        return;
      }
    }
  }
};

std::string str(const Integer& v) { return v.get_str(); }

std::vector<QuasiMetricSpace> geodetic_corpus() {
  auto out = testing::random_geodetic_graphs(30, 9, 2024);
  for (auto& g : testing::random_chorded_trees(30, 9, 4048)) out.push_back(std::move(g));
  for (std::size_t n = 3; n <= 6; ++n) out.push_back(family::complete(n));
  for (std::size_t n = 3; n <= 7; ++n) out.push_back(family::path(n));
  for (std::size_t n = 4; n <= 6; ++n) out.push_back(family::star(n));
  out.push_back(family::cycle(5));
  out.push_back(family::cycle(7));
  return out;
}

const std::vector<QuasiMetricSpace>& corpus() {
  static const auto spaces = geodetic_corpus();
  return spaces;
}

long diameter(const QuasiMetricSpace& space) {
  long out = 0;
  for (Point x = 0; x < space.size(); ++x)
    for (Point y = 0; y < space.size(); ++y) out = std::max(out, space.distance(x, y).value().get_num().get_si());
  return out;
}

Outcome odd_cycle_table() {
  Outcome o;
  auto c5 = family::cycle(5);
  auto params = moore_detect(c5);
  o.expect(params == MooreParams{2, 2, 5}, "C5 not detected as (2,2,5)");
  if (!params) return o;
  struct Entry {
    int n;
    long ell;
    long rank;
  };
  const std::vector<Entry> table{{0, 0, 5},  {1, 1, 10}, {2, 2, 10}, {2, 3, 10}, {3, 3, 10},
                                 {3, 4, 30}, {4, 4, 10}, {4, 5, 50}, {4, 6, 20}};
  for (int n = 0; n <= 4; ++n) {
    for (long ell = 0; ell <= 6; ++ell) {
      long expected = 0;
      for (const auto& e : table)
        if (e.n == n && e.ell == ell) expected = e.rank;
      auto theta = theta_count(c5, n, Rational(ell));
      auto moore = moore_rank(*params, n, ell);
      auto h = homology(c5, n, Rational(ell));
      std::string at = "(" + std::to_string(n) + "," + std::to_string(ell) + ")";
      o.expect(theta == expected, at + " Theta " + str(theta));
      o.expect(moore == expected, at + " recurrence " + str(moore));
      o.expect(h.rank == static_cast<std::size_t>(expected) && h.torsion.empty(), at + " SNF rank " + std::to_string(h.rank));
    }
  }
  if (o.pass) o.detail = "9 nonzero entries and zeros for n<=4, l<=6 agree three ways";
  return o;
}

Outcome petersen() {
  Outcome o;
  auto p = family::petersen();
  auto params = moore_detect(p);
  o.expect(params == MooreParams{3, 2, 10}, "Petersen not detected as (3,2,10)");
  if (!params) return o;
  for (auto [n, ell, rank] : std::vector<std::tuple<int, long, long>>{{1, 1, 30}, {2, 3, 120}, {3, 4, 480}}) {
    std::string at = "(" + std::to_string(n) + "," + std::to_string(ell) + ")";
    o.expect(moore_rank_recurrence(*params, n, ell) == rank, at + " recurrence");
    o.expect(moore_rank_closed(*params, n, ell) == rank, at + " closed form");
    o.expect(theta_count(p, n, Rational(ell)) == rank, at + " Theta count");
  }
  auto h = homology(p, 2, Rational(3));
  o.expect(h.rank == 120 && h.torsion.empty(), "SNF at (2,3) gives rank " + std::to_string(h.rank));
  if (o.pass) o.detail = "R(1,1)=30, R(2,3)=120, R(3,4)=480; SNF (2,3) rank 120, torsion-free";
  return o;
}

Outcome hoffman_singleton() {
  Outcome o;
  auto hs = family::hoffman_singleton();
  o.expect(hs.size() == 50, "vertex count " + std::to_string(hs.size()));
  for (Point x = 0; x < hs.size(); ++x) {
    std::size_t degree = 0;
    for (Point y = 0; y < hs.size(); ++y) degree += hs.distance(x, y) == ExtDist(1);
    o.expect(degree == 7, "vertex " + std::to_string(x) + " has degree " + std::to_string(degree));
  }
  o.expect(girth(hs) == 5, "girth " + std::to_string(girth(hs)));
  o.expect(diameter(hs) == 2, "diameter " + std::to_string(diameter(hs)));
  auto formula = moore_rank(moore_params(7, 2), 2, 3);
  auto theta = theta_count(hs, 2, Rational(3));
  o.expect(formula == 12600, "formula gives " + str(formula));
  o.expect(theta == 12600, "Theta count " + str(theta));
  if (o.pass) o.detail = "50 vertices, 7-regular, girth 5, diameter 2; R(2,3)=12600=|Theta|";
  return o;
}

Outcome missing_moore() {
  Outcome o;
  auto params = moore_params(57, 2);
  o.expect(params.N == 3250, "N = " + str(params.N));
  Integer expected = Integer(3250) * 178752;
  o.expect(moore_rank_recurrence(params, 2, 3) == expected, "recurrence R(2,3)");
  o.expect(moore_rank_closed(params, 2, 3) == expected, "closed form R(2,3)");
  o.expect(moore_rank(params, 1, 1) == 185250, "R(1,1)");
  // distance distribution of a Moore graph of diameter 2: 1, D, N - 1 - D
  RationalFunction mag{{params.N}, {1, params.D, params.N - 1 - params.D}};
  o.expect(mag.to_string() == "3250/(1+57q+3192q^2)", "magnitude " + mag.to_string());
  if (o.pass) o.detail = "R(2,3)=" + str(expected) + ", Mag=" + mag.to_string();
  return o;
}

Outcome even_cycles() {
  Outcome o;
  for (long N : {6L, 8L}) o.report(even_cycle_suite(N, 4), "C" + std::to_string(N));
  if (o.pass) o.detail = "C6, C8: theta_pq cycles for p+q<=4, bases independent and spanning, ranks N/2N/0";
  return o;
}

Outcome diagonality() {
  Outcome o;
  std::size_t diagonal = 0, cut = 0;
  for (const auto& space : corpus()) {
    auto r = diagonality_check(space, 4, 6);
    if (!r.pass) o.fail(r.witness.value_or("") + " on " + std::to_string(space.size()) + " points");
    (is_diagonal(space).diagonal ? diagonal : cut)++;
  }
  o.expect(diagonal > 0 && cut > 0, "corpus lacks one side of the criterion");
  if (o.pass)
    o.detail = std::to_string(corpus().size()) + " spaces (" + std::to_string(diagonal) + " diagonal, " +
               std::to_string(cut) + " with a 4-cut), zero counterexamples";
  return o;
}

Outcome theta_oracle() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& space : corpus()) {
    auto r = theta_vs_snf(space, 4, Rational(6), 20000);
    checked += r.size() - 1;
    o.report(r, std::to_string(space.size()) + " points");
  }
  if (o.pass) o.detail = std::to_string(checked) + " bidegrees, zero failures";
  return o;
}

Outcome thin_frames_check() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& space : corpus()) {
    auto r = thin_frame_agreement(space, 4, Rational(6));
    checked += r.size();
    o.report(r, std::to_string(space.size()) + " points");
  }
  auto split = thin_frame_disagreement(family::cycle(5), 4, Rational(6));
  o.expect(split.has_value(), "no disagreement on C5 at l >= m_X");
  if (o.pass)
    o.detail = std::to_string(checked) + " bidegrees below m_X agree; C5 differs at (" + std::to_string(split->first) +
               "," + format_rational(split->second) + ")";
  return o;
}

Outcome resolutions() {
  Outcome o;
  for (const auto& [name, space] : std::vector<std::pair<std::string, QuasiMetricSpace>>{
           {"C5", family::cycle(5)}, {"C7", family::cycle(7)}, {"K4", family::complete(4)}, {"P5", family::path(5)}}) {
    auto res = minimal_resolution_geodetic(space, 5);
    o.report(certify_exactness(res, space.size()), name);
    o.expect(verify_tensored_zero(res), name + " tensored differential nonzero");
    o.expect(!all_pass(certify_exactness(corrupt_differential(res, 2), space.size())),
             name + " corrupted differential not detected");
  }
  auto k2 = family::complete(2);
  auto bar = bar_resolution(k2, 4);
  o.report(certify_exactness(bar, 2), "bar K2");
  o.expect(!verify_tensored_zero(bar), "bar resolution passes the tensored-zero check");
  o.expect(!all_pass(certify_exactness(corrupt_differential(bar, 2), 2)), "flipped sign in bar K2 not detected");

  for (long N : {6L, 8L, 10L}) o.report(verify_mult_relations(N), "mult relations N=" + std::to_string(N));
  o.expect(!all_pass(verify_mult_relations(6, true)), "mult relations with b replaced by a pass");
  o.report(verify_total_complex(6, 4), "tot N=6");
  o.report(verify_chain_map_f(6, 3), "f N=6");

  auto dropped = verify_chain_map_f(6, 3, {true, false});
  bool fails_at_2 = false;
  for (const auto& c : dropped)
    if (c.params.value("degree", -1) == 2 && !c.pass) fails_at_2 = true;
  o.expect(fails_at_2, "nu = 0 not detected at degree 2");
  o.expect(!all_pass(verify_chain_map_f(6, 3, {false, true})), "flipped mu not detected");
  if (o.pass)
    o.detail = "minimal resolutions exact to degree 5, tensored zero; bar control, mult relations N=6,8,10, tot, f "
               "and negative controls";
  return o;
}

Outcome euler() {
  Outcome o;
  for (const auto& [name, space, lmax] : std::vector<std::tuple<std::string, QuasiMetricSpace, int>>{
           {"C5", family::cycle(5), 5},
           {"K2", family::complete(2), 6},
           {"K3", family::complete(3), 4},
           {"Petersen", family::petersen(), 3}}) {
    o.report(euler_crosscheck(space, lmax), name);
  }
  if (o.pass) o.detail = "C5 l<=5, K2 l<=6, K3 l<=4, Petersen l<=3: exact";
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "odd cycle table", 60, odd_cycle_table},
      {2, "Petersen", 300, petersen},
      {3, "Hoffman-Singleton", 600, hoffman_singleton},
      {4, "missing Moore graph", 1, missing_moore},
      {5, "even cycles", 300, even_cycles},
      {6, "diagonality criterion", 600, diagonality},
      {7, "Theta vs SNF", 900, theta_oracle},
      {8, "thin frames", 300, thin_frames_check},
      {9, "resolutions", 900, resolutions},
      {10, "Euler characteristic", 300, euler},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) out.fail("over budget " + std::to_string(c.budget_seconds) + " s");
    failures += !out.pass;
    std::printf("%s [%d] %s (%.2f s): %s\n", out.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                out.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
