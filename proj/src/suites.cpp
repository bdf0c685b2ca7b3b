#include "mh/suites.hpp"

#include <algorithm>
#include <set>

#include "mh/closedform.hpp"
#include "mh/error.hpp"
#include "mh/families.hpp"
#include "mh/homology.hpp"
#include "mh/theta.hpp"

namespace mh {

namespace {

nlohmann::json bidegree(int n, const Rational& ell) { return {{"n", n}, {"ell", format_rational(ell)}}; }

std::string group_text(const HomologyGroup& h) {
  std::string s = "rank " + std::to_string(h.rank);
  for (const auto& t : h.torsion) s += ", Z/" + t.get_str();
  return s;
}

std::vector<Chain> tuple_chains(const std::vector<Tuple>& tuples, int n, const Rational& ell) {
  std::vector<Chain> out;
  for (const auto& t : tuples) {
    Chain c;
    c.n = n;
    c.ell = ell;
    c.add(t, 1);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<Rational> length_grid(const QuasiMetricSpace& space, const Rational& max_ell) {
  std::vector<Rational> out;
  for (Integer k = 0;; ++k) {
    Rational ell(k, space.scale());
    ell.canonicalize();
    if (ell > max_ell) break;
    out.push_back(ell);
  }
  return out;
}

Report theta_vs_snf(const QuasiMetricSpace& space, int nmax, const Rational& max_ell, std::size_t cap) {
  ThetaEnumerator check(space);  // NotGeodetic before any work
  Report report;
  std::size_t skipped = 0;
  for (int n = 0; n <= nmax; ++n) {
    for (const auto& ell : length_grid(space, max_ell)) {
      HomologyGroup h;
      try {
        h = homology(space, n, ell, Variant::normalized, cap);
      } catch (const ResourceLimit&) {
        ++skipped;
        continue;
      }
      auto theta = theta_enumerate(space, n, ell).tuples;
      std::string witness = group_text(h) + ", |Theta| " + std::to_string(theta.size());
      bool pass = h.rank == theta.size() && h.torsion.empty();
      if (pass && !theta.empty()) {
        auto chains = tuple_chains(theta, n, ell);
        bool cycles = std::all_of(chains.begin(), chains.end(), [&](const Chain& c) { return is_cycle(space, c); });
        if (!cycles) witness += ", a Theta tuple is not a cycle";
        bool spans = cycles && classes_span(space, chains, n, ell, Variant::normalized, cap);
        if (cycles && !spans) witness += ", Theta does not span";
        pass = cycles && spans;
      }
      if (pass && space.size() <= 8) {
        auto direct = theta_direct_filter(space, n, ell);
        if (direct != theta) {
          pass = false;
          witness += ", direct filter gives " + std::to_string(direct.size());
        }
      }
      report.push_back({"theta = snf", bidegree(n, ell), pass, witness});
    }
  }
  report.push_back({"bidegrees over the basis cap", {{"cap", cap}}, true, std::to_string(skipped) + " skipped"});
  return report;
}

CheckResult diagonality_check(const QuasiMetricSpace& space, int nmax, int lmax, std::size_t cap) {
  auto certificate = is_diagonal(space);
  std::optional<std::string> off;
  for (int n = 1; n <= nmax && !off; ++n) {
    for (int ell = n + 1; ell <= lmax && !off; ++ell) {
      auto h = homology(space, n, Rational(ell), Variant::normalized, cap);
      if (!h.is_zero()) off = "MH_" + std::to_string(n) + "^" + std::to_string(ell) + " = " + group_text(h);
    }
  }
  CheckResult r;
  r.check = "no 4-cut iff diagonal";
  r.params = {{"points", space.size()}, {"nmax", nmax}, {"lmax", lmax}};
  r.pass = certificate.diagonal == !off;
  std::string cut = "no 4-cut";
  if (certificate.cut) {
    const auto& c = *certificate.cut;
    cut = "4-cut (" + std::to_string(c.x0) + "," + std::to_string(c.x1) + "," + std::to_string(c.x2) + "," +
          std::to_string(c.x3) + ")";
  }
  r.witness = cut + "; " + off.value_or("off-diagonal homology vanishes");
  return r;
}

Report thin_frame_agreement(const QuasiMetricSpace& space, int nmax, const Rational& max_ell) {
  ExtDist m_x = space.min_four_cut_length();
  Report report;
  for (int n = 0; n <= nmax; ++n) {
    for (const auto& ell : length_grid(space, max_ell)) {
      if (!(ExtDist(ell) < m_x)) continue;
      auto thin = thin_frames(space, n, ell);
      auto theta = theta_enumerate(space, n, ell).tuples;
      report.push_back({"thin frames = theta", bidegree(n, ell), thin == theta,
                        std::to_string(thin.size()) + " thin frames, " + std::to_string(theta.size()) + " Theta"});
    }
  }
  return report;
}

std::optional<std::pair<int, Rational>> thin_frame_disagreement(const QuasiMetricSpace& space, int nmax,
                                                                const Rational& max_ell) {
  ExtDist m_x = space.min_four_cut_length();
  for (int n = 0; n <= nmax; ++n) {
    for (const auto& ell : length_grid(space, max_ell)) {
      if (ExtDist(ell) < m_x) continue;
      if (thin_frames(space, n, ell) != theta_enumerate(space, n, ell).tuples) return std::make_pair(n, ell);
    }
  }
  return std::nullopt;
}

Report moore_suite(const QuasiMetricSpace& space, int nmax, std::size_t cap) {
  auto params = moore_detect(space);
  if (!params) throw HypothesisError("not a Moore graph");
  Report report;
  nlohmann::json base{{"D", params->D}, {"m", params->m}, {"N", params->N.get_str()}};
  for (int n = 0; n <= nmax; ++n) {
    for (long ell = 0; ell <= (params->m + 1) * n; ++ell) {
      auto p = base;
      p["n"] = n;
      p["ell"] = ell;
      Integer predicted;
      try {
        predicted = moore_rank(*params, n, ell);
      } catch (const ConventionMismatch& e) {
        report.push_back({"recurrence = closed form", p, false, e.what()});
        continue;
      }
      if (!moore_support(*params, n, ell)) {
        if (predicted != 0) report.push_back({"zero off support", p, false, predicted.get_str()});
        continue;
      }
      auto cycles = moore_cycles(space, *params, n, ell);
      auto theta = theta_enumerate(space, n, Rational(ell)).tuples;
      std::set<Tuple> a(cycles.begin(), cycles.end()), b(theta.begin(), theta.end());
      bool pass = a == b && Integer(static_cast<unsigned long>(cycles.size())) == predicted;
      std::string witness = "R " + predicted.get_str() + ", cycles " + std::to_string(cycles.size()) + ", Theta " +
                            std::to_string(theta.size());
      try {
        auto h = homology(space, n, Rational(ell), Variant::normalized, cap);
        pass = pass && Integer(static_cast<unsigned long>(h.rank)) == predicted && h.torsion.empty();
        witness += ", SNF " + group_text(h);
      } catch (const ResourceLimit&) {
        witness += ", SNF skipped";
      }
      report.push_back({"moore rank", p, pass, witness});
    }
  }
  return report;
}

Report even_cycle_suite(long N, int nmax, std::size_t cap) {
  auto space = family::cycle(static_cast<std::size_t>(N));
  const long m = N / 2;
  Report report;
  std::optional<std::string> bad_cycle;
  for (long p = 0; p <= nmax; ++p) {
    for (long q = 0; p + q <= nmax; ++q) {
      for (Point x = 0; x < space.size(); ++x) {
        auto theta = even_theta(space, p, q, x);
        bool ok = theta.n == p + q && theta.ell == Rational(m * std::min(p, q) + std::abs(p - q)) &&
                  is_cycle(space, theta);
        if (!ok && !bad_cycle) {
          bad_cycle = "theta_" + std::to_string(p) + std::to_string(q) + "(" + std::to_string(x) + ")";
        }
      }
    }
  }
  report.push_back({"theta_pq are cycles", {{"N", N}, {"nmax", nmax}}, !bad_cycle, bad_cycle});
  for (int n = 0; n <= nmax; ++n) {
    for (long ell = 0; ell <= m * n; ++ell) {
      nlohmann::json p{{"N", N}, {"n", n}, {"ell", ell}};
      auto h = homology(space, n, Rational(ell), Variant::normalized, cap);
      Integer expected = even_rank(N, n, ell);
      bool pass = Integer(static_cast<unsigned long>(h.rank)) == expected && h.torsion.empty();
      std::string witness = "SNF " + group_text(h) + ", expected " + expected.get_str();
      auto family = even_basis_cycles(space, n, ell);
      if (!family.empty()) {
        bool independent = classes_independent(space, family, n, Rational(ell), Variant::normalized, cap);
        bool spans = classes_span(space, family, n, Rational(ell), Variant::normalized, cap);
        pass = pass && independent && spans;
        witness += std::string(", independent ") + (independent ? "yes" : "no") + ", spans " + (spans ? "yes" : "no");
      }
      report.push_back({"even cycle rank", p, pass, witness});
    }
  }
  return report;
}

}  // namespace mh
