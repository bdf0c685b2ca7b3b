// maghom: magnitude homology of finite quasi metric spaces.

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <mutex>
#include <sstream>
#include <thread>

#include "mh/closedform.hpp"
#include "mh/error.hpp"
#include "mh/families.hpp"
#include "mh/homology.hpp"
#include "mh/io.hpp"
#include "mh/resolution.hpp"
#include "mh/suites.hpp"
#include "mh/theta.hpp"

namespace {

using nlohmann::json;
using namespace mh;

constexpr const char* kVersionTag = "maghom-1";

enum Exit { ok = 0, usage = 1, hypothesis = 2, resource = 3, internal = 4 };

struct Options {
  std::vector<std::string> family;
  std::string matrix_file;
  std::string edges_file;
  bool directed = false;

  std::optional<int> n;
  int nmax = 4;
  std::optional<std::string> ell;
  std::string lmax = "6";
  std::string variant = "normalized";
  std::string format = "json";
  std::string out;
  std::string cache;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  int order = kDefaultSeriesOrder;
  long N = 6;
  std::optional<long> p, q;
  std::optional<long> D, m;
  std::string budget = "4";
  bool count_only = false;
  bool cycles = false;

  std::string space_action;
  std::string suite;
};

std::optional<QuasiMetricSpace> load_space(const Options& o) {
  int sources = !o.family.empty() + !o.matrix_file.empty() + !o.edges_file.empty();
  if (sources > 1) throw UsageError("give only one of --family, --matrix, --edges");
  if (!o.matrix_file.empty()) return load_matrix_file(o.matrix_file);
  if (!o.edges_file.empty()) return load_edge_file(o.edges_file, o.directed);
  if (!o.family.empty()) {
    std::vector<std::string> params(o.family.begin() + 1, o.family.end());
    if ((o.family[0] == "random" || o.family[0] == "random_graph") && params.size() == 2) {
      params.push_back(std::to_string(o.seed));
    }
    return named_family(o.family[0], params);
  }
  return std::nullopt;
}

QuasiMetricSpace require_space(const std::optional<QuasiMetricSpace>& space) {
  if (!space) throw UsageError("no input space: use --family, --matrix or --edges");
  return *space;
}

Rational parse_length(const std::string& text, const char* flag) {
  auto value = parse_rational(text);
  if (!value || *value < 0) throw UsageError(std::string("bad value for ") + flag + ": '" + text + "'");
  return *value;
}

Variant parse_variant(const std::string& text) {
  if (text == "normalized") return Variant::normalized;
  if (text == "unnormalized") return Variant::unnormalized;
  throw UsageError("--variant must be normalized or unnormalized");
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

/// Runs fn(0..count-1) on `jobs` threads; results keep index order.
template <class T>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, const std::function<T(std::size_t)>& fn) {
  std::vector<T> results(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned k = 1; k < std::max(1u, jobs); ++k) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

json tuples_json(const std::vector<Tuple>& tuples) {
  json out = json::array();
  for (const auto& t : tuples) out.push_back(t);
  return out;
}

json chain_json(const Chain& c) {
  json terms = json::array();
  for (const auto& [t, coefficient] : c.terms) terms.push_back({{"tuple", t}, {"coefficient", coefficient.get_str()}});
  return {{"n", c.n}, {"ell", format_rational(c.ell)}, {"terms", terms}};
}

struct Output {
  std::string text;
  int code = ok;
};

Output cmd_space(const Options& o, const QuasiMetricSpace& space) {
  if (o.space_action == "validate") return {"ok: " + std::to_string(space.size()) + " points\n"};
  json info;
  info["points"] = space.size();
  info["labels"] = space.labels();
  info["symmetric"] = space.is_symmetric();
  auto geodetic = space.geodetic_check();
  info["geodetic"] = geodetic.geodetic;
  if (!geodetic.geodetic) {
    info["geodetic_witness"] = {{"a", geodetic.a}, {"b", geodetic.b}, {"x", geodetic.x}, {"y", geodetic.y}};
  }
  info["m_X"] = space.min_four_cut_length().to_string();
  if (auto cut = space.minimal_four_cut()) info["four_cut"] = {cut->x0, cut->x1, cut->x2, cut->x3};
  if (geodetic.geodetic) info["diagonal"] = is_diagonal(space).diagonal;
  info["distance_regular"] = nullptr;
  if (space.is_symmetric() && space.all_finite()) {
    auto regularity = space.distance_regularity();
    info["distance_regular"] = regularity.regular;
    if (regularity.regular) {
      json counts = json::object();
      for (const auto& [ell, c] : regularity.counts) counts[format_rational(ell)] = c;
      info["distance_counts"] = counts;
    }
  }
  info["moore"] = nullptr;
  if (auto mp = moore_detect(space)) info["moore"] = {{"D", mp->D}, {"m", mp->m}, {"N", mp->N.get_str()}};
  return {info.dump(2) + "\n"};
}

std::vector<int> degree_range(const Options& o) {
  std::vector<int> out;
  if (o.n) {
    out.push_back(*o.n);
  } else {
    for (int n = 0; n <= o.nmax; ++n) out.push_back(n);
  }
  return out;
}

std::vector<Rational> length_range(const Options& o, const QuasiMetricSpace& space) {
  if (o.ell) return {parse_length(*o.ell, "--l")};
  return length_grid(space, parse_length(o.lmax, "--lmax"));
}

std::string rank_table_csv(const std::vector<int>& degrees, const std::vector<Rational>& lengths,
                           const std::function<std::optional<std::string>(int, const Rational&)>& cell) {
  std::ostringstream out;
  out << "n";
  for (const auto& ell : lengths) out << "," << format_rational(ell);
  out << "\n";
  for (int n : degrees) {
    out << n;
    for (const auto& ell : lengths) out << "," << cell(n, ell).value_or("");
    out << "\n";
  }
  return out.str();
}

Output cmd_homology(const Options& o, const QuasiMetricSpace& space) {
  auto degrees = degree_range(o);
  auto lengths = length_range(o, space);
  Variant variant = parse_variant(o.variant);
  std::vector<std::pair<int, Rational>> cells;
  for (int n : degrees) {
    for (const auto& ell : lengths) cells.emplace_back(n, ell);
  }
  auto groups = parallel_map<HomologyGroup>(cells.size(), o.jobs, [&](std::size_t i) {
    return homology(space, cells[i].first, cells[i].second, variant);
  });
  if (o.format == "csv") {
    std::map<std::pair<int, Rational>, HomologyGroup> at;
    for (std::size_t i = 0; i < cells.size(); ++i) at[cells[i]] = groups[i];
    return {rank_table_csv(degrees, lengths, [&](int n, const Rational& ell) -> std::optional<std::string> {
      const auto& h = at[{n, ell}];
      if (h.is_zero()) return std::nullopt;
      std::string s = std::to_string(h.rank);
      for (const auto& t : h.torsion) s += "+Z/" + t.get_str();
      return s;
    })};
  }
  json out = json::array();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    json torsion = json::array();
    for (const auto& t : groups[i].torsion) torsion.push_back(t.get_str());
    out.push_back({{"n", cells[i].first},
                   {"ell", format_rational(cells[i].second)},
                   {"rank", groups[i].rank},
                   {"torsion", torsion}});
  }
  return {out.dump(2) + "\n"};
}

Output cmd_theta(const Options& o, const QuasiMetricSpace& space) {
  if (!o.n || !o.ell) throw UsageError("theta needs --n and --l");
  Rational ell = parse_length(*o.ell, "--l");
  json out{{"n", *o.n}, {"ell", format_rational(ell)}};
  if (o.count_only) {
    out["count"] = theta_count(space, *o.n, ell).get_ui();
  } else {
    ThetaEnumerator enumerator(space);
    auto units = space.to_units(ell);
    std::vector<std::vector<Tuple>> per_seed(enumerator.seeds().size());
    if (units && *o.n >= 1) {
      // each worker owns an enumerator: the extension cache is not shared
      per_seed = parallel_map<std::vector<Tuple>>(per_seed.size(), o.jobs, [&](std::size_t i) {
        ThetaEnumerator local(space);
        std::vector<Tuple> found;
        local.for_each_from(local.seeds()[i], *o.n, *units, [&](const Tuple& t) { found.push_back(t); });
        return found;
      });
    }
    std::vector<Tuple> tuples;
    if (*o.n == 0) {
      tuples = theta_enumerate(space, 0, ell).tuples;
    } else {
      for (auto& part : per_seed) tuples.insert(tuples.end(), part.begin(), part.end());
    }
    out["count"] = tuples.size();
    out["tuples"] = tuples_json(tuples);
  }
  return {out.dump(2) + "\n"};
}

Output cmd_moore(const Options& o, const std::optional<QuasiMetricSpace>& space) {
  MooreParams params;
  if (o.D && o.m) {
    params = moore_params(*o.D, *o.m);
  } else {
    auto detected = moore_detect(require_space(space));
    if (!detected) throw HypothesisError("not a Moore graph (need regular, diameter m > 1, girth 2m+1)");
    params = *detected;
  }
  json out{{"D", params.D}, {"m", params.m}, {"N", params.N.get_str()}};
  if (o.cycles) {
    if (!o.n || !o.ell) throw UsageError("--cycles needs --n and --l");
    Rational length = parse_length(*o.ell, "--l");
    if (length.get_den() != 1) throw UsageError("Moore cycles need an integer length");
    long ell = length.get_num().get_si();
    auto cycles = moore_cycles(require_space(space), params, *o.n, ell);
    out["n"] = *o.n;
    out["ell"] = ell;
    out["count"] = cycles.size();
    out["tuples"] = tuples_json(cycles);
    return {out.dump(2) + "\n"};
  }
  json ranks = json::array();
  for (int n : degree_range(o)) {
    for (long ell = 0; ell <= (params.m + 1) * n; ++ell) {
      if (!moore_support(params, n, ell)) continue;
      ranks.push_back({{"n", n}, {"ell", ell}, {"rank", moore_rank(params, n, ell).get_str()}});
    }
  }
  out["ranks"] = ranks;
  if (o.format == "csv") {
    std::vector<Rational> lengths;
    for (long ell = 0; ell <= (params.m + 1) * o.nmax; ++ell) lengths.emplace_back(ell);
    return {rank_table_csv(degree_range(o), lengths, [&](int n, const Rational& ell) -> std::optional<std::string> {
      long l = ell.get_num().get_si();
      if (!moore_support(params, n, l)) return std::nullopt;
      return moore_rank(params, n, l).get_str();
    })};
  }
  return {out.dump(2) + "\n"};
}

Output cmd_evencycle(const Options& o, const std::optional<QuasiMetricSpace>& input) {
  QuasiMetricSpace space = input ? *input : family::cycle(static_cast<std::size_t>(o.N));
  const long N = static_cast<long>(space.size());
  EvenCycle cycle(space);
  if (o.p || o.q) {
    if (!o.p || !o.q) throw UsageError("give both --p and --q");
    json out = json::array();
    for (Point x = 0; x < space.size(); ++x) {
      json entry = chain_json(even_theta(space, *o.p, *o.q, x));
      entry["p"] = *o.p;
      entry["q"] = *o.q;
      entry["x"] = x;
      out.push_back(entry);
    }
    return {out.dump(2) + "\n"};
  }
  auto degrees = degree_range(o);
  std::vector<Rational> lengths;
  for (long ell = 0; ell <= cycle.m() * o.nmax; ++ell) lengths.emplace_back(ell);
  auto cell = [&](int n, const Rational& ell) -> std::optional<std::string> {
    Integer r = even_rank(N, n, ell.get_num().get_si());
    if (r == 0) return std::nullopt;
    return r.get_str();
  };
  if (o.format == "csv") return {rank_table_csv(degrees, lengths, cell)};
  json out = json::array();
  for (int n : degrees) {
    for (const auto& ell : lengths) {
      if (auto r = cell(n, ell)) out.push_back({{"n", n}, {"ell", format_rational(ell)}, {"rank", *r}});
    }
  }
  return {out.dump(2) + "\n"};
}

Output cmd_magnitude(const Options& o, const QuasiMetricSpace& space) {
  json out;
  std::vector<Rational> series;
  bool regular = false;
  if (space.is_symmetric() && space.all_finite()) regular = space.distance_regularity().regular;
  if (regular) {
    auto f = magnitude_distance_regular(space);
    out["function"] = f.to_string();
    series = f.series(o.order);
  } else {
    out["function"] = nullptr;
    for (const auto& c : magnitude_series(space, o.order)) series.emplace_back(c);
  }
  json coefficients = json::array();
  for (const auto& c : series) coefficients.push_back(format_rational(c));
  out["series"] = coefficients;
  return {out.dump(2) + "\n"};
}

Output cmd_verify(const Options& o, const std::optional<QuasiMetricSpace>& space) {
  Report report;
  const std::string& s = o.suite;
  if (s == "theta-vs-snf") {
    report = theta_vs_snf(require_space(space), o.nmax, parse_length(o.budget, "--budget"));
  } else if (s == "moore") {
    report = moore_suite(require_space(space), o.nmax);
  } else if (s == "even-cycle") {
    report = even_cycle_suite(o.N, o.nmax);
  } else if (s == "resolution") {
    if (space) {
      auto res = minimal_resolution_geodetic(*space, o.nmax);
      report = certify_exactness(res, space->size());
      report.push_back({"tensored zero", {{"max_degree", o.nmax}}, verify_tensored_zero(res), std::nullopt});
    } else {
      append(report, verify_total_complex(o.N, o.nmax));
      append(report, verify_homolk_hypotheses(o.N, o.nmax));
      append(report, verify_chain_map_f(o.N, std::min(o.nmax, 3)));
    }
  } else if (s == "mult-rel") {
    report = verify_mult_relations(o.N);
  } else if (s == "euler") {
    Rational lmax = parse_length(o.lmax, "--lmax");
    if (lmax.get_den() != 1) throw UsageError("--lmax must be an integer for the euler suite");
    report = euler_crosscheck(require_space(space), static_cast<int>(lmax.get_num().get_si()));
  } else {
    throw UsageError("unknown suite '" + s + "'");
  }
  return {to_json(report).dump(2) + "\n", all_pass(report) ? ok : internal};
}

std::string cache_params(const Options& o, const std::string& command) {
  json p{{"command", command},     {"n", o.n ? json(*o.n) : json()}, {"nmax", o.nmax},     {"l", o.ell ? json(*o.ell) : json()},
         {"lmax", o.lmax},         {"variant", o.variant},           {"format", o.format}, {"order", o.order},
         {"N", o.N},               {"p", o.p ? json(*o.p) : json()}, {"q", o.q ? json(*o.q) : json()},
         {"D", o.D ? json(*o.D) : json()}, {"m", o.m ? json(*o.m) : json()}, {"budget", o.budget},
         {"count_only", o.count_only}, {"cycles", o.cycles}, {"action", o.space_action}, {"suite", o.suite}};
  return p.dump();
}

Output run(const Options& o, const std::string& command) {
  auto space = load_space(o);
  std::optional<std::filesystem::path> cache_file;
  if (!o.cache.empty() && !(command == "space" && o.space_action == "validate")) {
    std::string key = std::string(kVersionTag) + "\n" + (space ? space->canonical_text() : "") + "\n" +
                      cache_params(o, command);
    std::filesystem::create_directories(o.cache);
    cache_file = std::filesystem::path(o.cache) / (sha256_hex(key) + ".json");
    std::ifstream in(*cache_file);
    if (in) {
      try {
        json cached = json::parse(in);
        return {cached.at("output").get<std::string>(), cached.at("exit").get<int>()};
      } catch (const json::exception&) {
        // unreadable entries are recomputed
      }
    }
  }
  Output result;
  if (command == "space") {
    result = cmd_space(o, require_space(space));
  } else if (command == "homology") {
    result = cmd_homology(o, require_space(space));
  } else if (command == "theta") {
    result = cmd_theta(o, require_space(space));
  } else if (command == "moore") {
    result = cmd_moore(o, space);
  } else if (command == "evencycle") {
    result = cmd_evencycle(o, space);
  } else if (command == "magnitude") {
    result = cmd_magnitude(o, require_space(space));
  } else if (command == "verify") {
    result = cmd_verify(o, space);
  }
  if (cache_file) {
    std::ofstream(*cache_file) << json{{"version", kVersionTag}, {"output", result.text}, {"exit", result.code}}.dump();
  }
  return result;
}

void add_space_options(CLI::App* app, Options& o) {
  app->add_option("--family", o.family, "named family and its parameters, e.g. --family cycle 5")
      ->expected(1, 4);
  app->add_option("--matrix", o.matrix_file, "distance matrix file (.csv or .json)");
  app->add_option("--edges", o.edges_file, "edge list file");
  app->add_flag("--directed", o.directed, "read edges as directed");
  app->add_option("--out", o.out, "write output to this file");
  app->add_option("--cache", o.cache, "results cache directory");
  app->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  app->add_option("--seed", o.seed, "seed for random families given without one");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Magnitude homology of finite quasi metric spaces"};
  app.require_subcommand(1);
  Options o;

  auto* space = app.add_subcommand("space", "describe or validate an input space");
  space->add_option("action", o.space_action, "info or validate")
      ->required()
      ->check(CLI::IsMember({"info", "validate"}));
  add_space_options(space, o);

  auto add_ranges = [&](CLI::App* c) {
    c->add_option("--n", o.n, "single degree");
    c->add_option("--nmax", o.nmax, "largest degree");
    c->add_option("--l", o.ell, "single length (integer or p/q)");
    c->add_option("--lmax", o.lmax, "largest length");
    c->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* homology_cmd = app.add_subcommand("homology", "ranks and torsion of MH_n^l by Smith normal form");
  add_space_options(homology_cmd, o);
  add_ranges(homology_cmd);
  homology_cmd->add_option("--variant", o.variant, "normalized or unnormalized");

  auto* theta_cmd = app.add_subcommand("theta", "Theta basis of a geodetic space");
  add_space_options(theta_cmd, o);
  add_ranges(theta_cmd);
  theta_cmd->add_flag("--count-only", o.count_only, "print only the number of tuples");

  auto* moore_cmd = app.add_subcommand("moore", "Moore graph ranks and cycles");
  add_space_options(moore_cmd, o);
  add_ranges(moore_cmd);
  moore_cmd->add_option("--D", o.D, "degree (with --m, no input space needed)");
  moore_cmd->add_option("--m", o.m, "diameter");
  moore_cmd->add_flag("--cycles", o.cycles, "list the explicit cycles at --n, --l");

  auto* even_cmd = app.add_subcommand("evencycle", "even cycle ranks and theta_pq cycles");
  add_space_options(even_cmd, o);
  add_ranges(even_cmd);
  even_cmd->add_option("--N", o.N, "cycle length (default input when no space is given)");
  even_cmd->add_option("--p", o.p, "horizontal degree of theta_pq");
  even_cmd->add_option("--q", o.q, "vertical degree of theta_pq");

  auto* magnitude_cmd = app.add_subcommand("magnitude", "magnitude function and its power series");
  add_space_options(magnitude_cmd, o);
  magnitude_cmd->add_option("--order", o.order, "number of series terms after q^0");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite and print a JSON report");
  verify_cmd->add_option("suite", o.suite, "theta-vs-snf, moore, even-cycle, resolution, mult-rel, euler")
      ->required()
      ->check(CLI::IsMember({"theta-vs-snf", "moore", "even-cycle", "resolution", "mult-rel", "euler"}));
  add_space_options(verify_cmd, o);
  add_ranges(verify_cmd);
  verify_cmd->add_option("--N", o.N, "even cycle length");
  verify_cmd->add_option("--budget", o.budget, "largest length for theta-vs-snf");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    Output result = run(o, command);
    if (o.out.empty()) {
      std::cout << result.text;
    } else {
      std::ofstream file(o.out);
      if (!file) throw UsageError("cannot write " + o.out);
      file << result.text;
    }
    return result.code;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return usage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return usage;
  } catch (const AxiomViolation& e) {
    std::cerr << "axiom violation: " << e.what() << "\n";
    return hypothesis;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis not satisfied: " << e.what() << "\n";
    return hypothesis;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return resource;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return internal;
  }
}
