// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.
//
//   acceptance [--cli PATH --data DIR --golden DIR] [--update-golden]

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mspace/connectivity.hpp"
#include "mspace/corpus.hpp"
#include "mspace/holder.hpp"
#include "mspace/metrization.hpp"
#include "mspace/random.hpp"
#include "mspace/space.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace mspace;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Paths {
  std::string cli;
  fs::path data;
  fs::path golden;
  bool update = false;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

std::vector<double> distinct_distances(const DistanceMatrix& d) {
  std::set<double> s;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) s.insert(d(i, j));
  return {s.begin(), s.end()};
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

Outcome snowflake_closure() {
  Rng rng(1001);
  std::size_t checked = 0;
  double worst_excess = -1.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = random_metric(rng, 12);
    for (double a : {0.3, 0.5, 0.9}) {
      ++checked;
      if (!audit(snowflake(d, a).space).metric) return {false, "a=" + fmt(a) + " not metric, trial " + std::to_string(trial)};
    }
    for (double a : {1.5, 2.0, 3.0}) {
      ++checked;
      const double excess = audit(snowflake(d, a).space).quasi_constant - std::pow(2.0, a - 1.0);
      worst_excess = std::max(worst_excess, excess);
      if (excess > 1e-9) return {false, "a=" + fmt(a) + " constant exceeds bound by " + fmt(excess)};
    }
    const auto u = random_ultrametric(rng, 12);
    for (double a : {0.3, 0.5, 0.9, 1.5, 2.0, 3.0}) {
      ++checked;
      if (!audit(snowflake(u, a).space).ultrametric) return {false, "ultrametric lost at a=" + fmt(a)};
    }
  }
  return {true, std::to_string(checked) + " transforms; max (qc - 2^(a-1)) = " + fmt(worst_excess)};
}

Outcome separation_theorem() {
  Rng rng(1002);
  std::size_t checked = 0;
  double tightest = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = random_metric(rng, 30);
    // the 10 largest distinct merge heights all leave >= 2 components
    std::set<double> heights;
    for (const auto& e : minimum_spanning_tree(d)) heights.insert(e.w);
    if (heights.size() < 10) return {false, "fewer than 10 distinct merge heights"};
    auto it = heights.rbegin();
    for (int k = 0; k < 10; ++k, ++it) {
      const double eps = *it;
      const auto p = chain_components(d, eps);
      if (p.component_count < 2) return {false, "epsilon " + fmt(eps) + " gave one component"};
      const double sep = separation_check(d, p);
      ++checked;
      if (!(sep >= eps)) return {false, "separation " + fmt(sep) + " < epsilon " + fmt(eps)};
      tightest = std::min(tightest, sep / eps);
    }
  }
  return {true, std::to_string(checked) + " partitions; min separation/epsilon = " + fmt(tightest)};
}

Outcome subdominant_oracle() {
  Rng rng(1003);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const auto d = random_metric(rng, n);
    const auto u = subdominant_ultrametric(d).u;
    const auto brute = oracle::minimax(d);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (u(i, j) != brute[i * n + j]) return {false, "minimax mismatch, trial " + std::to_string(trial)};
        if (u(i, j) > d(i, j)) return {false, "u > d, trial " + std::to_string(trial)};
      }
    if (!audit(u).ultrametric) return {false, "u not ultrametric, trial " + std::to_string(trial)};
  }
  return {true, "500 instances, n = 2..7, exact"};
}

Outcome dendrogram_consistency() {
  Rng rng(1004);
  std::size_t cuts = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = random_metric(rng, 20);
    const auto tree = dendrogram(d);
    for (double w : distinct_distances(d))
      for (double eps : {w - 1e-6, w + 1e-6}) {
        if (eps <= 0.0) continue;
        ++cuts;
        if (tree.cut(eps) != chain_components(d, eps).component_of)
          return {false, "cut at " + fmt(eps) + " differs, trial " + std::to_string(trial)};
      }
  }
  return {true, std::to_string(cuts) + " cuts, exact"};
}

bool balls_are_components(const DistanceMatrix& u, std::size_t& checked) {
  for (double h : distinct_distances(u))
    for (double eps : {h, std::nextafter(h, 0.0), h * (1 + 1e-6), h * 2}) {
      const auto p = chain_components(u, eps);
      for (std::size_t c = 0; c < u.size(); ++c) {
        std::vector<std::size_t> comp;
        for (std::size_t x = 0; x < u.size(); ++x)
          if (p.component_of[x] == p.component_of[c]) comp.push_back(x);
        ++checked;
        if (comp != ball(u, c, eps)) return false;
      }
    }
  return true;
}

Outcome ball_component_identity() {
  std::size_t checked = 0;
  for (int level = 1; level <= 8; ++level)
    if (!balls_are_components(cantor(level, CantorFlavor::Triadic), checked))
      return {false, "triadic Cantor level " + std::to_string(level)};
  Rng rng(1005);
  for (int trial = 0; trial < 100; ++trial)
    if (!balls_are_components(random_ultrametric(rng, 2 + rng.index(30)), checked))
      return {false, "random ultrametric, trial " + std::to_string(trial)};
  return {true, std::to_string(checked) + " (center, epsilon) pairs, exact"};
}

Outcome metrization() {
  Rng rng(1006);
  double worst_ratio = std::numeric_limits<double>::infinity();
  std::size_t oracle_checked = 0;
  for (const std::size_t n : {std::size_t{10}, std::size_t{6}}) {
    for (int trial = 0; trial < 200; ++trial) {
      // a in (1, 2]
      const double a = 2.0 - rng.uniform();
      const auto rho = snowflake(random_metric(rng, n), a).space;
      const auto r = metrize(rho);
      const std::string where = "n=" + std::to_string(n) + " trial " + std::to_string(trial);
      if (!audit(r.delta).metric) return {false, "delta not metric, " + where};
      if (std::abs(r.eta - choose_eta(std::max(1.0, oracle::quasi_constant(rho)))) > 1e-12)
        return {false, "eta not from the audited constant, " + where};
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (r.delta(i, j) > std::pow(rho(i, j), r.eta)) return {false, "delta > rho^eta, " + where};
      worst_ratio = std::min(worst_ratio, r.ratio_min);
      if (r.ratio_min < kChainLowerBound - 1e-9) return {false, "ratio_min " + fmt(r.ratio_min) + ", " + where};
      if (n <= 6) {
        const auto brute = oracle::chain_sums(rho, r.eta);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (r.delta(i, j) != brute[i * n + j]) return {false, "oracle mismatch, " + where};
        ++oracle_checked;
      }
    }
  }
  return {true, "400 quasimetrics; min ratio_min = " + fmt(worst_ratio) + "; " + std::to_string(oracle_checked) +
                    " exact oracle matches"};
}

Outcome distance_functions() {
  std::vector<std::pair<std::string, DistanceMatrix>> corpus;
  for (int n = 0; n <= 3; ++n) {
    corpus.emplace_back("gasket " + std::to_string(n), intrinsic_metric(gasket(n)));
    corpus.emplace_back("carpet " + std::to_string(n), intrinsic_metric(carpet(n)));
  }
  for (int n = 1; n <= 8; ++n) {
    corpus.emplace_back("cantor euclidean " + std::to_string(n), cantor(n, CantorFlavor::Euclidean));
    corpus.emplace_back("cantor triadic " + std::to_string(n), cantor(n, CantorFlavor::Triadic));
  }
  std::size_t bases = 0;
  double worst = 0.0;
  for (const auto& [name, d] : corpus) {
    const std::size_t m = d.size();
    for (std::size_t p = 0; p < m; ++p) {
      const auto f = distance_to_point(d, p);
      double best = 0.0;
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = x + 1; y < m; ++y) best = std::max(best, std::abs(f[x] - f[y]) / d(x, y));
      ++bases;
      worst = std::max(worst, best);
      if (best > 1.0 + 1e-12) return {false, name + ", p=" + std::to_string(p) + ": ratio " + fmt(best)};
      if (m > 1 && best < 1.0) return {false, name + ", p=" + std::to_string(p) + ": ratio 1 not attained"};
    }
  }
  return {true, std::to_string(corpus.size()) + " spaces, " + std::to_string(bases) + " base points; max ratio - 1 = " +
                    fmt(worst - 1.0)};
}

Outcome length_bound() {
  Rng rng(1008);
  double slack = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < 100; ++trial) {
    const auto space = random_metric(rng, 3 + rng.index(20));
    std::vector<std::size_t> seq{rng.index(space.size())};
    const std::size_t len = 2 + rng.index(40);
    while (seq.size() < len) {
      const std::size_t next = rng.index(space.size());
      if (next != seq.back()) seq.push_back(next);
    }
    const auto curve = natural_parametrization(space, seq);
    if (curve_holder_constant(curve, 1.0, PairScope::Consecutive).constant != 1.0)
      return {false, "consecutive constant differs from 1, trial " + std::to_string(trial)};
    const double bound = curve_holder_constant(curve, 1.0).constant * curve.span();
    const double length = chain_length(space, seq);
    if (length > bound + 1e-9) return {false, "length exceeds bound, trial " + std::to_string(trial)};
    slack = std::min(slack, bound - length);
  }
  return {true, "100 chains; consecutive constant exactly 1; min slack = " + fmt(slack)};
}

Outcome koch_exponent() {
  const auto levels = range(1, 6);
  const auto grid = exponent_grid(0.01, 0.01, 1.5);
  std::vector<SampledCurve> kochs, segments;
  for (int n : levels) {
    kochs.push_back(koch(n));
    segments.push_back(straight_segment(n, 4));
  }
  const auto k = critical_exponent(kochs, levels, grid, 0.02);
  const auto s = critical_exponent(segments, levels, grid, 0.02);
  const double target = std::log(3.0) / std::log(4.0);
  if (!k.estimate || !s.estimate) return {false, "no estimate"};
  const std::string detail = "koch a* = " + fmt(*k.estimate) + " (target " + fmt(target) + "), segment a* = " +
                             fmt(*s.estimate);
  const bool ok = std::abs(*k.estimate - target) <= 0.03 && std::abs(*s.estimate - 1.0) <= 0.01 + 1e-12;
  return {ok, detail};
}

Outcome finite_length_curves() {
  double worst = 0.0;
  const auto corner = [&](const FractalGraph& g) {
    const double d = geodesic_distances(g, g.corners[0])[g.corners[1]];
    worst = std::max(worst, std::abs(d - 1.0));
    return std::abs(d - 1.0) <= 1e-9;
  };
  for (int n = 0; n <= kMaxGasketLevel; ++n)
    if (!corner(gasket(n))) return {false, "gasket level " + std::to_string(n)};
  for (int n = 0; n <= kMaxCarpetLevel; ++n)
    if (!corner(carpet(n))) return {false, "carpet level " + std::to_string(n)};
  for (int n = 0; n <= kMaxSpongeLevel; ++n)
    if (!corner(sponge(n))) return {false, "sponge level " + std::to_string(n)};
  double worst_len = 0.0;
  for (int n = 0; n <= kMaxKochLevel; ++n) {
    const double err = std::abs(koch(n).length() - std::pow(4.0 / 3.0, n));
    worst_len = std::max(worst_len, err);
    if (err > 1e-12) return {false, "koch level " + std::to_string(n) + " length error " + fmt(err)};
  }
  return {true, "max corner error " + fmt(worst) + ", max koch length error " + fmt(worst_len)};
}

// --- CLI goldens -----------------------------------------------------------

struct GoldenCase {
  const char* name;
  const char* command;  // "@" stands for the CLI binary
};

const std::vector<GoldenCase> kGoldenCases = {
    {"check_line3", "@ check --in line3.json"},
    {"check_square_csv", "@ check --in square.csv"},
    {"check_text", "@ check --in ultra3.json --format text"},
    {"snowflake_line3", "@ snowflake --in line3.json --exponent 2"},
    {"snowflake_raw", "@ snowflake --in squared4.json --exponent 0.5 --raw"},
    {"components_pts", "@ components --in pts.json --eps 1.0"},
    {"components_fine", "@ components --in pts.json --eps 0.3"},
    {"dendrogram_line013", "@ dendrogram --in line013.json"},
    {"ultrafit_pts", "@ ultrafit --in pts.json"},
    {"metrize_squared4", "@ metrize --in squared4.json"},
    {"metrize_eta", "@ metrize --in line3.json --eta 0.5"},
    {"holder_map", "@ holder --in line013.json --exponent 1 --map 0,0,2"},
    {"holder_curve", "@ holder --in zigzag.json --exponent 0.5"},
    {"holder_koch", "@ gen koch --level 2 | @ holder --exponent 0.5 --consecutive"},
    {"length_seq", "@ length --in line013.json --seq 0,2,1"},
    {"length_koch", "@ gen koch --level 2 | @ length"},
    {"critexp_koch", "@ critexp --generator koch --levels 1:5"},
    {"critexp_segment", "@ critexp --generator segment --levels 1:4 --grid 0.1:0.1:1.5"},
    {"gen_gasket", "@ gen gasket --level 1"},
    {"gen_carpet", "@ gen carpet --level 1"},
    {"gen_sponge", "@ gen sponge --level 0"},
    {"gen_koch", "@ gen koch --level 1"},
    {"gen_staircase", "@ gen staircase --level 2"},
    {"gen_cantor", "@ gen cantor --level 3 --flavor triadic"},
    {"gen_random", "@ gen random --n 6 --seed 42"},
    {"gen_ultrametric", "@ gen ultrametric --n 5 --seed 7"},
    {"intrinsic_gasket", "@ gen gasket --level 2 | @ intrinsic"},
    {"intrinsic_source", "@ gen carpet --level 1 | @ intrinsic --source 0"},
    {"pipe_random_metrize", "@ gen random --n 8 --seed 3 | @ snowflake --exponent 1.5 | @ metrize"},
};

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

bool capture(const std::string& command, std::string& out) {
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return false;
  std::array<char, 4096> buf{};
  out.clear();
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  return pclose(pipe) == 0;
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

Outcome cli_determinism(const Paths& paths) {
  if (paths.cli.empty()) return {false, "no --cli given"};
  std::vector<std::string> failures;
  for (const GoldenCase& c : kGoldenCases) {
    std::string cmd = c.command;
    for (std::size_t at; (at = cmd.find('@')) != std::string::npos;) cmd.replace(at, 1, shell_quote(paths.cli));
    const std::string full = "cd " + shell_quote(paths.data.string()) + " && " + cmd;
    std::string first, second;
    if (!capture(full, first) || !capture(full, second)) {
      failures.push_back(std::string(c.name) + " (exit status)");
      continue;
    }
    if (first != second) {
      failures.push_back(std::string(c.name) + " (runs differ)");
      continue;
    }
    const fs::path golden = paths.golden / (std::string(c.name) + ".json");
    if (paths.update) {
      std::ofstream(golden, std::ios::binary) << first;
      continue;
    }
    if (!fs::exists(golden) || read_file(golden) != first) failures.push_back(std::string(c.name) + " (golden)");
  }

  // a few values the goldens must carry
  const auto result = [&](const char* name) {
    return nlohmann::json::parse(read_file(paths.golden / (std::string(name) + ".json"))).at("result");
  };
  try {
    if (result("check_line3")["quasi_constant"] != 1.0) failures.push_back("check_line3 value");
    if (result("components_pts")["separation"] != 4.0) failures.push_back("components_pts value");
    if (std::abs(result("length_koch")["length"].get<double>() - 16.0 / 9.0) > 1e-12)
      failures.push_back("length_koch value");
  } catch (const std::exception& e) {
    failures.push_back(std::string("golden parse: ") + e.what());
  }

  if (!failures.empty()) {
    std::string detail;
    for (const auto& f : failures) detail += (detail.empty() ? "" : ", ") + f;
    return {false, detail};
  }
  return {true, std::to_string(kGoldenCases.size()) + " commands byte-identical across two runs and to goldens"};
}

}  // namespace

int main(int argc, char** argv) {
  Paths paths;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    const auto value = [&] { return i + 1 < argc ? std::string(argv[++i]) : std::string(); };
    if (arg == "--cli")
      paths.cli = value();
    else if (arg == "--data")
      paths.data = value();
    else if (arg == "--golden")
      paths.golden = value();
    else if (arg == "--update-golden")
      paths.update = true;
    else {
      std::cerr << "unknown argument " << arg << '\n';
      return 2;
    }
  }

  if (!paths.cli.empty()) paths.cli = fs::absolute(paths.cli).string();
  paths.data = fs::absolute(paths.data);
  paths.golden = fs::absolute(paths.golden);

  struct Criterion {
    int id;
    const char* title;
    double budget_s;  // 0: no runtime limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "snowflake closure", 5, snowflake_closure},
      {2, "separation theorem", 5, separation_theorem},
      {3, "subdominant ultrametric oracle", 30, subdominant_oracle},
      {4, "dendrogram/partition consistency", 0, dendrogram_consistency},
      {5, "ultrametric ball-component identity", 0, ball_component_identity},
      {6, "metrization", 60, metrization},
      {7, "distance functions are 1-Lipschitz", 10, distance_functions},
      {8, "length bound", 0, length_bound},
      {9, "Koch critical exponent", 60, koch_exponent},
      {10, "finite-length curves in fractals", 0, finite_length_curves},
      {11, "CLI determinism", 0, [&] { return cli_determinism(paths); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      o.pass = false;
      o.detail += "; over the " + fmt(c.budget_s) + " s budget";
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed;
}
