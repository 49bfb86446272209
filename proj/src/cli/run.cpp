#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mspace/cli.hpp"
#include "mspace/connectivity.hpp"
#include "mspace/corpus.hpp"
#include "mspace/holder.hpp"
#include "mspace/io.hpp"
#include "mspace/metrization.hpp"
#include "mspace/random.hpp"
#include "mspace/space.hpp"

namespace mspace::cli {

using io::Json;

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

namespace {

struct Input {
  std::string text;
  Json doc;
};

Input read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw ParseError("cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  Input out{buf.str(), {}};
  out.doc = io::parse_document(out.text);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  return parts;
}

double to_real(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(std::string("bad ") + what + " '" + s + "'");
}

long to_integer(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(std::string("bad ") + what + " '" + s + "'");
}

std::vector<double> parse_grid(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) throw ParseError("--grid expects START:STEP:END");
  return exponent_grid(to_real(parts[0], "grid start"), to_real(parts[1], "grid step"),
                       to_real(parts[2], "grid end"));
}

// "A:B" inclusive range or comma list
std::vector<int> parse_levels(const std::string& spec) {
  std::vector<int> levels;
  if (spec.find(':') != std::string::npos) {
    const auto parts = split(spec, ':');
    if (parts.size() != 2) throw ParseError("--levels expects A:B or a comma list");
    const long lo = to_integer(parts[0], "level");
    const long hi = to_integer(parts[1], "level");
    for (long l = lo; l <= hi; ++l) levels.push_back(static_cast<int>(l));
  } else {
    for (const auto& p : split(spec, ',')) levels.push_back(static_cast<int>(to_integer(p, "level")));
  }
  return levels;
}

std::vector<std::size_t> parse_indices(const std::string& spec) {
  std::vector<std::size_t> out;
  for (const auto& p : split(spec, ',')) {
    const long v = to_integer(p, "index");
    if (v < 0) throw ParseError("indices must be nonnegative");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string fmt(double x) {
  if (!std::isfinite(x)) return x > 0 ? "inf" : "nan";
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

std::string fmt(const std::optional<Triple>& t) {
  if (!t) return "none";
  return "(" + std::to_string(t->i) + ", " + std::to_string(t->j) + ", " + std::to_string(t->k) + ")";
}

void print_matrix(std::ostream& out, const DistanceMatrix& space) {
  for (std::size_t i = 0; i < space.size(); ++i) {
    out << space.labels()[i] << ':';
    for (double v : space.row(i)) out << ' ' << fmt(v);
    out << '\n';
  }
}

void print_holder(std::ostream& out, const HolderReport& r) {
  out << "exponent: " << fmt(r.exponent) << '\n' << "constant: " << fmt(r.constant) << '\n';
  if (r.witness) out << "witness: (" << r.witness->first << ", " << r.witness->second << ")\n";
}

struct Options {
  std::string format;
  std::string in;
  std::string cod;
  std::string map;
  std::string seq;
  std::string grid = "0.05:0.05:1.5";
  std::string levels = "1:6";
  std::string generator;
  std::string flavor = "euclidean";
  std::string kind;
  std::optional<double> exponent;
  std::optional<double> eps;
  std::optional<double> eta;
  std::optional<double> c_override;
  std::optional<long> source;
  double tol = kDefaultSlopeTolerance;
  int level = 0;
  int branching = 4;
  std::size_t n = 10;
  std::uint64_t seed = 0;
  bool raw = false;
  bool consecutive = false;
};

class Command {
 public:
  Command(const Options& o, std::istream& in, std::ostream& out, Format format, std::string echo)
      : o_(o), in_(in), out_(out), format_(format), echo_(std::move(echo)) {}

  void check() {
    const auto input = read_input(o_.in, in_);
    const DistanceMatrix space = io::space_from_json(input.doc);
    const AxiomAudit a = audit(space);
    if (text()) {
      out_ << "points: " << space.size() << '\n'
           << "quasi_constant: " << fmt(a.quasi_constant) << '\n'
           << "metric: " << yes_no(a.metric) << '\n'
           << "ultrametric: " << yes_no(a.ultrametric) << '\n'
           << "worst_triple: " << fmt(a.worst_triple) << '\n'
           << "worst_ultra_triple: " << fmt(a.worst_ultra_triple) << '\n'
           << "min_positive: " << fmt(a.min_positive) << '\n'
           << "diameter: " << fmt(a.diameter) << '\n';
      return;
    }
    emit(io::to_json(a), &input.text);
  }

  void snowflake() {
    const auto input = read_input(o_.in, in_);
    const SnowflakeResult r = mspace::snowflake(io::space_from_json(input.doc), *o_.exponent, !o_.raw);
    if (text()) {
      out_ << "exponent: " << fmt(r.exponent) << '\n'
           << "classification: " << to_string(r.classification) << '\n'
           << "bound: " << fmt(r.bound) << '\n';
      print_matrix(out_, r.space);
      return;
    }
    emit(io::to_json(r), &input.text);
  }

  void components() {
    const auto input = read_input(o_.in, in_);
    const ChainPartition p = chain_components(io::space_from_json(input.doc), *o_.eps);
    if (text()) {
      out_ << "epsilon: " << fmt(p.epsilon) << '\n'
           << "components: " << p.component_count << '\n'
           << "separation: " << fmt(p.separation) << '\n'
           << "component_of:";
      for (std::size_t c : p.component_of) out_ << ' ' << c;
      out_ << '\n';
      return;
    }
    emit(io::to_json(p), &input.text);
  }

  void dendrogram() {
    const auto input = read_input(o_.in, in_);
    const Dendrogram tree = mspace::dendrogram(io::space_from_json(input.doc));
    if (text()) {
      out_ << "leaves: " << tree.n << '\n';
      for (const Merge& m : tree.merges)
        out_ << fmt(m.height) << ": " << m.left << " + " << m.right << " -> " << m.parent << '\n';
      return;
    }
    emit(io::to_json(tree), &input.text);
  }

  void ultrafit() {
    const auto input = read_input(o_.in, in_);
    const UltrametricFit fit = subdominant_ultrametric(io::space_from_json(input.doc));
    if (text()) {
      print_matrix(out_, fit.u);
      return;
    }
    emit(io::to_json(fit.u), &input.text);
  }

  void metrize() {
    const auto input = read_input(o_.in, in_);
    const DistanceMatrix rho = io::space_from_json(input.doc);
    const MetrizationResult r = o_.eta ? chain_metric(rho, *o_.eta) : mspace::metrize(rho, o_.c_override);
    if (text()) {
      out_ << "eta: " << fmt(r.eta) << '\n'
           << "c_used: " << (r.c_used ? fmt(*r.c_used) : "none") << '\n'
           << "ratio_min: " << fmt(r.ratio_min) << '\n'
           << "ratio_max: " << fmt(r.ratio_max) << '\n';
      print_matrix(out_, r.delta);
      return;
    }
    emit(io::to_json(r), &input.text);
  }

  void holder() {
    const auto input = read_input(o_.in, in_);
    const double a = o_.exponent.value_or(1.0);
    HolderReport r;
    std::string digested = input.text;
    if (io::shape_of(input.doc) == io::Shape::Curve) {
      const SampledCurve curve = io::curve_from_json(input.doc);
      r = curve_holder_constant(curve, a, o_.consecutive ? PairScope::Consecutive : PairScope::All);
    } else {
      if (o_.map.empty()) throw ParseError("holder on a space needs --map");
      const DistanceMatrix dom = io::space_from_json(input.doc);
      std::optional<DistanceMatrix> cod;
      if (!o_.cod.empty()) {
        const auto cod_input = read_input(o_.cod, in_);
        cod = io::space_from_json(cod_input.doc);
        digested += cod_input.text;
      }
      r = holder_constant(dom, cod ? *cod : dom, PointMap{parse_indices(o_.map)}, a);
    }
    if (text()) {
      print_holder(out_, r);
      return;
    }
    emit(io::to_json(r), &digested);
  }

  void length() {
    const auto input = read_input(o_.in, in_);
    double value = 0.0;
    if (io::shape_of(input.doc) == io::Shape::Curve) {
      value = io::curve_from_json(input.doc).length();
    } else {
      const DistanceMatrix space = io::space_from_json(input.doc);
      std::vector<std::size_t> seq;
      if (o_.seq.empty())
        for (std::size_t i = 0; i < space.size(); ++i) seq.push_back(i);
      else
        seq = parse_indices(o_.seq);
      value = chain_length(space, seq);
    }
    if (text()) {
      out_ << std::fixed << std::setprecision(10) << value << '\n';
      return;
    }
    emit(Json{{"length", value}}, &input.text);
  }

  void critexp() {
    std::vector<SampledCurve> curves;
    std::vector<int> levels;
    std::optional<std::string> text_in;
    if (!o_.generator.empty()) {
      levels = parse_levels(o_.levels);
      for (int l : levels) {
        if (o_.generator == "koch")
          curves.push_back(koch(l));
        else if (o_.generator == "segment")
          curves.push_back(straight_segment(l, o_.branching));
        else if (o_.generator == "staircase")
          curves.push_back(cantor_staircase(l));
        else
          throw ParseError("unknown curve generator '" + o_.generator + "'");
      }
    } else {
      const auto input = read_input(o_.in, in_);
      text_in = input.text;
      const Json& p = io::payload(input.doc);
      if (io::shape_of(p) != io::Shape::CurveSet) throw ParseError("critexp input must be a curve set");
      if (!p.contains("levels") || !p["curves"].is_array()) throw ParseError("curve set needs levels and curves");
      try {
        levels = p["levels"].get<std::vector<int>>();
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
      }
      for (const Json& c : p["curves"]) curves.push_back(io::curve_from_json(c));
    }
    const auto est = critical_exponent(curves, levels, parse_grid(o_.grid), o_.tol);
    if (text()) {
      out_ << "estimate: " << (est.estimate ? fmt(*est.estimate) : "none") << '\n' << "exponent slope\n";
      for (std::size_t q = 0; q < est.grid.size(); ++q)
        out_ << fmt(est.grid[q]) << ' ' << fmt(est.growth_rates[q]) << '\n';
      return;
    }
    emit(io::to_json(est), text_in ? &*text_in : nullptr);
  }

  void gen() {
    const std::string& k = o_.kind;
    if (const auto g = parse_generator(k)) {
      const FractalGraph graph = fractal_graph(*g, o_.level);
      if (text()) {
        out_ << "generator: " << k << '\n'
             << "level: " << graph.level << '\n'
             << "vertices: " << graph.vertices.size() << '\n'
             << "edges: " << graph.edges.size() << '\n'
             << "cells: " << graph.cells.size() << '\n';
        return;
      }
      emit(io::to_json(graph), nullptr);
      return;
    }
    if (k == "koch" || k == "segment" || k == "staircase") {
      const SampledCurve c = k == "koch" ? koch(o_.level)
                             : k == "segment" ? straight_segment(o_.level, o_.branching)
                                              : cantor_staircase(o_.level);
      if (text()) {
        out_ << "curve: " << k << '\n' << "level: " << o_.level << '\n' << "samples: " << c.size() << '\n';
        return;
      }
      emit(io::to_json(c), nullptr);
      return;
    }
    std::optional<DistanceMatrix> space;
    if (k == "cantor") {
      const auto flavor = parse_cantor_flavor(o_.flavor);
      if (!flavor) throw ParseError("unknown flavor '" + o_.flavor + "'");
      space = cantor(o_.level, *flavor);
    } else if (k == "random" || k == "ultrametric") {
      if (o_.n == 0) throw ParseError("--n must be positive");
      Rng rng(o_.seed);
      space = k == "random" ? random_metric(rng, o_.n) : random_ultrametric(rng, o_.n);
    } else {
      throw ParseError("unknown generator '" + k + "'");
    }
    if (text()) {
      print_matrix(out_, *space);
      return;
    }
    emit(io::to_json(*space), nullptr);
  }

  void intrinsic() {
    const auto input = read_input(o_.in, in_);
    const FractalGraph graph = io::graph_from_json(input.doc);
    if (o_.source) {
      if (*o_.source < 0) throw ParseError("--source must be nonnegative");
      const auto dist = geodesic_distances(graph, static_cast<std::size_t>(*o_.source));
      Json d = Json::array();
      for (double v : dist) d.push_back(io::number(v));
      if (text()) {
        for (std::size_t i = 0; i < dist.size(); ++i) out_ << i << ": " << fmt(dist[i]) << '\n';
        return;
      }
      emit(Json{{"source", *o_.source}, {"distances", std::move(d)}}, &input.text);
      return;
    }
    const DistanceMatrix intr = intrinsic_metric(graph);
    const double ratio = distortion(intr, ambient_metric(graph));
    Json corner = Json::array();
    for (std::size_t a = 0; a < graph.corners.size(); ++a)
      for (std::size_t b = a + 1; b < graph.corners.size(); ++b)
        corner.push_back(Json::array({graph.corners[a], graph.corners[b], intr(graph.corners[a], graph.corners[b])}));
    if (text()) {
      out_ << "vertices: " << intr.size() << '\n' << "distortion: " << fmt(ratio) << '\n';
      for (const auto& c : corner) out_ << "corner " << c[0] << " - " << c[1] << ": " << fmt(c[2].get<double>()) << '\n';
      return;
    }
    emit(Json{{"distortion", ratio}, {"corner_distances", std::move(corner)}, {"space", io::to_json(intr)}},
         &input.text);
  }

 private:
  bool text() const { return format_ == Format::Text; }

  void emit(Json result, const std::string* input_text) {
    Json report{{"command", echo_},
                {"input_digest", input_text ? Json(digest(*input_text)) : Json(nullptr)},
                {"result", std::move(result)},
                {"version", std::string(kVersion)}};
    out_ << io::dump(report) << '\n';
  }

  const Options& o_;
  std::istream& in_;
  std::ostream& out_;
  Format format_;
  std::string echo_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const RunOptions& options) {
  Options o;
  CLI::App app{"Finite metric space analysis: axioms, chains, ultrametrics, metrization, Hölder orders, fractals",
               "mspace"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(kVersion));

  auto add_common = [&](CLI::App* sub, bool with_input) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    if (with_input) sub->add_option("--in", o.in, "Input file (default: stdin)");
  };

  auto* check = app.add_subcommand("check", "Audit metric, quasimetric and ultrametric axioms");
  add_common(check, true);

  auto* snow = app.add_subcommand("snowflake", "Raise every distance to a power");
  add_common(snow, true);
  snow->add_option("--exponent", o.exponent, "Snowflake exponent a > 0")->required();
  snow->add_flag("--raw", o.raw, "Allow non-metric input; classify from a fresh audit");

  auto* comps = app.add_subcommand("components", "Epsilon-chain components and separation");
  add_common(comps, true);
  comps->add_option("--eps", o.eps, "Chain scale epsilon > 0")->required();

  auto* dend = app.add_subcommand("dendrogram", "Single-linkage merge tree");
  add_common(dend, true);

  auto* ultra = app.add_subcommand("ultrafit", "Subdominant ultrametric");
  add_common(ultra, true);

  auto* metr = app.add_subcommand("metrize", "Chain metric comparable to a power of a quasimetric");
  add_common(metr, true);
  metr->add_option("--eta", o.eta, "Use this exponent instead of choosing one");
  metr->add_option("--c", o.c_override, "Quasimetric constant to derive eta from");

  auto* hold = app.add_subcommand("holder", "Hölder constant of a curve or of a map between spaces");
  add_common(hold, true);
  hold->add_option("--exponent", o.exponent, "Hölder exponent (default 1)");
  hold->add_flag("--consecutive", o.consecutive, "Curves: only consecutive sample pairs");
  hold->add_option("--map", o.map, "Spaces: image index of each domain point, comma separated");
  hold->add_option("--cod", o.cod, "Spaces: codomain file (default: the domain)");

  auto* len = app.add_subcommand("length", "Length of a curve or of a chain in a space");
  add_common(len, true);
  len->add_option("--seq", o.seq, "Spaces: chain as comma-separated indices (default: 0..n-1)");

  auto* crit = app.add_subcommand("critexp", "Critical Hölder exponent across refinement levels");
  add_common(crit, true);
  crit->add_option("--generator", o.generator, "koch, segment or staircase instead of --in");
  crit->add_option("--levels", o.levels, "Levels as A:B or a comma list (default 1:6)");
  crit->add_option("--grid", o.grid, "Exponent grid START:STEP:END (default 0.05:0.05:1.5)");
  crit->add_option("--tol", o.tol, "Slope tolerance per level (default 0.02)");
  crit->add_option("--branching", o.branching, "Refinement factor of the segment generator");

  auto* gen = app.add_subcommand("gen", "Generate a corpus space, curve or graph");
  add_common(gen, false);
  gen->add_option("kind", o.kind,
                  "gasket, carpet, sponge, koch, segment, staircase, cantor, random or ultrametric")
      ->required();
  gen->add_option("--level", o.level, "Construction level");
  gen->add_option("--flavor", o.flavor, "Cantor distance: euclidean or triadic");
  gen->add_option("--n", o.n, "Point count for random spaces");
  gen->add_option("--seed", o.seed, "Seed for random spaces");
  gen->add_option("--branching", o.branching, "Refinement factor of the segment generator");

  auto* intr = app.add_subcommand("intrinsic", "Geodesic metric of a fractal graph");
  add_common(intr, true);
  intr->add_option("--source", o.source, "Only distances from this vertex");

  std::vector<std::string> argv_store{"mspace"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "mspace: " << e.what() << '\n';
    return 2;
  }

  std::string echo;
  for (std::size_t i = 0; i < args.size(); ++i) echo += (i ? " " : "") + args[i];
  const Format format = o.format.empty() ? options.default_format : o.format == "text" ? Format::Text : Format::Json;
  Command cmd(o, in, out, format, echo);

  try {
    if (check->parsed()) cmd.check();
    else if (snow->parsed()) cmd.snowflake();
    else if (comps->parsed()) cmd.components();
    else if (dend->parsed()) cmd.dendrogram();
    else if (ultra->parsed()) cmd.ultrafit();
    else if (metr->parsed()) cmd.metrize();
    else if (hold->parsed()) cmd.holder();
    else if (len->parsed()) cmd.length();
    else if (crit->parsed()) cmd.critexp();
    else if (gen->parsed()) cmd.gen();
    else if (intr->parsed()) cmd.intrinsic();
  } catch (const ParseError& e) {
    err << "mspace: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "mspace: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace mspace::cli
