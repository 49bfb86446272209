#include "mspace/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "mspace/cli.hpp"

namespace mspace::io {

namespace {

using cli::ParseError;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view token, std::size_t line) {
  const std::string buf(trim(token));
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size())
    throw ParseError("line " + std::to_string(line) + ": '" + buf + "' is not a number");
  return v;
}

Json parse_csv(std::string_view text) {
  Json matrix = Json::array();
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    Json row = Json::array();
    while (true) {
      const std::size_t comma = line.find(',');
      row.push_back(parse_real(line.substr(0, comma), line_no));
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    matrix.push_back(std::move(row));
  }
  if (matrix.empty()) throw ParseError("empty CSV input");
  return Json{{"matrix", std::move(matrix)}};
}

template <class T>
T get(const Json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

std::vector<Point> points_of(const Json& doc, const char* key) { return get<std::vector<Point>>(doc, key); }

Json matrix_json(const DistanceMatrix& space) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    Json row = Json::array();
    for (double v : space.row(i)) row.push_back(v);
    rows.push_back(std::move(row));
  }
  return rows;
}

Json point_json(const Point& p) {
  Json a = Json::array();
  for (double c : p) a.push_back(c);
  return a;
}

Json triple_json(const std::optional<Triple>& t) {
  if (!t) return nullptr;
  return Json::array({t->i, t->j, t->k});
}

}  // namespace

Json parse_document(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) throw ParseError("empty input");
  if (body.front() != '{' && body.front() != '[') return parse_csv(body);
  Json doc;
  try {
    doc = Json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (doc.is_array()) return Json{{"matrix", std::move(doc)}};
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  return doc;
}

const Json& payload(const Json& doc) {
  const Json* p = &doc;
  if (p->is_object() && p->contains("result") && p->contains("command")) p = &p->at("result");
  for (const char* key : {"space", "delta"})
    if (p->is_object() && p->contains(key) && p->at(key).is_object()) return p->at(key);
  return *p;
}

Shape shape_of(const Json& doc) {
  const Json& p = payload(doc);
  if (!p.is_object()) return Shape::Unknown;
  if (p.contains("matrix")) return Shape::Space;
  if (p.contains("params") && p.contains("points")) return Shape::Curve;
  if (p.contains("points")) return Shape::Space;
  if (p.contains("curves")) return Shape::CurveSet;
  if (p.contains("vertices") && p.contains("edges")) return Shape::Graph;
  return Shape::Unknown;
}

DistanceMatrix space_from_json(const Json& doc) {
  const Json& p = payload(doc);
  if (shape_of(p) != Shape::Space) throw ParseError("input is not a space document");
  if (p.contains("matrix")) {
    auto rows = get<std::vector<std::vector<double>>>(p, "matrix");
    std::optional<std::vector<std::string>> labels;
    if (p.contains("labels")) labels = get<std::vector<std::string>>(p, "labels");
    return validate_matrix(rows, std::move(labels));
  }
  const std::string norm_name = p.contains("norm") ? get<std::string>(p, "norm") : "euclidean";
  const auto norm = parse_norm(norm_name);
  if (!norm) throw ParseError("unknown norm '" + norm_name + "'");
  return from_point_cloud(points_of(p, "points"), *norm);
}

SampledCurve curve_from_json(const Json& doc) {
  const Json& p = payload(doc);
  if (shape_of(p) != Shape::Curve) throw ParseError("input is not a curve document");
  return SampledCurve::embedded(get<std::vector<double>>(p, "params"), points_of(p, "points"));
}

FractalGraph graph_from_json(const Json& doc) {
  const Json& p = payload(doc);
  if (shape_of(p) != Shape::Graph) throw ParseError("input is not a graph document");
  FractalGraph g;
  if (p.contains("generator")) {
    const auto name = get<std::string>(p, "generator");
    const auto gen = parse_generator(name);
    if (!gen) throw ParseError("unknown generator '" + name + "'");
    g.generator = *gen;
  }
  if (p.contains("level")) g.level = get<int>(p, "level");
  g.vertices = points_of(p, "vertices");
  for (const auto& e : get<std::vector<std::vector<double>>>(p, "edges")) {
    if (e.size() != 3) throw ParseError("edges are [u, v, w] triples");
    if (e[0] < 0 || e[1] < 0 || e[0] >= static_cast<double>(g.vertices.size()) ||
        e[1] >= static_cast<double>(g.vertices.size()))
      throw Error(Errc::IndexOutOfRange, "edge endpoint outside the vertex list");
    if (!(e[2] > 0.0) || !std::isfinite(e[2])) throw Error(Errc::NegativeEntry, "edge weights must be positive");
    const auto u = static_cast<std::size_t>(e[0]);
    const auto v = static_cast<std::size_t>(e[1]);
    g.edges.push_back({std::min(u, v), std::max(u, v), e[2]});
  }
  if (p.contains("corners")) g.corners = get<std::vector<std::size_t>>(p, "corners");
  for (std::size_t c : g.corners)
    if (c >= g.vertices.size()) throw Error(Errc::IndexOutOfRange, "corner outside the vertex list");
  if (p.contains("cell_adjacencies")) g.cell_adjacencies = get<std::size_t>(p, "cell_adjacencies");
  return g;
}

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

Json to_json(const DistanceMatrix& space) {
  return Json{{"labels", space.labels()}, {"matrix", matrix_json(space)}};
}

Json to_json(const AxiomAudit& a) {
  return Json{{"quasi_constant", a.quasi_constant},
              {"metric", a.metric},
              {"ultrametric", a.ultrametric},
              {"worst_triple", triple_json(a.worst_triple)},
              {"ultra_ratio", a.ultra_ratio},
              {"worst_ultra_triple", triple_json(a.worst_ultra_triple)},
              {"min_positive", a.min_positive},
              {"diameter", a.diameter}};
}

Json to_json(const SnowflakeResult& r) {
  return Json{{"exponent", r.exponent},
              {"classification", std::string(to_string(r.classification))},
              {"bound", r.bound},
              {"space", to_json(r.space)}};
}

Json to_json(const ChainPartition& p) {
  return Json{{"epsilon", p.epsilon}, {"component_of", p.component_of}, {"separation", number(p.separation)}};
}

Json to_json(const Dendrogram& tree) {
  Json merges = Json::array();
  for (const Merge& m : tree.merges)
    merges.push_back(Json{{"height", m.height}, {"left", m.left}, {"right", m.right}, {"parent", m.parent}});
  return Json{{"n", tree.n}, {"merges", std::move(merges)}};
}

Json to_json(const MetrizationResult& r) {
  return Json{{"eta", r.eta},
              {"c_used", r.c_used ? Json(*r.c_used) : Json(nullptr)},
              {"ratio_min", r.ratio_min},
              {"ratio_max", r.ratio_max},
              {"delta", to_json(r.delta)}};
}

Json to_json(const HolderReport& r) {
  Json witness = nullptr;
  if (r.witness) witness = Json::array({r.witness->first, r.witness->second});
  return Json{{"exponent", r.exponent}, {"constant", r.constant}, {"witness", std::move(witness)}};
}

Json to_json(const SampledCurve& curve) {
  Json points = Json::array();
  if (curve.is_embedded()) {
    for (const Point& p : curve.coords()) points.push_back(point_json(p));
    return Json{{"params", curve.params()}, {"points", std::move(points)}};
  }
  return Json{{"params", curve.params()}, {"indices", curve.indices()}, {"space", to_json(*curve.space())}};
}

Json to_json(const FractalGraph& g) {
  Json vertices = Json::array();
  for (const Point& p : g.vertices) vertices.push_back(point_json(p));
  Json edges = Json::array();
  for (const WeightedEdge& e : g.edges) edges.push_back(Json::array({e.u, e.v, e.w}));
  return Json{{"generator", std::string(to_string(g.generator))},
              {"level", g.level},
              {"vertices", std::move(vertices)},
              {"edges", std::move(edges)},
              {"corners", g.corners},
              {"cells", g.cells.size()},
              {"cell_adjacencies", g.cell_adjacencies}};
}

Json to_json(const CriticalExponentEstimate& e) {
  Json constants = Json::array();
  for (const auto& row : e.constants) {
    Json r = Json::array();
    for (double v : row) r.push_back(number(v));
    constants.push_back(std::move(r));
  }
  Json rates = Json::array();
  for (double v : e.growth_rates) rates.push_back(number(v));
  return Json{{"levels", e.levels},
              {"grid", e.grid},
              {"tolerance", e.tolerance},
              {"estimate", e.estimate ? Json(*e.estimate) : Json(nullptr)},
              {"growth_rates", std::move(rates)},
              {"constants", std::move(constants)}};
}

std::string dump(const Json& doc) { return doc.dump(); }

}  // namespace mspace::io
