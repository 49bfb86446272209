#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mspace/connectivity.hpp"
#include "mspace/corpus.hpp"
#include "mspace/holder.hpp"
#include "mspace/metrization.hpp"
#include "mspace/random.hpp"
#include "mspace/space.hpp"

namespace py = pybind11;
using namespace mspace;

namespace {

Norm norm_arg(const std::string& name) {
  if (const auto n = parse_norm(name)) return *n;
  throw py::value_error("unknown norm '" + name + "'");
}

py::object triple(const std::optional<Triple>& t) {
  if (!t) return py::none();
  return py::make_tuple(t->i, t->j, t->k);
}

py::object pair(const std::optional<IndexPair>& p) {
  if (!p) return py::none();
  return py::make_tuple(p->first, p->second);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite metric spaces: axiom audits, chain components, ultrametrics, metrization, Hölder orders";

  py::register_exception<Error>(m, "MspaceError", PyExc_ValueError);

  py::class_<DistanceMatrix>(m, "DistanceMatrix")
      .def(py::init([](const std::vector<std::vector<double>>& rows, std::optional<std::vector<std::string>> labels) {
             return validate_matrix(rows, std::move(labels));
           }),
           py::arg("rows"), py::arg("labels") = py::none())
      .def_static(
          "from_points",
          [](const std::vector<Point>& points, const std::string& norm) { return from_point_cloud(points, norm_arg(norm)); },
          py::arg("points"), py::arg("norm") = "euclidean")
      .def_property_readonly("size", &DistanceMatrix::size)
      .def_property_readonly("labels", &DistanceMatrix::labels)
      .def("__len__", &DistanceMatrix::size)
      .def("__getitem__",
           [](const DistanceMatrix& d, std::pair<std::size_t, std::size_t> ij) {
             if (ij.first >= d.size() || ij.second >= d.size()) throw py::index_error("index out of range");
             return d(ij.first, ij.second);
           })
      .def("to_list", &DistanceMatrix::to_rows)
      .def(py::self == py::self)
      .def("__repr__", [](const DistanceMatrix& d) { return "<DistanceMatrix n=" + std::to_string(d.size()) + ">"; });

  py::class_<AxiomAudit>(m, "AxiomAudit")
      .def_readonly("quasi_constant", &AxiomAudit::quasi_constant)
      .def_readonly("ultra_ratio", &AxiomAudit::ultra_ratio)
      .def_readonly("metric", &AxiomAudit::metric)
      .def_readonly("ultrametric", &AxiomAudit::ultrametric)
      .def_property_readonly("worst_triple", [](const AxiomAudit& a) { return triple(a.worst_triple); })
      .def_property_readonly("worst_ultra_triple", [](const AxiomAudit& a) { return triple(a.worst_ultra_triple); })
      .def_readonly("min_positive", &AxiomAudit::min_positive)
      .def_readonly("diameter", &AxiomAudit::diameter);

  py::class_<SnowflakeResult>(m, "SnowflakeResult")
      .def_readonly("exponent", &SnowflakeResult::exponent)
      .def_readonly("space", &SnowflakeResult::space)
      .def_property_readonly("classification",
                             [](const SnowflakeResult& r) { return std::string(to_string(r.classification)); })
      .def_readonly("bound", &SnowflakeResult::bound);

  m.def("audit", &audit, py::arg("space"));
  m.def("snowflake", &snowflake, py::arg("space"), py::arg("a"), py::arg("require_metric") = true);

  py::class_<ChainPartition>(m, "ChainPartition")
      .def_readonly("epsilon", &ChainPartition::epsilon)
      .def_readonly("component_of", &ChainPartition::component_of)
      .def_readonly("component_count", &ChainPartition::component_count)
      .def_readonly("separation", &ChainPartition::separation);

  py::class_<Merge>(m, "Merge")
      .def_readonly("height", &Merge::height)
      .def_readonly("left", &Merge::left)
      .def_readonly("right", &Merge::right)
      .def_readonly("parent", &Merge::parent)
      .def("__repr__", [](const Merge& x) {
        return "Merge(" + std::to_string(x.height) + ", " + std::to_string(x.left) + ", " + std::to_string(x.right) +
               ", " + std::to_string(x.parent) + ")";
      });

  py::class_<Dendrogram>(m, "Dendrogram")
      .def_readonly("n", &Dendrogram::n)
      .def_readonly("merges", &Dendrogram::merges)
      .def("cut", &Dendrogram::cut, py::arg("epsilon"));

  m.def("chain_components", &chain_components, py::arg("space"), py::arg("epsilon"));
  m.def("separation_check", &separation_check, py::arg("space"), py::arg("partition"));
  m.def("is_chain_connected", &is_chain_connected, py::arg("space"), py::arg("epsilon"));
  m.def("ball", &ball, py::arg("space"), py::arg("center"), py::arg("epsilon"));
  m.def(
      "minimum_spanning_tree",
      [](const DistanceMatrix& d) {
        std::vector<std::tuple<std::size_t, std::size_t, double>> out;
        for (const auto& e : minimum_spanning_tree(d)) out.emplace_back(e.u, e.v, e.w);
        return out;
      },
      py::arg("space"));
  m.def("dendrogram", &dendrogram, py::arg("space"));
  m.def(
      "subdominant_ultrametric", [](const DistanceMatrix& d) { return subdominant_ultrametric(d).u; },
      py::arg("space"));

  py::class_<MetrizationResult>(m, "MetrizationResult")
      .def_readonly("eta", &MetrizationResult::eta)
      .def_readonly("delta", &MetrizationResult::delta)
      .def_readonly("ratio_min", &MetrizationResult::ratio_min)
      .def_readonly("ratio_max", &MetrizationResult::ratio_max)
      .def_readonly("c_used", &MetrizationResult::c_used);

  m.def("choose_eta", &choose_eta, py::arg("c"));
  m.def("chain_metric", &chain_metric, py::arg("rho"), py::arg("eta"));
  m.def("metrize", &metrize, py::arg("rho"), py::arg("c") = py::none());

  py::class_<HolderReport>(m, "HolderReport")
      .def_readonly("exponent", &HolderReport::exponent)
      .def_readonly("constant", &HolderReport::constant)
      .def_property_readonly("witness", [](const HolderReport& r) { return pair(r.witness); });

  m.def(
      "holder_constant",
      [](const DistanceMatrix& dom, const DistanceMatrix& cod, std::vector<std::size_t> image, double a) {
        return holder_constant(dom, cod, PointMap{std::move(image)}, a);
      },
      py::arg("dom"), py::arg("cod"), py::arg("image"), py::arg("a"));
  m.def("distance_to_point", &distance_to_point, py::arg("space"), py::arg("p"));
  m.def(
      "chain_length",
      [](const DistanceMatrix& d, const std::vector<std::size_t>& seq) { return chain_length(d, seq); },
      py::arg("space"), py::arg("sequence"));
  m.def(
      "polyline_length", [](const std::vector<Point>& pts) { return chain_length(pts); }, py::arg("points"));

  py::class_<SampledCurve>(m, "SampledCurve")
      .def(py::init(&SampledCurve::embedded), py::arg("params"), py::arg("points"))
      .def_property_readonly("params", &SampledCurve::params)
      .def_property_readonly("points", &SampledCurve::coords)
      .def_property_readonly("indices", &SampledCurve::indices)
      .def_property_readonly("is_embedded", &SampledCurve::is_embedded)
      .def("__len__", &SampledCurve::size)
      .def("distance", &SampledCurve::distance, py::arg("k"), py::arg("l"))
      .def("span", &SampledCurve::span)
      .def("length", &SampledCurve::length);

  m.def(
      "natural_parametrization",
      [](const DistanceMatrix& d, const std::vector<std::size_t>& seq) { return natural_parametrization(d, seq); },
      py::arg("space"), py::arg("sequence"));
  m.def(
      "natural_parametrization_points", [](const std::vector<Point>& pts) { return natural_parametrization(pts); },
      py::arg("points"));
  m.def(
      "curve_holder_constant",
      [](const SampledCurve& c, double a, bool consecutive) {
        return curve_holder_constant(c, a, consecutive ? PairScope::Consecutive : PairScope::All);
      },
      py::arg("curve"), py::arg("a"), py::arg("consecutive") = false);

  py::class_<CriticalExponentEstimate>(m, "CriticalExponentEstimate")
      .def_readonly("levels", &CriticalExponentEstimate::levels)
      .def_readonly("grid", &CriticalExponentEstimate::grid)
      .def_readonly("constants", &CriticalExponentEstimate::constants)
      .def_readonly("growth_rates", &CriticalExponentEstimate::growth_rates)
      .def_readonly("tolerance", &CriticalExponentEstimate::tolerance)
      .def_readonly("estimate", &CriticalExponentEstimate::estimate);

  m.def("exponent_grid", &exponent_grid, py::arg("start"), py::arg("step"), py::arg("end"));
  m.def(
      "critical_exponent",
      [](const std::vector<SampledCurve>& curves, const std::vector<int>& levels,
         std::optional<std::vector<double>> grid, double tol) {
        const auto g = grid ? *grid : default_exponent_grid();
        return critical_exponent(curves, levels, g, tol);
      },
      py::arg("curves"), py::arg("levels"), py::arg("grid") = py::none(), py::arg("tol") = kDefaultSlopeTolerance);

  py::class_<FractalGraph>(m, "FractalGraph")
      .def_property_readonly("generator", [](const FractalGraph& g) { return std::string(to_string(g.generator)); })
      .def_readonly("level", &FractalGraph::level)
      .def_readonly("vertices", &FractalGraph::vertices)
      .def_property_readonly("edges",
                             [](const FractalGraph& g) {
                               std::vector<std::tuple<std::size_t, std::size_t, double>> out;
                               for (const auto& e : g.edges) out.emplace_back(e.u, e.v, e.w);
                               return out;
                             })
      .def_readonly("corners", &FractalGraph::corners)
      .def_readonly("cells", &FractalGraph::cells)
      .def_readonly("cell_adjacencies", &FractalGraph::cell_adjacencies);

  m.def("gasket", &gasket, py::arg("level"));
  m.def("carpet", &carpet, py::arg("level"));
  m.def("sponge", &sponge, py::arg("level"));
  m.def("koch", &koch, py::arg("level"));
  m.def("straight_segment", &straight_segment, py::arg("level"), py::arg("branching") = 4);
  m.def("cantor_staircase", &cantor_staircase, py::arg("level"));
  m.def("cantor_endpoints", &cantor_endpoints, py::arg("level"));
  m.def(
      "cantor",
      [](int level, const std::string& flavor) {
        const auto f = parse_cantor_flavor(flavor);
        if (!f) throw py::value_error("unknown flavor '" + flavor + "'");
        return cantor(level, *f);
      },
      py::arg("level"), py::arg("flavor") = "euclidean");
  m.def("geodesic_distances", &geodesic_distances, py::arg("graph"), py::arg("source"));
  m.def("intrinsic_metric", &intrinsic_metric, py::arg("graph"));
  m.def("ambient_metric", &ambient_metric, py::arg("graph"));
  m.def("distortion", &distortion, py::arg("intrinsic"), py::arg("ambient"));

  m.def(
      "random_metric",
      [](std::uint64_t seed, std::size_t n) {
        Rng rng(seed);
        return random_metric(rng, n);
      },
      py::arg("seed"), py::arg("n"));
  m.def(
      "random_ultrametric",
      [](std::uint64_t seed, std::size_t n) {
        Rng rng(seed);
        return random_ultrametric(rng, n);
      },
      py::arg("seed"), py::arg("n"));
}
