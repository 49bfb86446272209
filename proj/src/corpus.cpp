#include "mspace/corpus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <tuple>

namespace mspace {

namespace {

void require_level(int level, int max, const char* what) {
  if (level < 0 || level > max)
    throw Error(Errc::LevelOutOfRange,
                std::string(what) + " level must lie in 0.." + std::to_string(max));
}

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Kept cells of the carpet (Dim = 2) or sponge (Dim = 3) at resolution
// 3^level: a cell is removed when, at some ternary digit, at least two of its
// coordinates sit in the middle third.
template <int Dim>
bool keep_cell(std::array<std::size_t, Dim> c) {
  while (true) {
    bool any = false;
    int middle = 0;
    for (auto& x : c) {
      any = any || x != 0;
      middle += x % 3 == 1;
      x /= 3;
    }
    if (middle >= 2) return false;
    if (!any) return true;
  }
}

template <int Dim>
FractalGraph cube_skeleton(Generator generator, int level) {
  const std::size_t cells_per_side = ipow(3, level);
  const std::size_t L = cells_per_side + 1;
  const double h = 1.0 / static_cast<double>(cells_per_side);

  std::array<std::size_t, Dim> stride{};
  stride[0] = 1;
  for (int k = 1; k < Dim; ++k) stride[k] = stride[k - 1] * L;
  const std::size_t lattice = stride[Dim - 1] * L;

  std::vector<bool> used(lattice, false);
  std::vector<bool> edge_used(lattice * Dim, false);
  FractalGraph g;
  g.generator = generator;
  g.level = level;

  const std::size_t total_cells = ipow(cells_per_side, Dim);
  std::vector<bool> kept(total_cells, false);
  for (std::size_t id = 0; id < total_cells; ++id) {
    std::array<std::size_t, Dim> c{};
    std::size_t rest = id;
    for (int k = 0; k < Dim; ++k) {
      c[k] = rest % cells_per_side;
      rest /= cells_per_side;
    }
    if (!keep_cell<Dim>(c)) continue;
    kept[id] = true;

    Point center(Dim);
    for (int k = 0; k < Dim; ++k) center[k] = (static_cast<double>(c[k]) + 0.5) * h;
    g.cells.push_back(std::move(center));

    std::size_t base = 0;
    for (int k = 0; k < Dim; ++k) base += c[k] * stride[k];
    for (std::size_t mask = 0; mask < (std::size_t{1} << Dim); ++mask) {
      std::size_t corner = base;
      for (int k = 0; k < Dim; ++k)
        if (mask >> k & 1) corner += stride[k];
      used[corner] = true;
      for (int k = 0; k < Dim; ++k)
        if (!(mask >> k & 1)) edge_used[corner * Dim + k] = true;
    }
  }

  for (std::size_t id = 0; id < total_cells; ++id) {
    if (!kept[id]) continue;
    std::size_t step = 1;
    std::size_t rest = id;
    for (int k = 0; k < Dim; ++k) {
      const std::size_t ck = rest % cells_per_side;
      rest /= cells_per_side;
      if (ck + 1 < cells_per_side && kept[id + step]) ++g.cell_adjacencies;
      step *= cells_per_side;
    }
  }

  std::vector<std::size_t> vid(lattice, 0);
  for (std::size_t p = 0; p < lattice; ++p) {
    if (!used[p]) continue;
    vid[p] = g.vertices.size();
    Point x(Dim);
    std::size_t rest = p;
    for (int k = 0; k < Dim; ++k) {
      x[k] = static_cast<double>(rest % L) / static_cast<double>(cells_per_side);
      rest /= L;
    }
    g.vertices.push_back(std::move(x));
  }
  for (std::size_t p = 0; p < lattice; ++p)
    for (int k = 0; k < Dim; ++k)
      if (edge_used[p * Dim + k]) g.edges.push_back({vid[p], vid[p + stride[k]], h});

  for (std::size_t mask = 0; mask < (std::size_t{1} << Dim); ++mask) {
    std::size_t corner = 0;
    for (int k = 0; k < Dim; ++k)
      if (mask >> k & 1) corner += cells_per_side * stride[k];
    g.corners.push_back(vid[corner]);
  }
  return g;
}

}  // namespace

std::string_view to_string(Generator g) noexcept {
  switch (g) {
    case Generator::Gasket: return "gasket";
    case Generator::Carpet: return "carpet";
    case Generator::Sponge: return "sponge";
  }
  return "gasket";
}

std::optional<Generator> parse_generator(std::string_view name) noexcept {
  if (name == "gasket") return Generator::Gasket;
  if (name == "carpet") return Generator::Carpet;
  if (name == "sponge") return Generator::Sponge;
  return std::nullopt;
}

std::string_view to_string(CantorFlavor f) noexcept {
  return f == CantorFlavor::Triadic ? "triadic" : "euclidean";
}

std::optional<CantorFlavor> parse_cantor_flavor(std::string_view name) noexcept {
  if (name == "euclidean") return CantorFlavor::Euclidean;
  if (name == "triadic") return CantorFlavor::Triadic;
  return std::nullopt;
}

FractalGraph gasket(int level) {
  require_level(level, kMaxGasketLevel, "gasket");
  // Skew lattice coordinates (a, b) map to (a + b/2, b sqrt(3)/2) * 2^-level.
  // An upward triangle is named by its lower-left lattice point.
  const std::size_t N = ipow(2, level);
  const std::size_t L = N + 1;
  const double h = std::ldexp(1.0, -level);

  std::vector<std::pair<std::size_t, std::size_t>> leaves;
  std::function<void(std::size_t, std::size_t, std::size_t)> split = [&](std::size_t a, std::size_t b,
                                                                        std::size_t size) {
    if (size == 1) {
      leaves.emplace_back(a, b);
      return;
    }
    const std::size_t half = size / 2;
    split(a, b, half);
    split(a + half, b, half);
    split(a, b + half, half);
  };
  split(0, 0, N);

  auto at = [L](std::size_t a, std::size_t b) { return b * L + a; };
  std::vector<bool> used(L * L, false);
  for (auto [a, b] : leaves) {
    used[at(a, b)] = true;
    used[at(a + 1, b)] = true;
    used[at(a, b + 1)] = true;
  }

  FractalGraph g;
  g.generator = Generator::Gasket;
  g.level = level;
  std::vector<std::size_t> vid(L * L, 0);
  const double rise = std::sqrt(3.0) / 2.0;
  for (std::size_t b = 0; b < L; ++b)
    for (std::size_t a = 0; a + b < L; ++a) {
      if (!used[at(a, b)]) continue;
      vid[at(a, b)] = g.vertices.size();
      g.vertices.push_back({(static_cast<double>(a) + 0.5 * static_cast<double>(b)) * h,
                            static_cast<double>(b) * rise * h});
    }

  for (auto [a, b] : leaves) {
    const std::size_t p = vid[at(a, b)], q = vid[at(a + 1, b)], r = vid[at(a, b + 1)];
    g.edges.push_back({std::min(p, q), std::max(p, q), h});
    g.edges.push_back({std::min(p, r), std::max(p, r), h});
    g.edges.push_back({std::min(q, r), std::max(q, r), h});
    g.cells.push_back({(static_cast<double>(a) + 0.5 * static_cast<double>(b) + 0.5) * h,
                       (static_cast<double>(b) + 1.0 / 3.0) * rise * h});
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const WeightedEdge& x, const WeightedEdge& y) { return std::tie(x.u, x.v) < std::tie(y.u, y.v); });
  g.corners = {vid[at(0, 0)], vid[at(N, 0)], vid[at(0, N)]};
  return g;
}

FractalGraph carpet(int level) {
  require_level(level, kMaxCarpetLevel, "carpet");
  return cube_skeleton<2>(Generator::Carpet, level);
}

FractalGraph sponge(int level) {
  require_level(level, kMaxSpongeLevel, "sponge");
  return cube_skeleton<3>(Generator::Sponge, level);
}

FractalGraph fractal_graph(Generator generator, int level) {
  switch (generator) {
    case Generator::Gasket: return gasket(level);
    case Generator::Carpet: return carpet(level);
    case Generator::Sponge: return sponge(level);
  }
  return gasket(level);
}

SampledCurve koch(int level) {
  require_level(level, kMaxKochLevel, "koch");
  // Vertices live on the triangular lattice spanned by e = (3^-n, 0) and
  // w = e rotated by 60 degrees; (u, v) stands for u e + v w.
  using Lattice = std::array<long long, 2>;
  const auto rotate = [](Lattice d) { return Lattice{-d[1], d[0] + d[1]}; };
  const long long side = static_cast<long long>(ipow(3, level));
  std::vector<Lattice> walk{{0, 0}, {side, 0}};
  for (int n = 0; n < level; ++n) {
    std::vector<Lattice> next;
    next.reserve(4 * (walk.size() - 1) + 1);
    for (std::size_t k = 0; k + 1 < walk.size(); ++k) {
      const Lattice p = walk[k];
      const Lattice d{(walk[k + 1][0] - p[0]) / 3, (walk[k + 1][1] - p[1]) / 3};
      const Lattice a{p[0] + d[0], p[1] + d[1]};
      const Lattice r = rotate(d);
      next.push_back(p);
      next.push_back(a);
      next.push_back({a[0] + r[0], a[1] + r[1]});
      next.push_back({a[0] + d[0], a[1] + d[1]});
    }
    next.push_back(walk.back());
    walk = std::move(next);
  }
  const double scale = 2.0 * static_cast<double>(side);
  const double root3 = std::sqrt(3.0);
  std::vector<Point> pts;
  pts.reserve(walk.size());
  for (const Lattice& q : walk)
    pts.push_back({static_cast<double>(2 * q[0] + q[1]) / scale, static_cast<double>(q[1]) * root3 / scale});
  std::vector<double> params(pts.size());
  for (std::size_t k = 0; k < params.size(); ++k) params[k] = std::ldexp(static_cast<double>(k), -2 * level);
  return SampledCurve::embedded(std::move(params), std::move(pts));
}

SampledCurve straight_segment(int level, int branching) {
  if (branching < 2) throw Error(Errc::InvalidGrid, "branching must be at least 2");
  if (level < 0 || std::pow(static_cast<double>(branching), level) > 65536.0)
    throw Error(Errc::LevelOutOfRange, "segment refinement limited to 65536 steps");
  const std::size_t N = ipow(static_cast<std::size_t>(branching), level);
  std::vector<double> params(N + 1);
  std::vector<Point> pts(N + 1);
  for (std::size_t k = 0; k <= N; ++k) {
    params[k] = static_cast<double>(k) / static_cast<double>(N);
    pts[k] = {params[k], 0.0};
  }
  return SampledCurve::embedded(std::move(params), std::move(pts));
}

std::vector<double> cantor_endpoints(int level) {
  require_level(level, kMaxCantorLevel, "cantor");
  const std::size_t count = ipow(2, level);
  const double denom = static_cast<double>(ipow(3, level));
  std::vector<double> x(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t num = 0;
    for (int i = level - 1; i >= 0; --i) num = num * 3 + 2 * (k >> i & 1);
    x[k] = static_cast<double>(num) / denom;
  }
  return x;
}

SampledCurve cantor_staircase(int level) {
  const std::vector<double> left = cantor_endpoints(level);
  const double width = 1.0 / static_cast<double>(ipow(3, level));
  const double rise = std::ldexp(1.0, -level);
  std::vector<double> params;
  std::vector<Point> pts;
  for (std::size_t k = 0; k < left.size(); ++k) {
    params.push_back(left[k]);
    pts.push_back({static_cast<double>(k) * rise});
    params.push_back(k + 1 == left.size() ? 1.0 : left[k] + width);
    pts.push_back({static_cast<double>(k + 1) * rise});
  }
  return SampledCurve::embedded(std::move(params), std::move(pts));
}

DistanceMatrix cantor(int level, CantorFlavor flavor) {
  const std::vector<double> x = cantor_endpoints(level);
  const std::size_t n = x.size();
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double v = x[j] - x[i];
      if (flavor == CantorFlavor::Triadic) {
        // shared leading address bits = depth of the deepest common interval
        int depth = 0;
        while (depth < level && ((i >> (level - 1 - depth)) & 1) == ((j >> (level - 1 - depth)) & 1)) ++depth;
        v = 1.0 / static_cast<double>(ipow(3, depth));
      }
      d[i * n + j] = v;
      d[j * n + i] = v;
    }
  return validate_matrix(n, d);
}

std::vector<double> geodesic_distances(const FractalGraph& graph, std::size_t source) {
  const std::size_t n = graph.vertices.size();
  if (source >= n) throw Error(Errc::IndexOutOfRange, "source " + std::to_string(source));
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
  for (const WeightedEdge& e : graph.edges) {
    adj[e.u].emplace_back(e.v, e.w);
    adj[e.v].emplace_back(e.u, e.w);
  }

  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    auto [dv, v] = heap.top();
    heap.pop();
    if (dv > dist[v]) continue;
    for (auto [x, w] : adj[v]) {
      const double cand = dv + w;
      if (cand < dist[x]) {
        dist[x] = cand;
        heap.emplace(cand, x);
      }
    }
  }
  return dist;
}

DistanceMatrix intrinsic_metric(const FractalGraph& graph) {
  const std::size_t n = graph.vertices.size();
  std::vector<double> d(n * n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    const std::vector<double> dist = geodesic_distances(graph, s);
    for (std::size_t j = s + 1; j < n; ++j) {
      if (!std::isfinite(dist[j]))
        throw Error(Errc::DisconnectedGraph, "no path between " + std::to_string(s) + " and " + std::to_string(j));
      d[s * n + j] = dist[j];
      d[j * n + s] = dist[j];
    }
  }
  return validate_matrix(n, d);
}

DistanceMatrix ambient_metric(const FractalGraph& graph) { return from_point_cloud(graph.vertices); }

double distortion(const DistanceMatrix& intrinsic, const DistanceMatrix& ambient) {
  if (intrinsic.size() != ambient.size() || intrinsic.labels() != ambient.labels())
    throw Error(Errc::LabelMismatch, "intrinsic and ambient spaces must share labels");
  double worst = 1.0;
  const std::size_t n = intrinsic.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) worst = std::max(worst, intrinsic(i, j) / ambient(i, j));
  return worst;
}

}  // namespace mspace
