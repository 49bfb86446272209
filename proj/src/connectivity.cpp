#include "mspace/connectivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "mspace/union_find.hpp"

namespace mspace {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_epsilon(double epsilon) {
  if (!(epsilon > 0.0)) throw Error(Errc::NonPositiveEpsilon, "epsilon must be positive");
}

// Relabels union-find roots so ids follow the smallest member index.
std::vector<std::size_t> canonical_labels(UnionFind& sets, std::size_t* count) {
  const std::size_t n = sets.size();
  std::vector<std::size_t> id_of_root(n, n);
  std::vector<std::size_t> out(n);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = sets.find(i);
    if (id_of_root[r] == n) id_of_root[r] = next++;
    out[i] = id_of_root[r];
  }
  if (count) *count = next;
  return out;
}

double cross_minimum(const DistanceMatrix& space, std::span<const std::size_t> component_of) {
  double best = kInf;
  const std::size_t n = space.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto ri = space.row(i);
    for (std::size_t j = i + 1; j < n; ++j)
      if (component_of[i] != component_of[j]) best = std::min(best, ri[j]);
  }
  return best;
}

auto edge_key(const WeightedEdge& e) { return std::tie(e.w, e.u, e.v); }

}  // namespace

ChainPartition chain_components(const DistanceMatrix& space, double epsilon) {
  require_epsilon(epsilon);
  const std::size_t n = space.size();
  UnionFind sets(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ri = space.row(i);
    for (std::size_t j = i + 1; j < n; ++j)
      if (ri[j] < epsilon) sets.unite(i, j);
  }

  ChainPartition out;
  out.epsilon = epsilon;
  out.component_of = canonical_labels(sets, &out.component_count);
  out.separation = out.component_count > 1 ? cross_minimum(space, out.component_of) : kInf;
  return out;
}

double separation_check(const DistanceMatrix& space, const ChainPartition& partition) {
  if (partition.component_of.size() != space.size())
    throw Error(Errc::PartitionSpaceMismatch, "partition covers a different number of points");
  return cross_minimum(space, partition.component_of);
}

bool is_chain_connected(const DistanceMatrix& space, double epsilon) {
  return chain_components(space, epsilon).component_count == 1;
}

std::vector<std::size_t> ball(const DistanceMatrix& space, std::size_t center, double epsilon) {
  require_epsilon(epsilon);
  if (center >= space.size()) throw Error(Errc::IndexOutOfRange, "center " + std::to_string(center));
  std::vector<std::size_t> out;
  const auto row = space.row(center);
  for (std::size_t x = 0; x < space.size(); ++x)
    if (row[x] < epsilon) out.push_back(x);
  return out;
}

std::vector<WeightedEdge> minimum_spanning_tree(const DistanceMatrix& space) {
  // Dense Prim. Edge keys (w, u, v) are a strict total order, so the tree is
  // unique and equals the one Kruskal would build with the same tie-break.
  const std::size_t n = space.size();
  std::vector<WeightedEdge> tree;
  if (n < 2) return tree;
  tree.reserve(n - 1);

  std::vector<bool> inside(n, false);
  std::vector<WeightedEdge> best(n, WeightedEdge{0, 0, kInf});
  inside[0] = true;
  for (std::size_t x = 1; x < n; ++x) best[x] = {0, x, space(0, x)};

  for (std::size_t step = 1; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t x = 0; x < n; ++x) {
      if (inside[x]) continue;
      if (pick == n || edge_key(best[x]) < edge_key(best[pick])) pick = x;
    }
    inside[pick] = true;
    tree.push_back(best[pick]);
    const auto row = space.row(pick);
    for (std::size_t x = 0; x < n; ++x) {
      if (inside[x]) continue;
      const WeightedEdge cand{std::min(pick, x), std::max(pick, x), row[x]};
      if (edge_key(cand) < edge_key(best[x])) best[x] = cand;
    }
  }

  std::sort(tree.begin(), tree.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) { return edge_key(a) < edge_key(b); });
  return tree;
}

Dendrogram dendrogram(const DistanceMatrix& space) {
  const std::size_t n = space.size();
  Dendrogram out;
  out.n = n;
  UnionFind sets(n);
  std::vector<std::size_t> cluster_of_root(n);
  for (std::size_t i = 0; i < n; ++i) cluster_of_root[i] = i;

  std::size_t next = n;
  for (const WeightedEdge& e : minimum_spanning_tree(space)) {
    const std::size_t left = cluster_of_root[sets.find(e.u)];
    const std::size_t right = cluster_of_root[sets.find(e.v)];
    sets.unite(e.u, e.v);
    cluster_of_root[sets.find(e.u)] = next;
    out.merges.push_back({e.w, left, right, next});
    ++next;
  }
  return out;
}

std::vector<std::size_t> Dendrogram::cut(double epsilon) const {
  require_epsilon(epsilon);
  // Each merge joins the two clusters' leaves; track a representative leaf
  // per cluster id.
  std::vector<std::size_t> leaf(n + merges.size());
  for (std::size_t i = 0; i < n; ++i) leaf[i] = i;
  UnionFind sets(n);
  for (const Merge& m : merges) {
    leaf[m.parent] = leaf[m.left];
    if (m.height < epsilon) sets.unite(leaf[m.left], leaf[m.right]);
  }
  return canonical_labels(sets, nullptr);
}

UltrametricFit subdominant_ultrametric(const DistanceMatrix& space) {
  const std::size_t n = space.size();
  std::vector<double> u(n * n, 0.0);
  UnionFind sets(n);
  std::vector<std::vector<std::size_t>> members(n);
  for (std::size_t i = 0; i < n; ++i) members[i] = {i};

  // Edges arrive in ascending weight, so the first edge joining two points'
  // clusters is the largest hop on their tree path.
  for (const WeightedEdge& e : minimum_spanning_tree(space)) {
    std::size_t a = sets.find(e.u);
    std::size_t b = sets.find(e.v);
    for (std::size_t x : members[a])
      for (std::size_t y : members[b]) {
        u[x * n + y] = e.w;
        u[y * n + x] = e.w;
      }
    sets.unite(a, b);
    const std::size_t root = sets.find(a);
    const std::size_t other = root == a ? b : a;
    auto& keep = members[root];
    keep.insert(keep.end(), members[other].begin(), members[other].end());
    members[other].clear();
    members[other].shrink_to_fit();
  }
  return {validate_matrix(n, u, space.labels())};
}

}  // namespace mspace
