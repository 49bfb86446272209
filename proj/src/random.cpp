#include "mspace/random.hpp"

#include <algorithm>

namespace mspace {

std::vector<Point> random_point_cloud(Rng& rng, std::size_t n, std::size_t dim) {
  std::vector<Point> pts(n, Point(dim));
  for (auto& p : pts)
    for (double& c : p) c = rng.uniform();
  return pts;
}

DistanceMatrix random_metric(Rng& rng, std::size_t n) {
  if (rng.uniform() < 0.5) {
    const std::size_t dim = 1 + rng.index(4);
    return from_point_cloud(random_point_cloud(rng, n, dim));
  }

  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d[i * n + j] = d[j * n + i] = rng.uniform(0.1, 1.0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
  // closure sums may differ in the last bit between (i,j) and (j,i)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d[j * n + i] = d[i * n + j];
  return validate_matrix(n, d);
}

DistanceMatrix random_ultrametric(Rng& rng, std::size_t n) {
  std::vector<std::vector<std::size_t>> clusters(n);
  for (std::size_t i = 0; i < n; ++i) clusters[i] = {i};
  std::vector<double> u(n * n, 0.0);
  double height = 0.0;
  while (clusters.size() > 1) {
    height += rng.uniform(0.05, 1.0);
    const std::size_t a = rng.index(clusters.size());
    std::size_t b = rng.index(clusters.size() - 1);
    if (b >= a) ++b;
    for (std::size_t x : clusters[a])
      for (std::size_t y : clusters[b]) u[x * n + y] = u[y * n + x] = height;
    clusters[a].insert(clusters[a].end(), clusters[b].begin(), clusters[b].end());
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(b));
  }
  return validate_matrix(n, u);
}

}  // namespace mspace
