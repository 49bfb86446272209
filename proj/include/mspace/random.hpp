#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "mspace/space.hpp"

namespace mspace {

/// Seeded generator with platform-independent output: mt19937_64 words are
/// mapped to doubles by hand instead of through <random> distributions,
/// whose results differ between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // uniform in [0, n)
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }

 private:
  std::mt19937_64 engine_;
};

std::vector<Point> random_point_cloud(Rng& rng, std::size_t n, std::size_t dim);

/// Alternates between Euclidean point clouds in [0,1]^dim (dim 1..4) and
/// shortest-path closures of random complete graphs with weights in [0.1, 1].
DistanceMatrix random_metric(Rng& rng, std::size_t n);

/// Random agglomerative hierarchy with strictly increasing merge heights.
DistanceMatrix random_ultrametric(Rng& rng, std::size_t n);

}  // namespace mspace
