#pragma once

#include <optional>

#include "mspace/space.hpp"

namespace mspace {

/// Lower comparability constant guaranteed by the chain construction when
/// eta comes from choose_eta with the true quasimetric constant:
///   kChainLowerBound * rho^eta <= delta <= rho^eta.
inline constexpr double kChainLowerBound = 0.25;

struct MetrizationResult {
  double eta = 1.0;
  DistanceMatrix delta;
  // min / max over i != j of delta(i,j) / rho(i,j)^eta (both 1 for one point)
  double ratio_min = 1.0;
  double ratio_max = 1.0;
  // quasimetric constant eta was derived from; empty when eta was supplied
  std::optional<double> c_used;
};

/// min(1, ln 2 / ln(2c)). With this exponent rho^eta satisfies
/// rho^eta(x,z) <= 2 max(rho^eta(x,y), rho^eta(y,z)).
double choose_eta(double c);

/// Chain metric: delta(i,j) is the cheapest chain from i to j with hop
/// cost rho^eta. Computed by a dense Dijkstra from each source; delta(i,j)
/// for i < j is taken from source i, which makes every entry equal to a
/// left-to-right floating-point sum along its optimal chain.
MetrizationResult chain_metric(const DistanceMatrix& rho, double eta);

/// Infers c from the audit (clamped to >= 1) unless overridden, picks eta
/// and builds the chain metric. An override below the audited constant is
/// rejected since the lower bound would no longer be guaranteed. A metric
/// input with eta = 1 is returned as is.
MetrizationResult metrize(const DistanceMatrix& rho, std::optional<double> c_override = std::nullopt);

}  // namespace mspace
