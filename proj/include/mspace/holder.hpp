#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mspace/space.hpp"

namespace mspace {

/// A total map between two finite spaces, by index.
struct PointMap {
  std::vector<std::size_t> image;
};

using IndexPair = std::pair<std::size_t, std::size_t>;

/// Smallest L with d2(f(x), f(y)) <= L * d1(x, y)^a over the sampled pairs.
struct HolderReport {
  double exponent = 1.0;
  double constant = 0.0;
  std::optional<IndexPair> witness;  // lexicographically smallest maximizer
};

HolderReport holder_constant(const DistanceMatrix& dom, const DistanceMatrix& cod, const PointMap& f, double a);

/// f_p(x) = d(x, p).
std::vector<double> distance_to_point(const DistanceMatrix& space, std::size_t p);

double chain_length(const DistanceMatrix& space, std::span<const std::size_t> sequence);
double chain_length(std::span<const Point> points);

/// A discrete curve: strictly increasing parameters with one point each,
/// either Euclidean coordinates or indices into a finite space.
///
/// Parameter gaps are kept as per-step increments and |t_l - t_k| is
/// evaluated as the running sum of the increments between k and l. For a
/// naturally parametrized chain the consecutive gaps are then bitwise equal
/// to the hop distances.
class SampledCurve {
 public:
  static SampledCurve embedded(std::vector<double> params, std::vector<Point> coords);
  static SampledCurve in_space(std::vector<double> params, std::vector<std::size_t> indices,
                               std::shared_ptr<const DistanceMatrix> space);

  /// Builds a curve starting at t0 whose k-th parameter gap is steps[k].
  static SampledCurve embedded_from_steps(double t0, std::vector<double> steps, std::vector<Point> coords);
  static SampledCurve in_space_from_steps(double t0, std::vector<double> steps, std::vector<std::size_t> indices,
                                          std::shared_ptr<const DistanceMatrix> space);

  std::size_t size() const noexcept { return params_.size(); }
  const std::vector<double>& params() const noexcept { return params_; }
  const std::vector<double>& steps() const noexcept { return steps_; }
  bool is_embedded() const noexcept { return space_ == nullptr; }
  const std::vector<Point>& coords() const noexcept { return coords_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  const std::shared_ptr<const DistanceMatrix>& space() const noexcept { return space_; }

  double distance(std::size_t k, std::size_t l) const;
  // t_m - t_0 as the sum of all steps
  double span() const noexcept;
  double length() const;

 private:
  SampledCurve() = default;
  void check() const;

  std::vector<double> params_;
  std::vector<double> steps_;
  std::vector<Point> coords_;
  std::vector<std::size_t> indices_;
  std::shared_ptr<const DistanceMatrix> space_;
};

/// Parameters t0 = 0, t_{k+1} = t_k + d(w_k, w_{k+1}).
SampledCurve natural_parametrization(const DistanceMatrix& space, std::span<const std::size_t> sequence);
SampledCurve natural_parametrization(std::span<const Point> points);

enum class PairScope { All, Consecutive };

/// max over sample pairs k < l of dist(p_k, p_l) / |t_l - t_k|^a.
HolderReport curve_holder_constant(const SampledCurve& curve, double a, PairScope scope = PairScope::All);

inline constexpr double kDefaultSlopeTolerance = 0.02;
inline constexpr double kMaxGridExponent = 1.5;

/// start, start+step, ... up to end inclusive; values rounded to 1e-12.
std::vector<double> exponent_grid(double start, double step, double end);
std::vector<double> default_exponent_grid();

struct CriticalExponentEstimate {
  std::vector<int> levels;
  std::vector<double> grid;
  // constants[level_index][grid_index] = L_n(a)
  std::vector<std::vector<double>> constants;
  // least-squares slope of log L_n(a) against n, per grid exponent
  std::vector<double> growth_rates;
  double tolerance = kDefaultSlopeTolerance;
  // largest grid exponent whose growth rate is within tolerance; empty when
  // the constants grow at every grid exponent
  std::optional<double> estimate;
};

CriticalExponentEstimate critical_exponent(std::span<const SampledCurve> curves, std::span<const int> levels,
                                           std::span<const double> grid, double tolerance = kDefaultSlopeTolerance);

}  // namespace mspace
