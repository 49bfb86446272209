#include "mspace/holder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace mspace {

namespace {

void require_exponent(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw Error(Errc::NonPositiveExponent, "Hölder exponent must be positive");
}

std::vector<double> steps_of(const std::vector<double>& params) {
  std::vector<double> steps;
  for (double t : params)
    if (!std::isfinite(t)) throw Error(Errc::NonIncreasingParams, "non-finite parameter");
  for (std::size_t k = 0; k + 1 < params.size(); ++k) {
    const double s = params[k + 1] - params[k];
    if (!(s > 0.0)) throw Error(Errc::NonIncreasingParams, "parameters must be strictly increasing");
    steps.push_back(s);
  }
  return steps;
}

std::vector<double> params_of(double t0, const std::vector<double>& steps) {
  if (!std::isfinite(t0)) throw Error(Errc::NonIncreasingParams, "non-finite start parameter");
  std::vector<double> params{t0};
  for (double s : steps) {
    if (!(s > 0.0) || !std::isfinite(s)) throw Error(Errc::NonIncreasingParams, "parameter steps must be positive");
    const double next = params.back() + s;
    if (!(next > params.back())) throw Error(Errc::NonIncreasingParams, "step vanishes in floating point");
    params.push_back(next);
  }
  return params;
}

// Neumaier summation; long curves add tens of thousands of small hops
class Sum {
 public:
  void add(double x) {
    const double t = total_ + x;
    carry_ += std::abs(total_) >= std::abs(x) ? (total_ - t) + x : (x - t) + total_;
    total_ = t;
  }
  double value() const { return total_ + carry_; }

 private:
  double total_ = 0.0;
  double carry_ = 0.0;
};

double pow_gap(double gap, double a) { return a == 1.0 ? gap : std::pow(gap, a); }

double slope(std::span<const int> xs, std::span<const double> ys) {
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace

HolderReport holder_constant(const DistanceMatrix& dom, const DistanceMatrix& cod, const PointMap& f, double a) {
  require_exponent(a);
  const std::size_t n = dom.size();
  if (f.image.size() != n) throw Error(Errc::MapRangeError, "map must assign an image to every domain point");
  for (std::size_t x : f.image)
    if (x >= cod.size()) throw Error(Errc::MapRangeError, "image index " + std::to_string(x) + " outside codomain");

  HolderReport out{a, 0.0, std::nullopt};
  double best = -1.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double r = cod(f.image[i], f.image[j]) / pow_gap(dom(i, j), a);
      if (r > best) {
        best = r;
        out.witness = IndexPair{i, j};
      }
    }
  if (out.witness) out.constant = best;
  return out;
}

std::vector<double> distance_to_point(const DistanceMatrix& space, std::size_t p) {
  if (p >= space.size()) throw Error(Errc::IndexOutOfRange, "base point " + std::to_string(p));
  const auto row = space.row(p);
  return {row.begin(), row.end()};
}

double chain_length(const DistanceMatrix& space, std::span<const std::size_t> sequence) {
  if (sequence.empty()) throw Error(Errc::EmptySequence, "chain has no points");
  for (std::size_t x : sequence)
    if (x >= space.size()) throw Error(Errc::IndexOutOfRange, "chain index " + std::to_string(x));
  Sum total;
  for (std::size_t k = 0; k + 1 < sequence.size(); ++k) total.add(space(sequence[k], sequence[k + 1]));
  return total.value();
}

double chain_length(std::span<const Point> points) {
  if (points.empty()) throw Error(Errc::EmptySequence, "chain has no points");
  Sum total;
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    if (points[k].size() != points[k + 1].size()) throw Error(Errc::DimensionMismatch, "point " + std::to_string(k + 1));
    total.add(norm_distance(points[k], points[k + 1], Norm::Euclidean));
  }
  return total.value();
}

// SampledCurve

void SampledCurve::check() const {
  if (params_.empty()) throw Error(Errc::EmptySequence, "curve has no samples");
  if (space_) {
    if (indices_.size() != params_.size()) throw Error(Errc::CountMismatch, "one index per parameter expected");
    for (std::size_t x : indices_)
      if (x >= space_->size()) throw Error(Errc::IndexOutOfRange, "curve index " + std::to_string(x));
  } else {
    if (coords_.size() != params_.size()) throw Error(Errc::CountMismatch, "one point per parameter expected");
    for (const Point& p : coords_) {
      if (p.size() != coords_.front().size()) throw Error(Errc::DimensionMismatch, "curve points differ in dimension");
      for (double c : p)
        if (!std::isfinite(c)) throw Error(Errc::NonFiniteCoordinate, "curve point");
    }
  }
}

SampledCurve SampledCurve::embedded(std::vector<double> params, std::vector<Point> coords) {
  SampledCurve c;
  c.steps_ = steps_of(params);
  c.params_ = std::move(params);
  c.coords_ = std::move(coords);
  c.check();
  return c;
}

SampledCurve SampledCurve::in_space(std::vector<double> params, std::vector<std::size_t> indices,
                                    std::shared_ptr<const DistanceMatrix> space) {
  if (!space) throw Error(Errc::EmptySpace, "curve needs a space");
  SampledCurve c;
  c.steps_ = steps_of(params);
  c.params_ = std::move(params);
  c.indices_ = std::move(indices);
  c.space_ = std::move(space);
  c.check();
  return c;
}

SampledCurve SampledCurve::embedded_from_steps(double t0, std::vector<double> steps, std::vector<Point> coords) {
  SampledCurve c;
  c.params_ = params_of(t0, steps);
  c.steps_ = std::move(steps);
  c.coords_ = std::move(coords);
  c.check();
  return c;
}

SampledCurve SampledCurve::in_space_from_steps(double t0, std::vector<double> steps, std::vector<std::size_t> indices,
                                               std::shared_ptr<const DistanceMatrix> space) {
  if (!space) throw Error(Errc::EmptySpace, "curve needs a space");
  SampledCurve c;
  c.params_ = params_of(t0, steps);
  c.steps_ = std::move(steps);
  c.indices_ = std::move(indices);
  c.space_ = std::move(space);
  c.check();
  return c;
}

double SampledCurve::distance(std::size_t k, std::size_t l) const {
  if (space_) return (*space_)(indices_[k], indices_[l]);
  return norm_distance(coords_[k], coords_[l], Norm::Euclidean);
}

double SampledCurve::span() const noexcept {
  Sum total;
  for (double s : steps_) total.add(s);
  return total.value();
}

double SampledCurve::length() const {
  Sum total;
  for (std::size_t k = 0; k + 1 < size(); ++k) total.add(distance(k, k + 1));
  return total.value();
}

SampledCurve natural_parametrization(const DistanceMatrix& space, std::span<const std::size_t> sequence) {
  if (sequence.empty()) throw Error(Errc::EmptySequence, "chain has no points");
  std::vector<double> steps;
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    if (sequence[k] >= space.size()) throw Error(Errc::IndexOutOfRange, "chain index " + std::to_string(sequence[k]));
    if (k == 0) continue;
    if (sequence[k] == sequence[k - 1])
      throw Error(Errc::RepeatedConsecutivePoint, "position " + std::to_string(k));
    steps.push_back(space(sequence[k - 1], sequence[k]));
  }
  return SampledCurve::in_space_from_steps(0.0, std::move(steps), {sequence.begin(), sequence.end()},
                                           std::make_shared<const DistanceMatrix>(space));
}

SampledCurve natural_parametrization(std::span<const Point> points) {
  if (points.empty()) throw Error(Errc::EmptySequence, "chain has no points");
  std::vector<double> steps;
  for (std::size_t k = 1; k < points.size(); ++k) {
    if (points[k].size() != points[k - 1].size()) throw Error(Errc::DimensionMismatch, "point " + std::to_string(k));
    const double d = norm_distance(points[k - 1], points[k], Norm::Euclidean);
    if (d == 0.0) throw Error(Errc::RepeatedConsecutivePoint, "position " + std::to_string(k));
    steps.push_back(d);
  }
  return SampledCurve::embedded_from_steps(0.0, std::move(steps), {points.begin(), points.end()});
}

HolderReport curve_holder_constant(const SampledCurve& curve, double a, PairScope scope) {
  require_exponent(a);
  const auto& steps = curve.steps();
  const std::size_t m = curve.size();
  HolderReport out{a, 0.0, std::nullopt};
  double best = -1.0;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    const std::size_t last = scope == PairScope::Consecutive ? k + 1 : m - 1;
    double gap = 0.0;
    for (std::size_t l = k + 1; l <= last; ++l) {
      gap += steps[l - 1];
      const double r = curve.distance(k, l) / pow_gap(gap, a);
      if (r > best) {
        best = r;
        out.witness = IndexPair{k, l};
      }
    }
  }
  if (out.witness) out.constant = best;
  return out;
}

std::vector<double> exponent_grid(double start, double step, double end) {
  if (!(step > 0.0) || !(start > 0.0) || !(end >= start) || !std::isfinite(end))
    throw Error(Errc::InvalidGrid, "grid needs 0 < start <= end and a positive step");
  std::vector<double> grid;
  for (long k = 0;; ++k) {
    const double v = std::round((start + static_cast<double>(k) * step) * 1e12) / 1e12;
    if (v > end + 1e-12) break;
    grid.push_back(v);
  }
  return grid;
}

std::vector<double> default_exponent_grid() { return exponent_grid(0.05, 0.05, kMaxGridExponent); }

CriticalExponentEstimate critical_exponent(std::span<const SampledCurve> curves, std::span<const int> levels,
                                           std::span<const double> grid, double tolerance) {
  if (levels.size() < 3) throw Error(Errc::TooFewLevels, "slope fits need at least three levels");
  if (curves.size() != levels.size()) throw Error(Errc::CountMismatch, "one curve per level expected");
  if (grid.empty()) throw Error(Errc::InvalidGrid, "empty exponent grid");
  for (double a : grid)
    if (!(a > 0.0) || a > kMaxGridExponent + 1e-9) throw Error(Errc::InvalidGrid, "grid exponents must lie in (0, 1.5]");
  const auto [lo, hi] = std::minmax_element(levels.begin(), levels.end());
  if (*lo == *hi) throw Error(Errc::TooFewLevels, "levels must not all coincide");

  CriticalExponentEstimate out;
  out.levels.assign(levels.begin(), levels.end());
  out.grid.assign(grid.begin(), grid.end());
  out.tolerance = tolerance;

  const std::size_t g = grid.size();
  for (const SampledCurve& curve : curves) {
    // log L(a) = max over pairs of log dist - a log gap
    std::vector<double> best(g, -std::numeric_limits<double>::infinity());
    const auto& steps = curve.steps();
    const std::size_t m = curve.size();
    for (std::size_t k = 0; k + 1 < m; ++k) {
      double gap = 0.0;
      for (std::size_t l = k + 1; l < m; ++l) {
        gap += steps[l - 1];
        const double d = curve.distance(k, l);
        if (d == 0.0) continue;
        const double ld = std::log(d);
        const double lg = std::log(gap);
        for (std::size_t q = 0; q < g; ++q) best[q] = std::max(best[q], ld - grid[q] * lg);
      }
    }
    std::vector<double> row(g);
    for (std::size_t q = 0; q < g; ++q) row[q] = std::exp(best[q]);
    out.constants.push_back(std::move(row));
  }

  out.growth_rates.resize(g);
  std::vector<double> logs(levels.size());
  for (std::size_t q = 0; q < g; ++q) {
    std::size_t zeros = 0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      const double L = out.constants[i][q];
      if (L == 0.0) ++zeros;
      logs[i] = std::log(L);
    }
    if (zeros == levels.size())
      out.growth_rates[q] = 0.0;
    else if (zeros > 0)
      out.growth_rates[q] = std::numeric_limits<double>::infinity();
    else
      out.growth_rates[q] = slope(levels, logs);
    if (out.growth_rates[q] <= tolerance && (!out.estimate || grid[q] > *out.estimate)) out.estimate = grid[q];
  }
  return out;
}

}  // namespace mspace
