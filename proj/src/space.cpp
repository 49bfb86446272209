#include "mspace/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace mspace {

namespace {

std::string where(std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << "entry (" << i << ", " << j << ")";
  return os.str();
}

constexpr double kDiagonalTolerance = 1e-12;

}  // namespace

std::string_view to_string(Norm norm) noexcept {
  switch (norm) {
    case Norm::Euclidean: return "euclidean";
    case Norm::Sup: return "sup";
    case Norm::One: return "one";
  }
  return "euclidean";
}

std::optional<Norm> parse_norm(std::string_view name) noexcept {
  if (name == "euclidean") return Norm::Euclidean;
  if (name == "sup") return Norm::Sup;
  if (name == "one") return Norm::One;
  return std::nullopt;
}

std::string_view to_string(SnowflakeClass c) noexcept {
  switch (c) {
    case SnowflakeClass::Metric: return "metric";
    case SnowflakeClass::Ultrametric: return "ultrametric";
    case SnowflakeClass::QuasimetricWithBound: return "quasimetric-with-bound";
  }
  return "metric";
}

std::vector<std::vector<double>> DistanceMatrix::to_rows() const {
  std::vector<std::vector<double>> rows(n_);
  for (std::size_t i = 0; i < n_; ++i) rows[i].assign(d_.begin() + i * n_, d_.begin() + (i + 1) * n_);
  return rows;
}

DistanceMatrix validate_matrix(std::size_t n, std::span<const double> flat,
                               std::optional<std::vector<std::string>> labels) {
  if (n == 0) throw Error(Errc::EmptySpace, "a space needs at least one point");
  if (flat.size() != n * n) throw Error(Errc::NonSquare, "expected n*n entries");

  std::vector<std::string> names;
  if (labels) {
    if (labels->size() != n) throw Error(Errc::LabelCountMismatch, "label count differs from point count");
    names = std::move(*labels);
  } else {
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = flat[i * n + j];
      if (!std::isfinite(v)) throw Error(Errc::NonFiniteEntry, where(i, j));
      if (v < 0.0) throw Error(Errc::NegativeEntry, where(i, j));
    }
  }

  std::vector<double> d(flat.begin(), flat.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(d[i * n + i]) > kDiagonalTolerance) throw Error(Errc::NonZeroDiagonal, where(i, i));
    d[i * n + i] = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = d[i * n + j];
      const double b = d[j * n + i];
      if (a == 0.0 || b == 0.0) throw Error(Errc::ZeroOffDiagonal, where(i, j));
      if (std::abs(a - b) > kAxiomTolerance * std::max(a, b))
        throw Error(Errc::AsymmetryBeyondTolerance, where(i, j));
      const double m = a == b ? a : 0.5 * (a + b);
      d[i * n + j] = m;
      d[j * n + i] = m;
    }
  }
  return DistanceMatrix(n, std::move(d), std::move(names));
}

DistanceMatrix validate_matrix(const std::vector<std::vector<double>>& rows,
                               std::optional<std::vector<std::string>> labels) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(Errc::EmptySpace, "a space needs at least one point");
  std::vector<double> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw Error(Errc::NonSquare, "row " + std::to_string(i) + " has wrong length");
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return validate_matrix(n, flat, std::move(labels));
}

double norm_distance(std::span<const double> x, std::span<const double> y, Norm norm) noexcept {
  double acc = 0.0;
  for (std::size_t c = 0; c < x.size(); ++c) {
    const double diff = std::abs(x[c] - y[c]);
    switch (norm) {
      case Norm::Euclidean: acc += diff * diff; break;
      case Norm::Sup: acc = std::max(acc, diff); break;
      case Norm::One: acc += diff; break;
    }
  }
  return norm == Norm::Euclidean ? std::sqrt(acc) : acc;
}

DistanceMatrix from_point_cloud(std::span<const Point> coords, Norm norm) {
  const std::size_t m = coords.size();
  if (m == 0) throw Error(Errc::EmptySpace, "no points given");
  const std::size_t dim = coords[0].size();
  for (std::size_t i = 0; i < m; ++i) {
    if (coords[i].size() != dim) throw Error(Errc::DimensionMismatch, "point " + std::to_string(i));
    for (double c : coords[i])
      if (!std::isfinite(c)) throw Error(Errc::NonFiniteCoordinate, "point " + std::to_string(i));
  }

  std::vector<double> d(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double v = norm_distance(coords[i], coords[j], norm);
      if (v == 0.0)
        throw Error(Errc::DuplicatePoints, "points " + std::to_string(i) + " and " + std::to_string(j));
      d[i * m + j] = v;
      d[j * m + i] = v;
    }
  }
  return validate_matrix(m, d);
}

AxiomAudit audit(const DistanceMatrix& space) {
  AxiomAudit out;
  const std::size_t n = space.size();

  if (n >= 2) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        lo = std::min(lo, space(i, j));
        hi = std::max(hi, space(i, j));
      }
    out.min_positive = lo;
    out.diameter = hi;
  }
  if (n <= 2) return out;

  // The ratio is invariant under swapping i and k, so every maximizer has a
  // mirror with i < k that is lexicographically smaller; scanning i < k in
  // lexicographic order therefore finds the smallest witness overall.
  double best_q = -1.0;
  double best_u = -1.0;
  Triple wq{}, wu{};
  for (std::size_t i = 0; i < n; ++i) {
    const auto ri = space.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const auto rj = space.row(j);
      const double dij = ri[j];
      for (std::size_t k = i + 1; k < n; ++k) {
        if (k == j) continue;
        const double dik = ri[k];
        const double djk = rj[k];
        const double q = dik / (dij + djk);
        const double u = dik / std::max(dij, djk);
        if (q > best_q) {
          best_q = q;
          wq = {i, j, k};
        }
        if (u > best_u) {
          best_u = u;
          wu = {i, j, k};
        }
      }
    }
  }
  out.quasi_constant = best_q;
  out.ultra_ratio = best_u;
  out.worst_triple = wq;
  out.worst_ultra_triple = wu;
  out.metric = best_q <= 1.0 + kAxiomTolerance;
  out.ultrametric = best_u <= 1.0 + kAxiomTolerance;
  return out;
}

SnowflakeResult snowflake(const DistanceMatrix& space, double a, bool require_metric) {
  if (!(a > 0.0) || !std::isfinite(a)) throw Error(Errc::NonPositiveExponent, "snowflake exponent must be positive");

  const AxiomAudit before = audit(space);
  if (require_metric && !before.metric)
    throw Error(Errc::InputNotMetric, "snowflake guarantees need a metric input");

  const std::size_t n = space.size();
  std::vector<double> powered(space.flat().begin(), space.flat().end());
  for (double& v : powered) v = v == 0.0 ? 0.0 : std::pow(v, a);
  DistanceMatrix out = validate_matrix(n, powered, space.labels());

  const double guaranteed = a > 1.0 ? std::pow(2.0, a - 1.0) : 1.0;
  if (before.metric) {
    SnowflakeClass cls = SnowflakeClass::QuasimetricWithBound;
    if (a <= 1.0)
      cls = SnowflakeClass::Metric;
    else if (before.ultrametric)
      cls = SnowflakeClass::Ultrametric;
    return {a, std::move(out), cls, guaranteed};
  }

  const AxiomAudit after = audit(out);
  SnowflakeClass cls = SnowflakeClass::QuasimetricWithBound;
  if (after.ultrametric)
    cls = SnowflakeClass::Ultrametric;
  else if (after.metric)
    cls = SnowflakeClass::Metric;
  const double bound = cls == SnowflakeClass::QuasimetricWithBound ? after.quasi_constant : 1.0;
  return {a, std::move(out), cls, bound};
}

}  // namespace mspace
