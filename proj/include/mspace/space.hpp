#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mspace/error.hpp"

namespace mspace {

/// Relative tolerance used by every axiom comparison.
inline constexpr double kAxiomTolerance = 1e-9;

using Point = std::vector<double>;

enum class Norm { Euclidean, Sup, One };

std::string_view to_string(Norm norm) noexcept;
std::optional<Norm> parse_norm(std::string_view name) noexcept;

/// A finite space: n labeled points with a symmetric, definite, finite
/// distance table. Instances can only be obtained through validation, so
/// every DistanceMatrix in the program satisfies those invariants.
class DistanceMatrix {
 public:
  std::size_t size() const noexcept { return n_; }

  double operator()(std::size_t i, std::size_t j) const noexcept { return d_[i * n_ + j]; }

  std::span<const double> row(std::size_t i) const noexcept {
    return {d_.data() + i * n_, n_};
  }

  std::span<const double> flat() const noexcept { return d_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::vector<std::vector<double>> to_rows() const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  friend DistanceMatrix validate_matrix(std::size_t, std::span<const double>,
                                        std::optional<std::vector<std::string>>);

  DistanceMatrix(std::size_t n, std::vector<double> d, std::vector<std::string> labels)
      : n_(n), d_(std::move(d)), labels_(std::move(labels)) {}

  std::size_t n_ = 0;
  std::vector<double> d_;
  std::vector<std::string> labels_;
};

/// Validates a row-major n*n table. Entries whose transposes differ by
/// at most 1e-9 relative are averaged; larger asymmetry is an error.
/// Missing labels default to "0".."n-1".
DistanceMatrix validate_matrix(std::size_t n, std::span<const double> flat,
                               std::optional<std::vector<std::string>> labels = std::nullopt);

DistanceMatrix validate_matrix(const std::vector<std::vector<double>>& rows,
                               std::optional<std::vector<std::string>> labels = std::nullopt);

/// Pairwise distances of a point cloud under the chosen norm.
DistanceMatrix from_point_cloud(std::span<const Point> coords, Norm norm = Norm::Euclidean);

double norm_distance(std::span<const double> x, std::span<const double> y, Norm norm) noexcept;

struct Triple {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;

  friend bool operator==(const Triple&, const Triple&) = default;
};

struct AxiomAudit {
  // max over ordered triples of d(i,k) / (d(i,j) + d(j,k)); 0 when n <= 2
  double quasi_constant = 0.0;
  // max over ordered triples of d(i,k) / max(d(i,j), d(j,k)); 0 when n <= 2
  double ultra_ratio = 0.0;
  bool metric = true;
  bool ultrametric = true;
  std::optional<Triple> worst_triple;
  std::optional<Triple> worst_ultra_triple;
  // 0 for a single point
  double min_positive = 0.0;
  double diameter = 0.0;
};

/// Exhaustive triple scan. Witnesses are the lexicographically smallest
/// maximizers.
AxiomAudit audit(const DistanceMatrix& space);

enum class SnowflakeClass { Metric, Ultrametric, QuasimetricWithBound };

std::string_view to_string(SnowflakeClass c) noexcept;

struct SnowflakeResult {
  double exponent = 1.0;
  DistanceMatrix space;
  SnowflakeClass classification = SnowflakeClass::Metric;
  // 2^(a-1) for a > 1, else 1
  double bound = 1.0;
};

/// Entrywise power d^a. With require_metric the input must pass the metric
/// audit and the classification is the guaranteed one: a <= 1 gives a
/// metric; for a > 1 an ultrametric input stays ultrametric and any other
/// gives a quasimetric with constant 2^(a-1). Without it the power is always computed and the
/// classification is read off a fresh audit of the result.
SnowflakeResult snowflake(const DistanceMatrix& space, double a, bool require_metric = true);

}  // namespace mspace
