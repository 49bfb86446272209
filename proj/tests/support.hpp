#pragma once

#include <functional>
#include <numeric>

#include <gtest/gtest.h>
#include <vector>

#include "mspace/random.hpp"
#include "mspace/space.hpp"

namespace mspace::testing {

inline Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected mspace::Error";
  return Errc::EmptySpace;
}

inline DistanceMatrix line(const std::vector<double>& xs) {
  std::vector<Point> pts;
  for (double x : xs) pts.push_back({x});
  return from_point_cloud(pts);
}

inline DistanceMatrix permuted(const DistanceMatrix& d, const std::vector<std::size_t>& perm) {
  const std::size_t n = d.size();
  std::vector<double> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = d(perm[i], perm[j]);
  return validate_matrix(n, flat);
}

inline std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.index(i)]);
  return p;
}

}  // namespace mspace::testing
