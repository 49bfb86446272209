#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mspace/space.hpp"

namespace mspace {

/// The epsilon-chain components of a finite space. Two points share a
/// component iff a chain joins them whose consecutive distances are all
/// strictly below epsilon. Component ids are contiguous and ordered by the
/// smallest point index they contain.
struct ChainPartition {
  double epsilon = 0.0;
  std::vector<std::size_t> component_of;
  std::size_t component_count = 0;
  // min distance between points in different components; +inf for one component
  double separation = 0.0;
};

ChainPartition chain_components(const DistanceMatrix& space, double epsilon);

/// Recomputes the cross-component minimum distance of a partition from
/// scratch. Never smaller than partition.epsilon when there are two or more
/// components.
double separation_check(const DistanceMatrix& space, const ChainPartition& partition);

bool is_chain_connected(const DistanceMatrix& space, double epsilon);

/// Strict ball {x : d(x, center) < epsilon}, ascending indices.
std::vector<std::size_t> ball(const DistanceMatrix& space, std::size_t center, double epsilon);

struct WeightedEdge {
  std::size_t u = 0;  // u < v
  std::size_t v = 0;
  double w = 0.0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Minimum spanning tree of the complete graph, ties broken by the smallest
/// index pair. Returned in ascending (w, u, v) order.
std::vector<WeightedEdge> minimum_spanning_tree(const DistanceMatrix& space);

struct Merge {
  double height = 0.0;
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t parent = 0;

  friend bool operator==(const Merge&, const Merge&) = default;
};

/// Single-linkage merge tree. Leaves are clusters 0..n-1; merge k creates
/// cluster n+k. `left` is the cluster holding the smaller endpoint of the
/// spanning-tree edge that triggered the merge.
struct Dendrogram {
  std::size_t n = 0;
  std::vector<Merge> merges;

  /// Applies every merge with height strictly below epsilon and returns the
  /// component labelling in the same convention as ChainPartition.
  std::vector<std::size_t> cut(double epsilon) const;
};

Dendrogram dendrogram(const DistanceMatrix& space);

/// The largest ultrametric lying entrywise below the input: the minimax
/// chain distance, read off the spanning tree.
struct UltrametricFit {
  DistanceMatrix u;
};

UltrametricFit subdominant_ultrametric(const DistanceMatrix& space);

}  // namespace mspace
