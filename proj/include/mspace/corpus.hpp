#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "mspace/connectivity.hpp"
#include "mspace/holder.hpp"
#include "mspace/space.hpp"

namespace mspace {

enum class Generator { Gasket, Carpet, Sponge };

std::string_view to_string(Generator g) noexcept;
std::optional<Generator> parse_generator(std::string_view name) noexcept;

/// Graph approximation of a self-similar set at a fixed level. Vertices are
/// the lattice corners of the kept cells (triangles, squares or cubes) and
/// edges are the cell sides, weighted by their Euclidean length. The kept
/// cells themselves are listed through their centers.
struct FractalGraph {
  Generator generator = Generator::Gasket;
  int level = 0;
  std::vector<Point> vertices;
  std::vector<WeightedEdge> edges;
  // vertex ids of the corners of the unit cell
  std::vector<std::size_t> corners;
  std::vector<Point> cells;
  // pairs of kept cells sharing a side (carpet) or face (sponge); 0 for the gasket
  std::size_t cell_adjacencies = 0;
};

inline constexpr int kMaxGasketLevel = 8;
inline constexpr int kMaxCarpetLevel = 5;
inline constexpr int kMaxSpongeLevel = 3;
inline constexpr int kMaxKochLevel = 8;
inline constexpr int kMaxCantorLevel = 12;

FractalGraph gasket(int level);
FractalGraph carpet(int level);
FractalGraph sponge(int level);
FractalGraph fractal_graph(Generator generator, int level);

/// Koch curve from (0,0) to (1,0): 4^level + 1 points, t_k = k 4^-level.
SampledCurve koch(int level);

/// Straight unit segment sampled at branching^level + 1 uniform points,
/// with parameter equal to arc length.
SampledCurve straight_segment(int level, int branching = 4);

/// The Cantor function sampled at both endpoints of the 2^level construction
/// intervals: interval k runs from k / 2^level to (k + 1) / 2^level on the
/// line.
SampledCurve cantor_staircase(int level);

enum class CantorFlavor { Euclidean, Triadic };

std::string_view to_string(CantorFlavor f) noexcept;
std::optional<CantorFlavor> parse_cantor_flavor(std::string_view name) noexcept;

/// Left endpoints of the 2^level middle-thirds intervals in increasing
/// order. Triadic distance is 3^-depth of the deepest shared interval.
DistanceMatrix cantor(int level, CantorFlavor flavor);
std::vector<double> cantor_endpoints(int level);

/// Single-source geodesic distances along graph edges.
std::vector<double> geodesic_distances(const FractalGraph& graph, std::size_t source);

/// All-pairs geodesic distances; entry (i, j) with i < j comes from source i.
DistanceMatrix intrinsic_metric(const FractalGraph& graph);

/// Euclidean distances between the graph's vertices.
DistanceMatrix ambient_metric(const FractalGraph& graph);

/// max over pairs of intrinsic / ambient.
double distortion(const DistanceMatrix& intrinsic, const DistanceMatrix& ambient);

}  // namespace mspace
