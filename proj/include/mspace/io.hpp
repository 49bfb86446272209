#pragma once

// JSON and CSV encodings used by the command-line tool.
//
//   space      {"labels": [...], "matrix": [[...], ...]}
//              {"points": [[...], ...], "norm": "euclidean" | "sup" | "one"}
//   partition  {"epsilon": x, "component_of": [...], "separation": x | null}
//   dendrogram {"n": k, "merges": [{"height", "left", "right", "parent"}, ...]}
//   curve      {"params": [...], "points": [[...], ...]}
//   curve set  {"levels": [...], "curves": [curve, ...]}
//   graph      {"generator", "level", "vertices", "edges": [[u, v, w], ...],
//               "corners", "cells", "cell_adjacencies"}
//
// Reports wrap a payload as {"command", "input_digest", "result", "version"};
// readers accept either a bare document or a report and look through
// "result" and then "space" or "delta" to find the payload.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mspace/connectivity.hpp"
#include "mspace/corpus.hpp"
#include "mspace/holder.hpp"
#include "mspace/metrization.hpp"
#include "mspace/space.hpp"

namespace mspace::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text, or n rows of n comma-separated numbers as a CSV
/// distance matrix. Throws cli::ParseError.
Json parse_document(std::string_view text);

/// Strips a report envelope and an enclosing {"space": ...} or
/// {"delta": ...} wrapper.
const Json& payload(const Json& doc);

enum class Shape { Space, Curve, CurveSet, Graph, Unknown };
Shape shape_of(const Json& doc);

DistanceMatrix space_from_json(const Json& doc);
SampledCurve curve_from_json(const Json& doc);
FractalGraph graph_from_json(const Json& doc);

Json number(double x);  // null for non-finite values
Json to_json(const DistanceMatrix& space);
Json to_json(const AxiomAudit& audit);
Json to_json(const SnowflakeResult& result);
Json to_json(const ChainPartition& partition);
Json to_json(const Dendrogram& tree);
Json to_json(const MetrizationResult& result);
Json to_json(const HolderReport& report);
Json to_json(const SampledCurve& curve);
Json to_json(const FractalGraph& graph);
Json to_json(const CriticalExponentEstimate& estimate);

/// Deterministic dump used for every report.
std::string dump(const Json& doc);

}  // namespace mspace::io
