#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mmatrix/designs.hpp"
#include "mmatrix/types.hpp"

namespace mmatrix {

/// Undirected edge between 1-based vertex ids, stored with first < second.
using Edge = std::pair<int, int>;

/// Unipartite reading of a symmetric 0/1 matrix. Diagonal 1s are kept as
/// loops, outside the simple edge set.
struct MGraph {
  int vertex_count = 0;
  std::vector<Edge> edges;  ///< sorted
  std::vector<int> loops;   ///< sorted
  std::vector<int> degrees; ///< loops excluded, index 0 is vertex 1
};

/// Treatment/block bipartite graph of an incidence matrix.
/// Treatments are vertices 1..v, blocks are v+1..v+b.
struct LeviGraph {
  int left = 0;
  int right = 0;
  std::vector<Edge> edges;  ///< (treatment, v + block), sorted

  int vertex_count() const { return left + right; }
};

/// Throws DimensionError for a non-square matrix, DomainError for an
/// asymmetric or non-binary one.
MGraph adjacency_graph(const IntMatrix& binary);
LeviGraph levi_graph(const IncidenceMatrix& n);

inline constexpr int kGirthVertexLimit = 64;

struct GraphStats {
  std::vector<int> degrees;
  bool regular = false;
  std::optional<int> degree;  ///< common degree when regular
  bool bipartite = false;
  int components = 0;
  /// Shortest cycle length. Absent for forests, and for graphs above
  /// kGirthVertexLimit vertices (see girth_computed).
  std::optional<int> girth;
  bool girth_computed = false;
};

GraphStats graph_stats(const MGraph& g);
GraphStats graph_stats(const LeviGraph& g);

enum class GraphFormat { Dot, Json };

std::optional<GraphFormat> graph_format_from_string(std::string_view name);

std::string export_graph(const MGraph& g, GraphFormat format);
std::string export_graph(const LeviGraph& g, GraphFormat format);
/// Throws UsageError for anything other than "dot" or "json".
std::string export_graph(const MGraph& g, std::string_view format);
std::string export_graph(const LeviGraph& g, std::string_view format);

/// Parsed form of the JSON export.
struct GraphDocument {
  std::vector<int> vertices;
  std::vector<Edge> edges;
  std::vector<int> loops;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition;

  bool operator==(const GraphDocument&) const = default;
};

GraphDocument parse_graph_json(std::string_view text);
GraphDocument to_document(const MGraph& g);
GraphDocument to_document(const LeviGraph& g);

}  // namespace mmatrix
