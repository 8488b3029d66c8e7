#include "mmatrix/graphs.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

#include <json.hpp>

#include "mmatrix/errors.hpp"

namespace mmatrix {

namespace {

using AdjacencyList = std::vector<std::vector<int>>;

AdjacencyList to_adjacency(int vertex_count, const std::vector<Edge>& edges) {
  AdjacencyList adj(static_cast<std::size_t>(vertex_count));
  for (const auto& [a, b] : edges) {
    adj[static_cast<std::size_t>(a - 1)].push_back(b - 1);
    adj[static_cast<std::size_t>(b - 1)].push_back(a - 1);
  }
  return adj;
}

// Two-colors each component by BFS and counts components on the way.
std::pair<bool, int> color_components(const AdjacencyList& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  bool bipartite = true;
  int components = 0;
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    ++components;
    color[s] = 0;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int w : adj[u]) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          queue.push(w);
        } else if (color[w] == color[u]) {
          bipartite = false;
        }
      }
    }
  }
  return {bipartite, components};
}

// BFS from every vertex; a non-tree edge (u, w) closes a walk of length
// dist[u] + dist[w] + 1, and the minimum over all roots is the girth.
std::optional<int> girth(const AdjacencyList& adj) {
  const int n = static_cast<int>(adj.size());
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[s] = 0;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int w : adj[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

GraphStats stats_for(int vertex_count, const std::vector<Edge>& edges) {
  const AdjacencyList adj = to_adjacency(vertex_count, edges);
  GraphStats stats;
  for (const auto& nbrs : adj) stats.degrees.push_back(static_cast<int>(nbrs.size()));
  stats.regular = std::adjacent_find(stats.degrees.begin(), stats.degrees.end(),
                                     std::not_equal_to<>()) == stats.degrees.end();
  if (stats.regular && !stats.degrees.empty()) stats.degree = stats.degrees.front();
  std::tie(stats.bipartite, stats.components) = color_components(adj);
  if (vertex_count <= kGirthVertexLimit) {
    stats.girth = girth(adj);
    stats.girth_computed = true;
  }
  return stats;
}

std::string dot_text(const std::vector<std::string>& labels, const std::vector<Edge>& edges,
                     const std::vector<int>& loops, std::string_view name) {
  // Loops merge into the edge listing in vertex order.
  std::vector<Edge> all = edges;
  for (int x : loops) all.emplace_back(x, x);
  std::sort(all.begin(), all.end());

  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (const auto& label : labels) os << "  " << label << ";\n";
  for (const auto& [a, b] : all) os << "  " << labels[a - 1] << " -- " << labels[b - 1] << ";\n";
  os << "}\n";
  return os.str();
}

std::string json_text(const GraphDocument& doc) {
  nlohmann::ordered_json j;
  j["vertices"] = doc.vertices;
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [a, b] : doc.edges) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  j["loops"] = doc.loops;
  if (doc.bipartition) {
    j["bipartition"] = {{"left", doc.bipartition->first}, {"right", doc.bipartition->second}};
  }
  return j.dump(2) + "\n";
}

std::vector<int> iota_vector(int first, int count) {
  std::vector<int> out(static_cast<std::size_t>(count));
  for (int t = 0; t < count; ++t) out[t] = first + t;
  return out;
}

}  // namespace

MGraph adjacency_graph(const IntMatrix& b) {
  if (b.rows() != b.cols()) throw DimensionError("adjacency matrix must be square");
  if (((b.array() != 0) && (b.array() != 1)).any())
    throw DomainError("adjacency matrix entries must be 0 or 1");
  if (b != b.transpose()) throw DomainError("adjacency view requires a symmetric matrix");

  MGraph g;
  g.vertex_count = static_cast<int>(b.rows());
  g.degrees.assign(static_cast<std::size_t>(g.vertex_count), 0);
  for (int x = 0; x < g.vertex_count; ++x) {
    if (b(x, x) == 1) g.loops.push_back(x + 1);
    for (int y = x + 1; y < g.vertex_count; ++y) {
      if (b(x, y) == 1) {
        g.edges.emplace_back(x + 1, y + 1);
        ++g.degrees[x];
        ++g.degrees[y];
      }
    }
  }
  return g;
}

LeviGraph levi_graph(const IncidenceMatrix& n) {
  LeviGraph g;
  g.left = n.treatments();
  g.right = n.blocks();
  for (int x = 1; x <= g.left; ++x)
    for (int beta = 1; beta <= g.right; ++beta)
      if (n.at(x, beta) == 1) g.edges.emplace_back(x, g.left + beta);
  return g;
}

GraphStats graph_stats(const MGraph& g) { return stats_for(g.vertex_count, g.edges); }

GraphStats graph_stats(const LeviGraph& g) { return stats_for(g.vertex_count(), g.edges); }

std::optional<GraphFormat> graph_format_from_string(std::string_view name) {
  if (name == "dot") return GraphFormat::Dot;
  if (name == "json") return GraphFormat::Json;
  return std::nullopt;
}

GraphDocument to_document(const MGraph& g) {
  return {iota_vector(1, g.vertex_count), g.edges, g.loops, std::nullopt};
}

GraphDocument to_document(const LeviGraph& g) {
  GraphDocument doc{iota_vector(1, g.vertex_count()), g.edges, {}, std::nullopt};
  doc.bipartition.emplace(iota_vector(1, g.left), iota_vector(g.left + 1, g.right));
  return doc;
}

std::string export_graph(const MGraph& g, GraphFormat format) {
  if (format == GraphFormat::Json) return json_text(to_document(g));
  std::vector<std::string> labels;
  for (int x = 1; x <= g.vertex_count; ++x) labels.push_back("v" + std::to_string(x));
  return dot_text(labels, g.edges, g.loops, "mgraph");
}

std::string export_graph(const LeviGraph& g, GraphFormat format) {
  if (format == GraphFormat::Json) return json_text(to_document(g));
  std::vector<std::string> labels;
  for (int x = 1; x <= g.left; ++x) labels.push_back("t" + std::to_string(x));
  for (int beta = 1; beta <= g.right; ++beta) labels.push_back("b" + std::to_string(beta));
  return dot_text(labels, g.edges, {}, "levi");
}

namespace {

GraphFormat require_format(std::string_view name) {
  const auto format = graph_format_from_string(name);
  if (!format) throw UsageError("unknown graph format '" + std::string(name) + "' (use dot or json)");
  return *format;
}

}  // namespace

std::string export_graph(const MGraph& g, std::string_view format) {
  return export_graph(g, require_format(format));
}

std::string export_graph(const LeviGraph& g, std::string_view format) {
  return export_graph(g, require_format(format));
}

GraphDocument parse_graph_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  GraphDocument doc;
  doc.vertices = j.at("vertices").get<std::vector<int>>();
  for (const auto& e : j.at("edges")) doc.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  doc.loops = j.at("loops").get<std::vector<int>>();
  if (j.contains("bipartition")) {
    const auto& bp = j.at("bipartition");
    doc.bipartition.emplace(bp.at("left").get<std::vector<int>>(),
                            bp.at("right").get<std::vector<int>>());
  }
  return doc;
}

}  // namespace mmatrix
