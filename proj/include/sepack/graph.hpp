#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace sepack {

using EdgeId = int;
using VertexId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
};

// Finite undirected multigraph. Edge ids are positions in the edge list and
// stay stable for the lifetime of the graph. Loops and parallel edges are
// representable; a loop contributes 2 to the degree of its vertex.
class Graph {
public:
  Graph() = default;
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const;
  const std::vector<Edge>& edges() const { return edges_; }

  int degree(VertexId v) const;
  int max_degree() const;
  bool subcubic() const { return max_degree() <= 3; }
  bool is_simple() const;
  bool is_connected() const;  // the empty graph counts as connected

  // Loops appear once in the incidence list of their vertex.
  const std::vector<EdgeId>& incident_edges(VertexId v) const;
  VertexId other_end(EdgeId e, VertexId v) const;

  std::vector<int> vertex_distances(VertexId source) const;  // -1 = unreachable

private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<int> degree_;
};

// Line-graph distance: 0 iff e == f, 1 for edges sharing an endpoint,
// nullopt when e and f lie in different connected components.
std::optional<int> edge_distance(const Graph& g, EdgeId e, EdgeId f);

// Distances from e to every edge; -1 marks unreachable edges.
std::vector<int> edge_distances_from(const Graph& g, EdgeId e);
std::vector<std::vector<int>> edge_distance_matrix(const Graph& g);

// Unordered pairs {e,f}, e < f, with edge_distance(e,f) <= s. Requires s >= 1.
std::vector<std::pair<EdgeId, EdgeId>> conflict_pairs(const Graph& g, int s);

std::vector<EdgeId> bridges(const Graph& g);
bool is_bridgeless(const Graph& g);  // requires connected input

struct Contraction {
  Graph graph;
  std::vector<VertexId> vertex_map;                   // old vertex -> new vertex
  std::vector<std::optional<EdgeId>> contracted_edge; // new vertex -> edge it absorbed
  std::vector<EdgeId> edge_map;                       // new edge -> old edge id
};

// Contracts each edge of `matching` (pairwise vertex-disjoint non-loop edges)
// and drops loops created by the contraction.
Contraction contract_class(const Graph& g, const std::vector<EdgeId>& matching);

struct StructureStats {
  int max_degree = 0;
  std::optional<int> girth;        // nullopt for forests
  std::vector<int> edge_weights;   // deg(u) + deg(v) per edge
  bool bipartite = true;
};

StructureStats structure_stats(const Graph& g);

}  // namespace sepack
