#include "sepack/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace sepack {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw std::invalid_argument("negative vertex count");
  incident_.resize(vertex_count_);
  degree_.assign(vertex_count_, 0);
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u < 0 || ed.u >= vertex_count_ || ed.v < 0 || ed.v >= vertex_count_)
      throw std::invalid_argument("edge endpoint out of range");
    incident_[ed.u].push_back(e);
    if (ed.v != ed.u) incident_[ed.v].push_back(e);
    degree_[ed.u] += (ed.u == ed.v) ? 2 : 1;
    if (ed.v != ed.u) degree_[ed.v] += 1;
  }
}

const Edge& Graph::edge(EdgeId e) const {
  if (e < 0 || e >= edge_count()) throw std::invalid_argument("edge id out of range");
  return edges_[e];
}

int Graph::degree(VertexId v) const {
  if (v < 0 || v >= vertex_count_) throw std::invalid_argument("vertex id out of range");
  return degree_[v];
}

int Graph::max_degree() const {
  int d = 0;
  for (int x : degree_) d = std::max(d, x);
  return d;
}

bool Graph::is_simple() const {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : edges_) {
    if (e.u == e.v) return false;
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second) return false;
  }
  return true;
}

bool Graph::is_connected() const {
  if (vertex_count_ == 0) return true;
  auto dist = vertex_distances(0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

const std::vector<EdgeId>& Graph::incident_edges(VertexId v) const {
  if (v < 0 || v >= vertex_count_) throw std::invalid_argument("vertex id out of range");
  return incident_[v];
}

VertexId Graph::other_end(EdgeId e, VertexId v) const {
  const Edge& ed = edge(e);
  if (ed.u == v) return ed.v;
  if (ed.v == v) return ed.u;
  throw std::invalid_argument("vertex not an endpoint of edge");
}

std::vector<int> Graph::vertex_distances(VertexId source) const {
  if (source < 0 || source >= vertex_count_) throw std::invalid_argument("vertex id out of range");
  std::vector<int> dist(vertex_count_, -1);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : incident_[v]) {
      VertexId w = other_end(e, v);
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> edge_distances_from(const Graph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  auto du = g.vertex_distances(ed.u);
  auto dv = (ed.v == ed.u) ? du : g.vertex_distances(ed.v);
  std::vector<int> out(g.edge_count(), -1);
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    if (f == e) {
      out[f] = 0;
      continue;
    }
    const Edge& fd = g.edge(f);
    int best = -1;
    for (VertexId x : {fd.u, fd.v}) {
      for (const auto& d : {du[x], dv[x]}) {
        if (d < 0) continue;
        if (best < 0 || d < best) best = d;
      }
    }
    if (best >= 0) out[f] = best + 1;
  }
  return out;
}

std::optional<int> edge_distance(const Graph& g, EdgeId e, EdgeId f) {
  g.edge(e);
  g.edge(f);
  if (e == f) return 0;
  int d = edge_distances_from(g, e)[f];
  if (d < 0) return std::nullopt;
  return d;
}

std::vector<std::vector<int>> edge_distance_matrix(const Graph& g) {
  std::vector<std::vector<int>> m(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) m[e] = edge_distances_from(g, e);
  return m;
}

std::vector<std::pair<EdgeId, EdgeId>> conflict_pairs(const Graph& g, int s) {
  if (s < 1) throw std::invalid_argument("conflict radius must be positive");
  std::vector<std::pair<EdgeId, EdgeId>> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto dist = edge_distances_from(g, e);
    for (EdgeId f = e + 1; f < g.edge_count(); ++f)
      if (dist[f] >= 1 && dist[f] <= s) out.emplace_back(e, f);
  }
  return out;
}

namespace {

struct BridgeFinder {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<EdgeId> found;
  int timer = 0;

  explicit BridgeFinder(const Graph& graph)
      : g(graph), disc(graph.vertex_count(), -1), low(graph.vertex_count(), -1) {}

  void dfs(VertexId root) {
    // Iterative DFS; parallel edges are told apart by edge id.
    struct Frame {
      VertexId v;
      EdgeId via;
      size_t next = 0;
    };
    std::vector<Frame> stack{{root, -1}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      const auto& inc = g.incident_edges(fr.v);
      if (fr.next < inc.size()) {
        EdgeId e = inc[fr.next++];
        if (e == fr.via) continue;
        VertexId w = g.other_end(e, fr.v);
        if (w == fr.v) continue;  // loop
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e});
        } else {
          low[fr.v] = std::min(low[fr.v], disc[w]);
        }
      } else {
        VertexId v = fr.v;
        EdgeId via = fr.via;
        stack.pop_back();
        if (!stack.empty()) {
          VertexId parent = stack.back().v;
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] > disc[parent]) found.push_back(via);
        }
      }
    }
  }
};

}  // namespace

std::vector<EdgeId> bridges(const Graph& g) {
  BridgeFinder finder(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (finder.disc[v] < 0) finder.dfs(v);
  std::sort(finder.found.begin(), finder.found.end());
  return finder.found;
}

bool is_bridgeless(const Graph& g) {
  if (!g.is_connected()) throw std::invalid_argument("is_bridgeless requires a connected graph");
  return bridges(g).empty();
}

Contraction contract_class(const Graph& g, const std::vector<EdgeId>& matching) {
  std::vector<bool> used_vertex(g.vertex_count(), false);
  std::vector<bool> in_matching(g.edge_count(), false);
  for (EdgeId e : matching) {
    const Edge& ed = g.edge(e);
    if (ed.u == ed.v) throw std::invalid_argument("matching may not contain loops");
    if (used_vertex[ed.u] || used_vertex[ed.v])
      throw std::invalid_argument("edge set is not a matching");
    used_vertex[ed.u] = used_vertex[ed.v] = true;
    in_matching[e] = true;
  }

  Contraction out;
  out.vertex_map.assign(g.vertex_count(), -1);
  // Matched pairs first get their merged vertex, then the remaining vertices
  // keep their relative order.
  for (EdgeId e : matching) {
    const Edge& ed = g.edge(e);
    int nv = static_cast<int>(out.contracted_edge.size());
    out.vertex_map[ed.u] = nv;
    out.vertex_map[ed.v] = nv;
    out.contracted_edge.push_back(e);
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (out.vertex_map[v] < 0) {
      out.vertex_map[v] = static_cast<int>(out.contracted_edge.size());
      out.contracted_edge.push_back(std::nullopt);
    }
  }

  std::vector<Edge> new_edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (in_matching[e]) continue;
    const Edge& ed = g.edge(e);
    VertexId a = out.vertex_map[ed.u];
    VertexId b = out.vertex_map[ed.v];
    if (a == b) continue;  // loop created by the contraction
    new_edges.push_back({a, b});
    out.edge_map.push_back(e);
  }
  out.graph = Graph(static_cast<int>(out.contracted_edge.size()), std::move(new_edges));
  return out;
}

StructureStats structure_stats(const Graph& g) {
  StructureStats st;
  st.max_degree = g.max_degree();
  st.edge_weights.reserve(g.edge_count());
  for (const Edge& e : g.edges())
    st.edge_weights.push_back(g.degree(e.u) + g.degree(e.v));

  // Girth: loops give 1, parallel edges 2, otherwise BFS from every vertex
  // tracking the arriving edge.
  std::optional<int> girth;
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) girth = 1;
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second && (!girth || *girth > 2)) girth = 2;
  }
  if (!girth) {
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
      std::vector<int> dist(g.vertex_count(), -1);
      std::vector<EdgeId> via(g.vertex_count(), -1);
      std::deque<VertexId> queue{s};
      dist[s] = 0;
      while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (EdgeId e : g.incident_edges(v)) {
          VertexId w = g.other_end(e, v);
          if (dist[w] < 0) {
            dist[w] = dist[v] + 1;
            via[w] = e;
            queue.push_back(w);
          } else if (e != via[v]) {
            int len = dist[v] + dist[w] + 1;
            if (!girth || len < *girth) girth = len;
          }
        }
      }
    }
  }
  st.girth = girth;

  // Bipartite by 2-coloring; loops are odd cycles.
  st.bipartite = true;
  std::vector<int> side(g.vertex_count(), -1);
  for (VertexId s = 0; s < g.vertex_count() && st.bipartite; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<VertexId> queue{s};
    while (!queue.empty() && st.bipartite) {
      VertexId v = queue.front();
      queue.pop_front();
      for (EdgeId e : g.incident_edges(v)) {
        VertexId w = g.other_end(e, v);
        if (w == v) {
          st.bipartite = false;
          break;
        }
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          st.bipartite = false;
          break;
        }
      }
    }
  }
  return st;
}

}  // namespace sepack
