#include "sepack/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "sepack/corpus.hpp"

namespace sepack {

namespace {

// Stable vertex colors under iterated neighborhood refinement; color ids are
// assigned by sorted signature, so they are label-invariant.
std::vector<int> refine_colors(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n);
  for (VertexId v = 0; v < n; ++v) color[v] = g.degree(v);
  for (;;) {
    std::vector<std::pair<std::vector<int>, VertexId>> keys(n);
    for (VertexId v = 0; v < n; ++v) {
      std::vector<int> key{color[v]};
      std::vector<int> nb;
      for (EdgeId e : g.incident_edges(v)) nb.push_back(color[g.other_end(e, v)]);
      std::sort(nb.begin(), nb.end());
      key.insert(key.end(), nb.begin(), nb.end());
      keys[v] = {std::move(key), v};
    }
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(n);
    int classes = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sorted[i].first != sorted[i - 1].first) ++classes;
      next[sorted[i].second] = classes;
    }
    if (next == color) return color;
    color = std::move(next);
  }
}

struct CanonSearch {
  int n;
  std::vector<std::uint32_t> adj;  // neighbor bitmask per vertex
  std::vector<int> color;
  std::vector<int> pattern;  // required color at each position

  std::vector<std::uint32_t> best;
  std::vector<VertexId> best_labeling;
  bool have_best = false;

  std::vector<VertexId> chosen;
  std::vector<std::uint32_t> bits;
  std::uint32_t used = 0;

  void dfs(int k, bool tied) {
    if (k == n) {
      if (!have_best || bits > best) {
        best = bits;
        best_labeling = chosen;
        have_best = true;
      }
      return;
    }
    for (VertexId v = 0; v < n; ++v) {
      if ((used >> v & 1) || color[v] != pattern[k]) continue;
      std::uint32_t b = 0;
      for (int i = 0; i < k; ++i)
        if (adj[chosen[i]] >> v & 1) b |= 1u << i;
      bool t = tied;
      if (have_best && tied) {
        if (b < best[k]) continue;
        t = b == best[k];
      }
      chosen[k] = v;
      bits[k] = b;
      used |= 1u << v;
      dfs(k + 1, t);
      used &= ~(1u << v);
    }
  }
};

}  // namespace

std::string canonical_form(const Graph& g) {
  if (!g.is_simple()) throw std::invalid_argument("canonical form is defined for simple graphs");
  int n = g.vertex_count();
  if (n > 31) throw std::invalid_argument("canonical form capped at 31 vertices");
  CanonSearch s;
  s.n = n;
  s.adj.assign(n, 0);
  for (const Edge& e : g.edges()) {
    s.adj[e.u] |= 1u << e.v;
    s.adj[e.v] |= 1u << e.u;
  }
  s.color = refine_colors(g);
  s.pattern = s.color;
  std::sort(s.pattern.begin(), s.pattern.end());
  s.chosen.assign(n, 0);
  s.bits.assign(n, 0);
  s.dfs(0, true);

  std::vector<Edge> edges;
  std::vector<int> pos(n);
  for (int k = 0; k < n; ++k) pos[s.best_labeling[k]] = k;
  for (const Edge& e : g.edges()) edges.push_back({pos[e.u], pos[e.v]});
  return write_graph(Graph(n, std::move(edges)), GraphFormat::kGraph6);
}

namespace {

std::vector<Graph> connected_level_up(const std::vector<Graph>& level) {
  std::map<std::string, Graph> out;
  for (const Graph& g : level) {
    int n = g.vertex_count();
    std::vector<VertexId> open;
    for (VertexId v = 0; v < n; ++v)
      if (g.degree(v) <= 2) open.push_back(v);
    int k = static_cast<int>(open.size());
    // New vertex joined to every nonempty subset of at most 3 open vertices.
    for (int a = 0; a < k; ++a)
      for (int b = a; b < k; ++b)
        for (int c = b; c < k; ++c) {
          std::set<VertexId> ends;
          ends.insert(open[a]);
          ends.insert(open[b]);
          ends.insert(open[c]);
          std::vector<Edge> edges = g.edges();
          for (VertexId w : ends) edges.push_back({n, w});
          Graph next(n + 1, std::move(edges));
          std::string form = canonical_form(next);
          out.try_emplace(std::move(form), std::move(next));
        }
  }
  std::vector<Graph> result;
  for (auto& [form, graph] : out) result.push_back(std::move(graph));
  return result;
}

const std::vector<Graph>& connected_level(int n) {
  static std::vector<std::vector<Graph>> cache{{}, {Graph(1, {})}};
  while (static_cast<int>(cache.size()) <= n) cache.push_back(connected_level_up(cache.back()));
  return cache[n];
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges())
    edges.push_back({e.u + a.vertex_count(), e.v + a.vertex_count()});
  return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

// All (possibly disconnected) subcubic graphs on n vertices: a connected
// component of size k joined with anything on n - k vertices.
std::vector<Graph> all_level(int n) {
  if (n == 0) return {Graph(0, {})};
  std::map<std::string, Graph> out;
  for (int k = 1; k <= n; ++k)
    for (const Graph& c : connected_level(k))
      for (const Graph& rest : all_level(n - k)) {
        Graph g = disjoint_union(c, rest);
        std::string form = canonical_form(g);
        out.try_emplace(std::move(form), std::move(g));
      }
  std::vector<Graph> result;
  for (auto& [form, graph] : out) result.push_back(std::move(graph));
  return result;
}

}  // namespace

std::vector<Graph> enumerate_subcubic(int n, bool connected, bool cubic_only, int cap) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  int effective_cap = cap > 0 ? cap : (cubic_only ? 10 : 9);
  if (n > effective_cap)
    throw std::invalid_argument("n exceeds the enumeration cap; pass a larger cap explicitly");
  if (n == 0) return connected ? std::vector<Graph>{Graph(0, {})} : all_level(0);
  std::vector<Graph> pool = connected ? connected_level(n) : all_level(n);
  if (!cubic_only) return pool;
  std::vector<Graph> out;
  for (const Graph& g : pool) {
    bool cubic = true;
    for (VertexId v = 0; v < n; ++v)
      if (g.degree(v) != 3) {
        cubic = false;
        break;
      }
    if (cubic) out.push_back(g);
  }
  return out;
}

namespace {

// Face count of the embedding given by one rotation system, traced over darts.
int trace_faces(const Graph& g, const std::vector<std::vector<EdgeId>>& rotation) {
  int m = g.edge_count();
  // Dart 2e = edge e leaving edge(e).u; dart 2e+1 = leaving edge(e).v.
  std::vector<bool> seen(2 * m, false);
  auto dart_head = [&](int d) { return d & 1 ? g.edge(d >> 1).u : g.edge(d >> 1).v; };
  auto next_dart = [&](int d) {
    VertexId v = dart_head(d);  // arrive at v via edge d>>1
    const auto& rot = rotation[v];
    EdgeId e = d >> 1;
    int idx = static_cast<int>(std::find(rot.begin(), rot.end(), e) - rot.begin());
    EdgeId f = rot[(idx + 1) % rot.size()];
    return 2 * f + (g.edge(f).u == v ? 0 : 1);
  };
  int faces = 0;
  for (int d = 0; d < 2 * m; ++d) {
    if (seen[d]) continue;
    ++faces;
    for (int x = d; !seen[x]; x = next_dart(x)) seen[x] = true;
  }
  return faces;
}

bool planar_component(const Graph& g, const std::vector<VertexId>& comp) {
  // Induced subgraph on the component, relabeled.
  std::vector<int> idx(g.vertex_count(), -1);
  for (size_t i = 0; i < comp.size(); ++i) idx[comp[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (idx[e.u] >= 0 && idx[e.v] >= 0) edges.push_back({idx[e.u], idx[e.v]});
  Graph h(static_cast<int>(comp.size()), std::move(edges));
  int nv = h.vertex_count(), ne = h.edge_count();
  if (ne == 0) return true;
  if (ne <= nv + 2) return true;  // genus needs E - V >= 3 at max degree 3

  std::vector<VertexId> swappable;
  for (VertexId v = 0; v < nv; ++v)
    if (h.degree(v) == 3) swappable.push_back(v);
  std::vector<std::vector<EdgeId>> rotation(nv);
  for (VertexId v = 0; v < nv; ++v) rotation[v] = h.incident_edges(v);
  // Two cyclic orders per degree-3 vertex; one may stay fixed (reflection).
  int free_count = std::max(0, static_cast<int>(swappable.size()) - 1);
  for (std::uint32_t mask = 0; mask < (1u << free_count); ++mask) {
    for (int i = 0; i < free_count; ++i) {
      auto& rot = rotation[swappable[i + 1]];
      bool swapped = (mask >> i) & 1;
      rot = h.incident_edges(swappable[i + 1]);
      if (swapped) std::swap(rot[1], rot[2]);
    }
    if (nv - ne + trace_faces(h, rotation) == 2) return true;
  }
  return false;
}

}  // namespace

bool is_planar_subcubic(const Graph& g) {
  if (!g.subcubic()) throw std::invalid_argument("planarity test requires maximum degree 3");
  if (!g.is_simple()) throw std::invalid_argument("planarity test requires a simple graph");
  std::vector<bool> visited(g.vertex_count(), false);
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (visited[s]) continue;
    std::vector<VertexId> comp{s};
    visited[s] = true;
    for (size_t i = 0; i < comp.size(); ++i)
      for (EdgeId e : g.incident_edges(comp[i])) {
        VertexId w = g.other_end(e, comp[i]);
        if (!visited[w]) {
          visited[w] = true;
          comp.push_back(w);
        }
      }
    if (!planar_component(g, comp)) return false;
  }
  return true;
}

namespace {

bool passes_filters(const Graph& g, const SurveyFilters& f) {
  StructureStats stats = structure_stats(g);
  if (f.cubic) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) != 3) return false;
  }
  if (f.bipartite && !stats.bipartite) return false;
  if (f.tree && g.edge_count() != g.vertex_count() - 1) return false;
  if (f.bridgeless && !bridges(g).empty()) return false;
  if (f.min_girth > 0 && stats.girth && *stats.girth < f.min_girth) return false;
  if (f.max_edge_weight > 0)
    for (int w : stats.edge_weights)
      if (w > f.max_edge_weight) return false;
  if (f.planar && !is_planar_subcubic(g)) return false;
  if (f.class_one && chromatic_index(g) != 3) return false;
  return true;
}

}  // namespace

SurveyReport run_survey(const PackingSpec& spec, const SurveyFilters& filters, int n_min,
                        int n_max, bool good, int jobs, std::uint64_t node_budget, int cap) {
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("bad vertex range");
  SurveyReport report;
  report.spec = spec;
  report.filters = filters;
  report.good = good;
  report.n_min = n_min;
  report.n_max = n_max;

  std::vector<Graph> pool;
  for (int n = n_min; n <= n_max; ++n)
    for (const Graph& g : enumerate_subcubic(n, true, false, cap))
      if (passes_filters(g, filters)) pool.push_back(g);
  report.graphs_tested = pool.size();

  enum class Outcome { kAdmits, kCounterexample, kUndecided };
  std::vector<Outcome> outcomes(pool.size());
  std::vector<std::uint64_t> ms(pool.size(), 0);

  auto worker = [&](size_t start, size_t stride) {
    for (size_t i = start; i < pool.size(); i += stride) {
      auto t0 = std::chrono::steady_clock::now();
      SolveOptions opt;
      opt.good = good;
      opt.node_budget = node_budget;
      SolveOutcome out = solve(pool[i], spec, opt);
      outcomes[i] = out.status == SolveStatus::kFound      ? Outcome::kAdmits
                    : out.status == SolveStatus::kUndecided ? Outcome::kUndecided
                                                            : Outcome::kCounterexample;
      ms[i] = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                             std::chrono::steady_clock::now() - t0)
                                             .count());
    }
  };
  int nthreads = std::max(1, jobs);
  if (nthreads == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < nthreads; ++t) threads.emplace_back(worker, t, nthreads);
    for (auto& t : threads) t.join();
  }

  for (size_t i = 0; i < pool.size(); ++i) {
    report.total_ms += ms[i];
    report.max_graph_ms = std::max(report.max_graph_ms, ms[i]);
    if (outcomes[i] == Outcome::kUndecided) ++report.undecided;
    else if (outcomes[i] == Outcome::kCounterexample)
      report.counterexamples.push_back(canonical_form(pool[i]));
  }
  return report;
}

std::string serialize_report(const SurveyReport& r) {
  std::ostringstream out;
  out << "sepack-survey v1\n";
  out << "spec: " << r.spec.to_string() << (r.good ? " good" : "") << "\n";
  out << "filters:";
  if (r.filters.cubic) out << " cubic";
  if (r.filters.class_one) out << " class1";
  if (r.filters.bipartite) out << " bipartite";
  if (r.filters.planar) out << " planar";
  if (r.filters.tree) out << " tree";
  if (r.filters.bridgeless) out << " bridgeless";
  if (r.filters.min_girth > 0) out << " girth>=" << r.filters.min_girth;
  if (r.filters.max_edge_weight > 0) out << " edge-weight<=" << r.filters.max_edge_weight;
  out << "\n";
  out << "n: " << r.n_min << ".." << r.n_max << "\n";
  out << "graphs: " << r.graphs_tested << "\n";
  out << "undecided: " << r.undecided << "\n";
  out << "time-ms: " << r.total_ms << " max " << r.max_graph_ms << "\n";
  out << "counterexamples: " << r.counterexamples.size() << "\n";
  for (const std::string& g6 : r.counterexamples) out << g6 << "\n";
  return out.str();
}

}  // namespace sepack
