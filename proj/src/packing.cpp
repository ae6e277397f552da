#include "sepack/packing.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sepack {

PackingSpec::PackingSpec(std::vector<int> radii) : radii_(std::move(radii)) {
  if (radii_.empty()) throw std::invalid_argument("spec needs at least one class");
  for (int r : radii_)
    if (r < 1) throw std::invalid_argument("class radii must be positive");
}

PackingSpec PackingSpec::parse(const std::string& text) {
  std::vector<int> radii;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    size_t caret = token.find('^');
    try {
      size_t used = 0;
      int r = std::stoi(token, &used);
      int count = 1;
      if (caret != std::string::npos) {
        if (used != caret) throw std::invalid_argument(token);
        size_t used2 = 0;
        count = std::stoi(token.substr(caret + 1), &used2);
        if (caret + 1 + used2 != token.size()) throw std::invalid_argument(token);
      } else if (used != token.size()) {
        throw std::invalid_argument(token);
      }
      if (r < 1 || count < 1) throw std::invalid_argument(token);
      radii.insert(radii.end(), count, r);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse spec token \"" + token + "\"");
    }
  }
  return PackingSpec(std::move(radii));
}

std::string PackingSpec::to_string() const {
  std::ostringstream out;
  for (size_t i = 0; i < radii_.size();) {
    size_t j = i;
    while (j < radii_.size() && radii_[j] == radii_[i]) ++j;
    if (i) out << ',';
    out << radii_[i];
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
  return out.str();
}

int PackingSpec::radius(int cls) const {
  if (cls < 1 || cls > classes()) throw std::invalid_argument("class index out of range");
  return radii_[cls - 1];
}

VerifyResult verify(const Graph& g, const EdgeColoring& coloring, bool good, bool allow_partial) {
  VerifyResult res;
  if (static_cast<int>(coloring.classes.size()) != g.edge_count())
    throw std::invalid_argument("coloring size does not match edge count");
  const int k = coloring.spec.classes();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    int c = coloring.classes[e];
    if (c == 0) {
      if (!allow_partial) res.violations.push_back({Violation::Kind::kUncolored, e, -1, -1, 0, 0});
    } else if (c < 0 || c > k) {
      res.violations.push_back({Violation::Kind::kBadClass, e, -1, -1, c, 0});
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    int c = coloring.classes[e];
    if (c < 1 || c > k) continue;
    auto dist = edge_distances_from(g, e);
    for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
      if (coloring.classes[f] != c) continue;
      if (dist[f] >= 1 && dist[f] <= coloring.spec.radius(c))
        res.violations.push_back({Violation::Kind::kPair, e, f, -1, c, dist[f]});
    }
  }
  if (good) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) > 2) continue;
      for (EdgeId e : g.incident_edges(v)) {
        int c = coloring.classes[e];
        if (c >= 1 && c <= k && coloring.spec.radius(c) == 1) {
          res.violations.push_back({Violation::Kind::kGoodVertex, e, -1, v, c, 0});
          break;
        }
      }
    }
  }
  res.valid = res.violations.empty();
  return res;
}

namespace {

struct Solver {
  const Graph& g;
  const PackingSpec& spec;
  const SolveOptions& opt;
  int m, k;
  std::vector<std::vector<int>> dist;
  // neighbors[e][r-1]: edges f != e with 1 <= dist(e,f) <= r, for each radius r
  // that occurs in the spec.
  std::vector<std::vector<std::vector<EdgeId>>> neighbors;
  std::vector<std::uint64_t> allowed;  // bit c-1 = class c usable on edge e
  std::vector<int> order, assignment, usage;
  // first_of_group[c] = smallest class of c's interchangeability group.
  std::vector<int> first_of_group;
  std::uint64_t nodes = 0;
  bool budget_hit = false;

  Solver(const Graph& graph, const PackingSpec& s, const SolveOptions& o)
      : g(graph), spec(s), opt(o), m(graph.edge_count()), k(s.classes()) {
    if (k > 63) throw std::invalid_argument("too many classes");
    dist = edge_distance_matrix(g);
    int max_r = *std::max_element(spec.radii().begin(), spec.radii().end());
    neighbors.assign(m, {});
    for (EdgeId e = 0; e < m; ++e) {
      neighbors[e].resize(max_r);
      for (EdgeId f = 0; f < m; ++f) {
        int d = dist[e][f];
        if (d < 1) continue;
        for (int r = d; r <= max_r; ++r) neighbors[e][r - 1].push_back(f);
      }
    }

    allowed.assign(m, (1ull << k) - 1);
    for (auto [e, c] : opt.forbid) {
      g.edge(e);
      spec.radius(c);
      allowed[e] &= ~(1ull << (c - 1));
    }
    if (opt.good) {
      std::uint64_t ones = 0;
      for (int c = 1; c <= k; ++c)
        if (spec.radius(c) == 1) ones |= 1ull << (c - 1);
      for (EdgeId e = 0; e < m; ++e) {
        const Edge& ed = g.edge(e);
        if (g.degree(ed.u) <= 2 || g.degree(ed.v) <= 2) allowed[e] &= ~ones;
      }
    }

    // Classes are interchangeable when they have the same radius and are
    // treated alike by the forced/forbid options; within a group only the
    // lowest unused class is ever tried.
    std::vector<std::vector<EdgeId>> forbidden_edges(k + 1), forced_edges(k + 1);
    for (auto [e, c] : opt.forbid) forbidden_edges[c].push_back(e);
    for (auto [e, c] : opt.forced) {
      spec.radius(c);
      g.edge(e);
      forced_edges[c].push_back(e);
    }
    for (int c = 1; c <= k; ++c) {
      std::sort(forbidden_edges[c].begin(), forbidden_edges[c].end());
      forbidden_edges[c].erase(std::unique(forbidden_edges[c].begin(), forbidden_edges[c].end()),
                               forbidden_edges[c].end());
      std::sort(forced_edges[c].begin(), forced_edges[c].end());
    }
    first_of_group.assign(k + 1, 0);
    for (int c = 1; c <= k; ++c) {
      first_of_group[c] = c;
      for (int b = 1; b < c; ++b) {
        if (spec.radius(b) == spec.radius(c) && forbidden_edges[b] == forbidden_edges[c] &&
            forced_edges[b] == forced_edges[c]) {
          first_of_group[c] = first_of_group[b];
          break;
        }
      }
    }

    // Static order: most-constrained edges first.
    std::vector<int> conflict_degree(m, 0);
    for (EdgeId e = 0; e < m; ++e) conflict_degree[e] = static_cast<int>(neighbors[e][max_r - 1].size());
    order.resize(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
      return conflict_degree[a] > conflict_degree[b];
    });

    assignment.assign(m, 0);
    usage.assign(k + 1, 0);
  }

  bool apply_forced() {
    for (auto [e, c] : opt.forced) {
      if (!(allowed[e] >> (c - 1) & 1)) return false;
      if (assignment[e] != 0 && assignment[e] != c) return false;
      assignment[e] = c;
    }
    for (auto [e, c] : opt.forced) {
      ++usage[c];
      for (EdgeId f : neighbors[e][spec.radius(c) - 1])
        if (assignment[f] == c) return false;
    }
    return true;
  }

  bool fits(EdgeId e, int c) const {
    for (EdgeId f : neighbors[e][spec.radius(c) - 1])
      if (assignment[f] == c) return false;
    return true;
  }

  bool search(size_t idx) {
    while (idx < order.size() && assignment[order[idx]] != 0) ++idx;
    if (idx == order.size()) return true;
    EdgeId e = order[idx];
    for (int c = 1; c <= k; ++c) {
      if (!(allowed[e] >> (c - 1) & 1)) continue;
      if (usage[c] == 0) {
        // Skip every unused group member except the lowest one.
        int f = first_of_group[c];
        bool first_unused = true;
        for (int b = f; b < c; ++b)
          if (first_of_group[b] == f && usage[b] == 0) {
            first_unused = false;
            break;
          }
        if (!first_unused) continue;
      }
      if (!fits(e, c)) continue;
      if (opt.node_budget && nodes >= opt.node_budget) {
        budget_hit = true;
        return false;
      }
      ++nodes;
      assignment[e] = c;
      ++usage[c];
      if (search(idx + 1)) return true;
      assignment[e] = 0;
      --usage[c];
      if (budget_hit) return false;
    }
    return false;
  }
};

}  // namespace

SolveOutcome solve(const Graph& g, const PackingSpec& spec, const SolveOptions& options) {
  Solver solver(g, spec, options);
  SolveOutcome out;
  if (!solver.apply_forced()) {
    out.status = SolveStatus::kNone;
    return out;
  }
  bool found = solver.search(0);
  out.nodes = solver.nodes;
  if (found) {
    out.status = SolveStatus::kFound;
    out.coloring = EdgeColoring{spec, solver.assignment};
  } else {
    out.status = solver.budget_hit ? SolveStatus::kUndecided : SolveStatus::kNone;
  }
  return out;
}

namespace {

int index_search(const Graph& g, int radius, int lower_bound) {
  if (g.edge_count() == 0) return 0;
  for (int kk = std::max(lower_bound, 1);; ++kk) {
    PackingSpec spec(std::vector<int>(kk, radius));
    if (solve(g, spec).status == SolveStatus::kFound) return kk;
  }
}

}  // namespace

int chromatic_index(const Graph& g) { return index_search(g, 1, g.max_degree()); }

int strong_index(const Graph& g) {
  if (g.edge_count() == 0) return 0;
  // Greedy clique in the distance<=2 conflict graph gives a lower bound.
  auto dist = edge_distance_matrix(g);
  int best = 1;
  for (EdgeId seed = 0; seed < g.edge_count(); ++seed) {
    std::vector<EdgeId> clique{seed};
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
      if (f == seed) continue;
      bool ok = std::all_of(clique.begin(), clique.end(), [&](EdgeId e) {
        return dist[e][f] >= 1 && dist[e][f] <= 2;
      });
      if (ok) clique.push_back(f);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return index_search(g, 2, best);
}

namespace {

bool try_kuhn(int i, const std::vector<std::vector<int>>& lists, std::vector<int>& match_of,
              std::vector<bool>& visited, const std::vector<int>& values,
              std::vector<int>& pick) {
  for (int v : lists[i]) {
    int vi = static_cast<int>(std::lower_bound(values.begin(), values.end(), v) - values.begin());
    if (visited[vi]) continue;
    visited[vi] = true;
    if (match_of[vi] < 0 || try_kuhn(match_of[vi], lists, match_of, visited, values, pick)) {
      match_of[vi] = i;
      pick[i] = v;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> sdr(const std::vector<std::vector<int>>& lists) {
  std::vector<int> values;
  for (const auto& l : lists) values.insert(values.end(), l.begin(), l.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<int> match_of(values.size(), -1), pick(lists.size(), 0);
  for (size_t i = 0; i < lists.size(); ++i) {
    std::vector<bool> visited(values.size(), false);
    if (!try_kuhn(static_cast<int>(i), lists, match_of, visited, values, pick))
      return std::nullopt;
  }
  return pick;
}

namespace {

struct CliqueFinder {
  std::vector<std::uint64_t> adj;
  std::vector<EdgeId> best, current;

  void expand(std::uint64_t candidates) {
    if (current.size() + static_cast<size_t>(std::popcount(candidates)) <= best.size()) return;
    if (!candidates) {
      if (current.size() > best.size()) best = current;
      return;
    }
    int v = std::countr_zero(candidates);
    // Branch: with v, then without v.
    current.push_back(v);
    expand(candidates & adj[v]);
    current.pop_back();
    expand(candidates & ~(1ull << v));
  }
};

}  // namespace

std::vector<EdgeId> max_exact2_set(const Graph& g) {
  int m = g.edge_count();
  if (m > 64) throw std::invalid_argument("too many edges");
  auto dist = edge_distance_matrix(g);
  CliqueFinder finder;
  finder.adj.assign(m, 0);
  for (EdgeId e = 0; e < m; ++e)
    for (EdgeId f = 0; f < m; ++f)
      if (e != f && dist[e][f] == 2) finder.adj[e] |= 1ull << f;
  finder.expand(m == 64 ? ~0ull : ((1ull << m) - 1));
  return finder.best;
}

}  // namespace sepack
