#include "sepack/choosability.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "sepack/graph.hpp"

namespace sepack {

namespace {

Graph topology_graph(const LineTopology& t) {
  switch (t.kind) {
    case LineKind::kPath: {
      if (t.length < 1) throw std::invalid_argument("path needs length >= 1");
      std::vector<Edge> edges;
      for (int i = 0; i < t.length; ++i) edges.push_back({i, i + 1});
      return Graph(t.length + 1, std::move(edges));
    }
    case LineKind::kCycle: {
      if (t.length < 3) throw std::invalid_argument("cycle needs length >= 3");
      std::vector<Edge> edges;
      for (int i = 0; i < t.length; ++i) edges.push_back({i, (i + 1) % t.length});
      return Graph(t.length, std::move(edges));
    }
    case LineKind::kChordedPath: {
      if (t.length < 5) throw std::invalid_argument("chorded path needs length >= 5");
      std::vector<Edge> edges;
      for (int i = 0; i < t.length; ++i) edges.push_back({i, i + 1});
      edges.push_back({1, t.length - 1});  // structural chord, never colored
      return Graph(t.length + 1, std::move(edges));
    }
  }
  throw std::invalid_argument("unknown topology");
}

}  // namespace

std::vector<std::pair<int, int>> conflict_positions(const LineTopology& t) {
  Graph g = topology_graph(t);
  std::vector<std::pair<int, int>> out;
  for (EdgeId e = 0; e < t.length; ++e) {
    auto dist = edge_distances_from(g, e);
    for (EdgeId f = e + 1; f < t.length; ++f)
      if (dist[f] >= 1 && dist[f] <= 2) out.emplace_back(e + 1, f + 1);
  }
  return out;
}

namespace {

std::vector<std::vector<int>> earlier_conflicts(const LineTopology& t) {
  std::vector<std::vector<int>> prior(t.length + 1);
  for (auto [i, j] : conflict_positions(t)) prior[j].push_back(i);
  return prior;
}

bool color_dfs(int pos, int n, const ListAssignment& lists,
               const std::vector<std::vector<int>>& prior, std::vector<int>& colors) {
  if (pos > n) return true;
  for (int c : lists[pos - 1]) {
    bool clash = false;
    for (int q : prior[pos])
      if (colors[q] == c) {
        clash = true;
        break;
      }
    if (clash) continue;
    colors[pos] = c;
    if (color_dfs(pos + 1, n, lists, prior, colors)) return true;
  }
  colors[pos] = 0;
  return false;
}

}  // namespace

std::optional<std::vector<int>> list_color_line(const LineTopology& t,
                                                const ListAssignment& lists) {
  if (static_cast<int>(lists.size()) != t.length)
    throw std::invalid_argument("list count does not match topology length");
  for (const auto& l : lists)
    if (l.empty()) throw std::invalid_argument("empty color list");
  auto prior = earlier_conflicts(t);
  std::vector<int> colors(t.length + 1, 0);
  if (!color_dfs(1, t.length, lists, prior, colors)) return std::nullopt;
  return std::vector<int>(colors.begin() + 1, colors.end());
}

namespace {

std::vector<int> mask_to_list(unsigned mask) {
  std::vector<int> out;
  for (int c = 1; mask; ++c, mask >>= 1)
    if (mask & 1) out.push_back(c);
  return out;
}

struct ExhaustiveScan {
  const LineTopology& t;
  const std::vector<int>& pattern;
  int universe;
  std::vector<std::vector<int>> prior;
  std::vector<std::vector<unsigned>> perm_mask;  // perm index -> mask -> image mask
  std::vector<std::vector<unsigned>> masks_by_size;
  std::vector<unsigned> chosen;
  std::uint64_t leaves = 0;
  ListAssignment counterexample;

  bool scan(int pos, const std::vector<int>& alive) {
    if (pos > t.length) {
      ++leaves;
      ListAssignment lists;
      for (unsigned m : chosen) lists.push_back(mask_to_list(m));
      std::vector<int> colors(t.length + 1, 0);
      if (!color_dfs(1, t.length, lists, prior, colors)) {
        counterexample = lists;
        return true;
      }
      return false;
    }
    for (unsigned m : masks_by_size[pattern[pos - 1]]) {
      bool pruned = false;
      for (int p : alive)
        if (perm_mask[p][m] < m) {
          pruned = true;
          break;
        }
      if (pruned) continue;
      std::vector<int> next_alive;
      for (int p : alive)
        if (perm_mask[p][m] == m) next_alive.push_back(p);
      chosen[pos - 1] = m;
      if (scan(pos + 1, next_alive)) return true;
    }
    return false;
  }
};

}  // namespace

PatternVerdict check_pattern(const LineTopology& t, const std::vector<int>& pattern, int universe,
                             const PatternOptions& options) {
  if (static_cast<int>(pattern.size()) != t.length)
    throw std::invalid_argument("pattern length does not match topology");
  int max_size = *std::max_element(pattern.begin(), pattern.end());
  if (*std::min_element(pattern.begin(), pattern.end()) < 1)
    throw std::invalid_argument("pattern sizes must be positive");

  PatternVerdict v;
  v.universe = universe;

  if (options.mode == PatternMode::kCertificate) {
    // Universe-independent sufficient test via a nonzero coefficient of the
    // conflict polynomial.
    FactoredPoly poly;
    poly.var_count = t.length;
    for (auto [i, j] : conflict_positions(t)) poly.factors.push_back({j, i});
    if (auto m = find_certificate(poly, pattern)) {
      v.status = PatternStatus::kCertified;
      v.certificate = *m;
      v.note = "nonzero coefficient of " + m->to_string();
    } else {
      v.status = PatternStatus::kInconclusive;
      v.note = "no certificate monomial under these list sizes";
    }
    return v;
  }

  if (universe < max_size) throw std::invalid_argument("universe smaller than largest list");

  if (options.mode == PatternMode::kRandom) {
    std::mt19937_64 rng(options.seed);
    std::vector<int> pool(universe);
    std::iota(pool.begin(), pool.end(), 1);
    auto prior = earlier_conflicts(t);
    for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
      ListAssignment lists;
      for (int s : pattern) {
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> l(pool.begin(), pool.begin() + s);
        std::sort(l.begin(), l.end());
        lists.push_back(std::move(l));
      }
      ++v.assignments_checked;
      std::vector<int> colors(t.length + 1, 0);
      if (!color_dfs(1, t.length, lists, prior, colors)) {
        v.status = PatternStatus::kCounterexample;
        v.counterexample = lists;
        return v;
      }
    }
    v.status = PatternStatus::kInconclusive;
    v.note = "random sampling found no counterexample";
    return v;
  }

  if (universe > 8) {
    v.status = PatternStatus::kInconclusive;
    v.note = "exhaustive enumeration capped at universe 8";
    return v;
  }

  ExhaustiveScan scan{t, pattern, universe, earlier_conflicts(t), {}, {}, {}};
  // Tabulate every color permutation's action on masks; the scan keeps only
  // the lexicographically minimal representative of each renaming orbit.
  std::vector<int> perm(universe);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<unsigned> images(1u << universe);
    for (unsigned m = 0; m < images.size(); ++m) {
      unsigned img = 0;
      for (int b = 0; b < universe; ++b)
        if (m >> b & 1) img |= 1u << perm[b];
      images[m] = img;
    }
    scan.perm_mask.push_back(std::move(images));
  } while (std::next_permutation(perm.begin(), perm.end()));

  scan.masks_by_size.resize(max_size + 1);
  for (unsigned m = 1; m < (1u << universe); ++m) {
    int pc = std::popcount(m);
    if (pc <= max_size) scan.masks_by_size[pc].push_back(m);
  }
  scan.chosen.assign(t.length, 0);

  std::vector<int> all_perms(scan.perm_mask.size());
  std::iota(all_perms.begin(), all_perms.end(), 0);
  bool found = scan.scan(1, all_perms);
  v.assignments_checked = scan.leaves;
  if (found) {
    v.status = PatternStatus::kCounterexample;
    v.counterexample = scan.counterexample;
  } else {
    v.status = PatternStatus::kChoosable;
    v.note = "exhaustive over universe " + std::to_string(universe) + " up to color renaming";
  }
  return v;
}

namespace {

void trick_dfs(int pos, int n, const ListAssignment& lists,
               const std::vector<std::vector<int>>& prior, std::vector<int>& colors,
               bool& all_equal) {
  if (!all_equal) return;
  if (pos > n) {
    if (colors[1] != colors[n]) all_equal = false;
    return;
  }
  for (int c : lists[pos - 1]) {
    bool clash = false;
    for (int q : prior[pos])
      if (colors[q] == c) {
        clash = true;
        break;
      }
    if (clash) continue;
    colors[pos] = c;
    trick_dfs(pos + 1, n, lists, prior, colors, all_equal);
    colors[pos] = 0;
  }
}

}  // namespace

bool trick_check(const ListAssignment& lists, const std::vector<int>& x) {
  if (x.size() != 3) throw std::invalid_argument("color set must have size 3");
  int n = static_cast<int>(lists.size());
  if (n < 4 || n % 3 != 1) throw std::invalid_argument("path length must be 3l+1 with l >= 1");
  std::set<int> xs(x.begin(), x.end());
  if (xs.size() != 3) throw std::invalid_argument("color set must have 3 distinct colors");
  for (const auto& l : lists) {
    if (l.empty() || l.size() > 3) throw std::invalid_argument("list sizes must be 1..3");
    for (int c : l)
      if (!xs.count(c)) throw std::invalid_argument("lists must be subsets of the color set");
  }
  for (int i = 1; i < n - 1; ++i)
    if (std::set<int>(lists[i].begin(), lists[i].end()) != xs)
      throw std::invalid_argument("middle lists must equal the color set");

  LineTopology t{LineKind::kPath, n};
  auto prior = earlier_conflicts(t);
  std::vector<int> colors(n + 1, 0);
  bool all_equal = true;
  trick_dfs(1, n, lists, prior, colors, all_equal);
  return all_equal;
}

ListAssignment bad_cycle_lists(int n) {
  if (n < 10) throw std::invalid_argument("list families are defined for n >= 10");
  ListAssignment l(n);
  auto at = [&](int pos) -> std::vector<int>& { return l[pos - 1]; };
  at(1) = {1, 2, 3};
  at(2) = {1, 2, 3};
  at(3) = {2, 3};
  at(5) = {1, 2, 3, 4, 5};
  at(n - 1) = {1, 2, 3, 4};
  at(n) = {1, 2};
  switch (n % 3) {
    case 0:
      at(4) = {1, 2, 3};
      at(6) = {1, 3, 4};
      at(7) = {1, 4};
      for (int i = 8; i <= n - 3; ++i) at(i) = {1, 3, 4};
      at(n - 2) = {2, 3, 4};
      break;
    case 1:
      at(4) = {2, 3, 5};
      at(6) = {1, 4, 5};
      at(7) = {1, 4};
      for (int i = 8; i <= n - 3; ++i) at(i) = {1, 3, 4};
      at(n - 2) = {1, 2, 4};
      break;
    case 2:
      at(4) = {1, 2, 3};
      at(6) = {1, 3, 4};
      at(7) = {1, 3};
      for (int i = 8; i <= n - 3; ++i) at(i) = {1, 3, 4};
      at(n - 2) = {1, 2, 3};
      break;
  }
  return l;
}

}  // namespace sepack
