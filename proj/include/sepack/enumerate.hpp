#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sepack/graph.hpp"
#include "sepack/packing.hpp"

namespace sepack {

// Isomorphism-invariant GRAPH6 form: equal strings iff isomorphic. Exact,
// via degree/neighborhood refinement seeding a branch-and-bound over
// labelings. Simple graphs only.
std::string canonical_form(const Graph& g);

// All simple subcubic graphs on exactly n vertices, one representative per
// isomorphism class, sorted by canonical form. The default caps (10 with
// cubic_only, 9 otherwise) keep accidental huge runs out; pass a larger cap
// explicitly to go beyond them.
std::vector<Graph> enumerate_subcubic(int n, bool connected = true, bool cubic_only = false,
                                      int cap = 0);

// Exact planarity for graphs of maximum degree <= 3 by exhausting rotation
// systems (each degree-3 vertex has two cyclic orders) and face-tracing.
bool is_planar_subcubic(const Graph& g);

struct SurveyFilters {
  bool cubic = false;
  bool class_one = false;  // chromatic index 3
  bool bipartite = false;
  bool planar = false;
  bool tree = false;
  bool bridgeless = false;
  int min_girth = 0;        // 0 = no constraint; forests pass any girth bound
  int max_edge_weight = 0;  // 0 = no bound on deg(u) + deg(v)
};

struct SurveyReport {
  PackingSpec spec;
  SurveyFilters filters;
  bool good = false;
  int n_min = 1;
  int n_max = 0;
  std::uint64_t graphs_tested = 0;
  std::uint64_t undecided = 0;          // node budget exhausted, never a counterexample
  std::vector<std::string> counterexamples;  // canonical GRAPH6, solver NONE certified
  std::uint64_t total_ms = 0;
  std::uint64_t max_graph_ms = 0;
};

// Runs the solver on every enumerated connected subcubic graph in the vertex
// range that passes every filter. Deterministic for fixed inputs regardless
// of jobs.
SurveyReport run_survey(const PackingSpec& spec, const SurveyFilters& filters, int n_min,
                        int n_max, bool good = false, int jobs = 1,
                        std::uint64_t node_budget = 0, int cap = 0);

// Line-oriented "sepack-survey v1" document; counterexamples one per line.
std::string serialize_report(const SurveyReport& report);

}  // namespace sepack
