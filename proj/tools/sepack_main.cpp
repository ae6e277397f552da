#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sepack/choosability.hpp"
#include "sepack/constructive.hpp"
#include "sepack/corpus.hpp"
#include "sepack/enumerate.hpp"
#include "sepack/graph.hpp"
#include "sepack/packing.hpp"
#include "sepack/poly.hpp"

namespace {

using namespace sepack;

constexpr int kExitOk = 0;
constexpr int kExitNone = 1;       // no coloring / counterexample found
constexpr int kExitUsage = 2;
constexpr int kExitUndecided = 3;  // budget exhausted / inconclusive

Graph resolve_graph(const std::string& arg) {
  if (std::ifstream probe(arg); probe.good()) return load_graph_file(arg);
  return named_graph(arg);  // throws with the name on failure
}

void print_coloring(std::ostream& out, const Graph& g, const EdgeColoring& c) {
  out << "spec: " << c.spec.to_string() << "\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    out << "edge " << g.edge(e).u << "-" << g.edge(e).v << ": " << c.classes[e] << "\n";
}

EdgeId find_edge(const Graph& g, VertexId u, VertexId v, std::vector<bool>& taken) {
  for (EdgeId e : g.incident_edges(u))
    if (g.other_end(e, u) == v && !taken[e]) {
      taken[e] = true;
      return e;
    }
  throw std::invalid_argument("no edge " + std::to_string(u) + "-" + std::to_string(v));
}

// Coloring files mirror the solve output: a "spec:" line, then "edge u-v: c".
EdgeColoring read_coloring(const Graph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open coloring file " + path);
  EdgeColoring c;
  c.classes.assign(g.edge_count(), 0);
  std::vector<bool> taken(g.edge_count(), false);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string tag;
    row >> tag;
    if (tag == "verdict:") {
      continue;  // redirected solve/construct output carries a verdict line
    } else if (tag == "spec:") {
      std::string spec;
      row >> spec;
      c.spec = PackingSpec::parse(spec);
    } else if (tag == "edge") {
      std::string pair, colon;
      int cls = 0;
      char dash = 0;
      VertexId u = 0, v = 0;
      row >> u >> dash >> v >> colon >> cls;
      if (!row || dash != '-' || colon != ":")
        throw std::invalid_argument("bad coloring line: " + line);
      c.classes[find_edge(g, u, v, taken)] = cls;
    } else {
      throw std::invalid_argument("bad coloring line: " + line);
    }
  }
  if (c.spec.classes() == 0) throw std::invalid_argument("coloring file lacks a spec line");
  return c;
}

std::map<EdgeId, int> parse_forced(const Graph& g, const std::vector<std::string>& args) {
  std::map<EdgeId, int> forced;
  std::vector<bool> taken(g.edge_count(), false);
  for (const std::string& arg : args) {
    auto eq = arg.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--force-class wants CLASS=u-v,u-v");
    int cls = std::stoi(arg.substr(0, eq));
    std::istringstream rest(arg.substr(eq + 1));
    std::string pair;
    while (std::getline(rest, pair, ',')) {
      auto dash = pair.find('-');
      if (dash == std::string::npos) throw std::invalid_argument("bad edge " + pair);
      VertexId u = std::stoi(pair.substr(0, dash));
      VertexId v = std::stoi(pair.substr(dash + 1));
      forced[find_edge(g, u, v, taken)] = cls;
    }
  }
  return forced;
}

SurveyFilters parse_filters(const std::vector<std::string>& tokens) {
  SurveyFilters f;
  for (const std::string& t : tokens) {
    if (t == "cubic") f.cubic = true;
    else if (t == "class1") f.class_one = true;
    else if (t == "bipartite") f.bipartite = true;
    else if (t == "planar") f.planar = true;
    else if (t == "tree") f.tree = true;
    else if (t == "bridgeless") f.bridgeless = true;
    else if (t.rfind("girth>=", 0) == 0) f.min_girth = std::stoi(t.substr(7));
    else if (t.rfind("weight<=", 0) == 0) f.max_edge_weight = std::stoi(t.substr(8));
    else throw std::invalid_argument("unknown filter " + t);
  }
  return f;
}

std::vector<int> parse_csv(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"exact toolkit for packing edge-colorings of subcubic graphs"};
  app.require_subcommand(1);

  auto* cmd_solve = app.add_subcommand("solve", "find a packing edge-coloring");
  std::string solve_graph, solve_spec;
  bool solve_good = false;
  std::vector<std::string> solve_force;
  std::uint64_t solve_budget = 0;
  cmd_solve->add_option("--graph", solve_graph, "graph file or named graph")->required();
  cmd_solve->add_option("--spec", solve_spec, "packing spec, e.g. 1,2^8")->required();
  cmd_solve->add_flag("--good", solve_good, "forbid the 1-class at vertices of degree <= 2");
  cmd_solve->add_option("--force-class", solve_force, "CLASS=u-v,u-v pins edges to a class");
  cmd_solve->add_option("--budget", solve_budget, "search node budget, 0 = unlimited");

  auto* cmd_verify = app.add_subcommand("verify", "check a coloring file");
  std::string verify_graph, verify_coloring;
  cmd_verify->add_option("--graph", verify_graph)->required();
  cmd_verify->add_option("--coloring", verify_coloring)->required();

  auto* cmd_index = app.add_subcommand("index", "chromatic or strong chromatic index");
  std::string index_graph;
  bool index_chromatic = false, index_strong = false;
  cmd_index->add_option("--graph", index_graph)->required();
  cmd_index->add_flag("--chromatic", index_chromatic);
  cmd_index->add_flag("--strong", index_strong);

  auto* cmd_coeff = app.add_subcommand("coeff", "monomial coefficient of a structure polynomial");
  std::string coeff_poly, coeff_monomial;
  int coeff_k = 1, coeff_n = 0;
  cmd_coeff->add_option("--poly", coeff_poly, "P, C, D, Q or F")->required();
  cmd_coeff->add_option("--k", coeff_k, "start index for P");
  cmd_coeff->add_option("--n", coeff_n, "end index / cycle length");
  cmd_coeff->add_option("--monomial", coeff_monomial, "comma-separated exponents")->required();

  auto* cmd_choose = app.add_subcommand("choose", "list-size pattern choosability check");
  std::string choose_topology = "path", choose_pattern, choose_mode = "exhaustive";
  int choose_universe = 0;
  std::uint64_t choose_seed = 0, choose_trials = 1000;
  cmd_choose->add_option("--topology", choose_topology, "path, cycle or dn");
  cmd_choose->add_option("--pattern", choose_pattern, "comma-separated list sizes")->required();
  cmd_choose->add_option("--universe", choose_universe, "color pool size (default: max size + 2)");
  cmd_choose->add_option("--mode", choose_mode, "exhaustive, random or certificate");
  cmd_choose->add_option("--seed", choose_seed, "random mode only");
  cmd_choose->add_option("--trials", choose_trials, "random mode only");

  auto* cmd_construct = app.add_subcommand("construct", "structured coloring constructions");
  std::string construct_graph, construct_method, construct_pi, construct_alpha = "a";
  cmd_construct->add_option("--graph", construct_graph)->required();
  cmd_construct->add_option("--method", construct_method,
                            "1112, theorem-a, good-128 or alpha-induced")->required();
  cmd_construct->add_option("--pi", construct_pi, "proper 3-edge-coloring file (alpha-induced)");
  cmd_construct->add_option("--alpha", construct_alpha, "a, b or c: which class of pi");

  auto* cmd_named = app.add_subcommand("named", "facts about a named graph");
  std::string named_name;
  bool named_chromatic = false, named_strong = false, named_planar = false, named_g6 = false,
       named_stats = false;
  cmd_named->add_option("name", named_name)->required();
  cmd_named->add_flag("--chromatic-index", named_chromatic);
  cmd_named->add_flag("--strong-index", named_strong);
  cmd_named->add_flag("--planar", named_planar);
  cmd_named->add_flag("--g6", named_g6);
  cmd_named->add_flag("--stats", named_stats);

  auto* cmd_survey = app.add_subcommand("survey", "test a spec over all small subcubic graphs");
  std::string survey_spec, survey_out;
  std::vector<std::string> survey_filters;
  int survey_n_min = 1, survey_n_max = 9, survey_jobs = 1, survey_cap = 0;
  bool survey_good = false;
  std::uint64_t survey_budget = 0;
  cmd_survey->add_option("--spec", survey_spec)->required();
  cmd_survey->add_option("--filters", survey_filters,
                         "cubic class1 bipartite planar tree bridgeless girth>=G weight<=W");
  cmd_survey->add_option("--n-min", survey_n_min);
  cmd_survey->add_option("--n-max", survey_n_max);
  cmd_survey->add_option("--jobs", survey_jobs);
  cmd_survey->add_option("--budget", survey_budget, "per-graph node budget");
  cmd_survey->add_option("--cap", survey_cap, "raise the enumeration size cap");
  cmd_survey->add_flag("--good", survey_good);
  cmd_survey->add_option("--out", survey_out, "also write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (cmd_solve->parsed()) {
    Graph g = resolve_graph(solve_graph);
    SolveOptions opt;
    opt.good = solve_good;
    opt.forced = parse_forced(g, solve_force);
    opt.node_budget = solve_budget;
    SolveOutcome out = solve(g, PackingSpec::parse(solve_spec), opt);
    if (out.status == SolveStatus::kFound) {
      print_coloring(std::cout, g, *out.coloring);
      std::cout << "verdict: FOUND\n";
      return kExitOk;
    }
    std::cout << "verdict: " << (out.status == SolveStatus::kNone ? "NONE" : "UNDECIDED")
              << " (nodes: " << out.nodes << ")\n";
    return out.status == SolveStatus::kNone ? kExitNone : kExitUndecided;
  }

  if (cmd_verify->parsed()) {
    Graph g = resolve_graph(verify_graph);
    EdgeColoring c = read_coloring(g, verify_coloring);
    VerifyResult r = verify(g, c);
    if (r.valid) {
      std::cout << "verdict: VALID\n";
      return kExitOk;
    }
    for (const Violation& v : r.violations) {
      switch (v.kind) {
        case Violation::Kind::kPair:
          std::cout << "violation: edges " << g.edge(v.e).u << "-" << g.edge(v.e).v << " and "
                    << g.edge(v.f).u << "-" << g.edge(v.f).v << " share class " << v.cls
                    << " at distance " << v.distance << "\n";
          break;
        case Violation::Kind::kGoodVertex:
          std::cout << "violation: 1-class at low-degree vertex " << v.vertex << "\n";
          break;
        case Violation::Kind::kUncolored:
          std::cout << "violation: edge " << g.edge(v.e).u << "-" << g.edge(v.e).v
                    << " uncolored\n";
          break;
        case Violation::Kind::kBadClass:
          std::cout << "violation: edge " << g.edge(v.e).u << "-" << g.edge(v.e).v
                    << " has class " << v.cls << " outside the spec\n";
          break;
      }
    }
    std::cout << "verdict: INVALID\n";
    return kExitNone;
  }

  if (cmd_index->parsed()) {
    if (index_chromatic == index_strong)
      throw CLI::ValidationError("index", "pass exactly one of --chromatic / --strong");
    Graph g = resolve_graph(index_graph);
    std::cout << (index_chromatic ? chromatic_index(g) : strong_index(g)) << "\n";
    return kExitOk;
  }

  if (cmd_coeff->parsed()) {
    FactoredPoly poly;
    if (coeff_poly == "P") poly = build_poly(PolyKind::kPath, coeff_k, coeff_n);
    else if (coeff_poly == "C") poly = build_poly(PolyKind::kCycle, 0, coeff_n);
    else if (coeff_poly == "D") poly = build_poly(PolyKind::kChordedCycle, 0, coeff_n);
    else if (coeff_poly == "Q") poly = build_poly(PolyKind::kCycleTail, 0, coeff_n);
    else if (coeff_poly == "F") poly = build_poly(PolyKind::kFourCycleLink, 0, 0);
    else throw CLI::ValidationError("coeff", "--poly must be P, C, D, Q or F");
    Monomial m{parse_csv(coeff_monomial)};
    std::cout << coeff(poly, m) << "\n";
    return kExitOk;
  }

  if (cmd_choose->parsed()) {
    LineTopology t;
    std::vector<int> pattern = parse_csv(choose_pattern);
    t.length = static_cast<int>(pattern.size());
    if (choose_topology == "path") t.kind = LineKind::kPath;
    else if (choose_topology == "cycle") t.kind = LineKind::kCycle;
    else if (choose_topology == "dn") t.kind = LineKind::kChordedPath;
    else throw CLI::ValidationError("choose", "--topology must be path, cycle or dn");
    PatternOptions opt;
    if (choose_mode == "exhaustive") opt.mode = PatternMode::kExhaustive;
    else if (choose_mode == "random") opt.mode = PatternMode::kRandom;
    else if (choose_mode == "certificate") opt.mode = PatternMode::kCertificate;
    else throw CLI::ValidationError("choose", "--mode must be exhaustive, random or certificate");
    opt.seed = choose_seed;
    opt.trials = choose_trials;
    int universe = choose_universe > 0
                       ? choose_universe
                       : *std::max_element(pattern.begin(), pattern.end()) + 2;
    PatternVerdict v = check_pattern(t, pattern, universe, opt);
    switch (v.status) {
      case PatternStatus::kChoosable:
        std::cout << "verdict: CHOOSABLE (" << v.note << ", " << v.assignments_checked
                  << " orbit representatives)\n";
        return kExitOk;
      case PatternStatus::kCertified:
        std::cout << "verdict: CERTIFIED (" << v.note << ")\n";
        return kExitOk;
      case PatternStatus::kCounterexample:
        std::cout << "verdict: COUNTEREXAMPLE\n";
        for (size_t i = 0; i < v.counterexample.size(); ++i) {
          std::cout << "list " << (i + 1) << ":";
          for (int c : v.counterexample[i]) std::cout << " " << c;
          std::cout << "\n";
        }
        return kExitNone;
      case PatternStatus::kInconclusive:
        std::cout << "verdict: INCONCLUSIVE (" << v.note << ")\n";
        return kExitUndecided;
    }
    return kExitUndecided;
  }

  if (cmd_construct->parsed()) {
    Graph g = resolve_graph(construct_graph);
    EdgeColoring c;
    if (construct_method == "1112") c = coloring_1112(g);
    else if (construct_method == "theorem-a") c = contraction_coloring(g);
    else if (construct_method == "good-128") c = good_128(g);
    else if (construct_method == "alpha-induced") {
      if (construct_pi.empty())
        throw CLI::ValidationError("construct", "alpha-induced needs --pi FILE");
      int alpha = construct_alpha == "a" ? 1 : construct_alpha == "b" ? 2
                  : construct_alpha == "c" ? 3 : 0;
      if (alpha == 0) throw CLI::ValidationError("construct", "--alpha must be a, b or c");
      c = alpha_induced_127(g, read_coloring(g, construct_pi), alpha);
    } else {
      throw CLI::ValidationError("construct",
                                 "--method must be 1112, theorem-a, good-128 or alpha-induced");
    }
    print_coloring(std::cout, g, c);
    std::cout << "verdict: FOUND\n";
    return kExitOk;
  }

  if (cmd_named->parsed()) {
    Graph g = named_graph(named_name);
    bool any = named_chromatic || named_strong || named_planar || named_g6 || named_stats;
    if (named_chromatic) std::cout << chromatic_index(g) << "\n";
    if (named_strong) std::cout << strong_index(g) << "\n";
    if (named_planar) std::cout << (is_planar_subcubic(g) ? "planar" : "nonplanar") << "\n";
    if (named_g6) std::cout << write_graph(g, GraphFormat::kGraph6) << "\n";
    if (named_stats || !any) {
      StructureStats s = structure_stats(g);
      std::cout << "vertices: " << g.vertex_count() << "\nedges: " << g.edge_count()
                << "\nmax-degree: " << s.max_degree << "\ngirth: "
                << (s.girth ? std::to_string(*s.girth) : "none") << "\nbipartite: "
                << (s.bipartite ? "yes" : "no") << "\n";
    }
    return kExitOk;
  }

  if (cmd_survey->parsed()) {
    SurveyReport r = run_survey(PackingSpec::parse(survey_spec), parse_filters(survey_filters),
                                survey_n_min, survey_n_max, survey_good, survey_jobs,
                                survey_budget, survey_cap);
    std::string text = serialize_report(r);
    std::cout << text;
    if (!survey_out.empty()) {
      std::ofstream out(survey_out);
      out << text;
    }
    if (!r.counterexamples.empty()) return kExitNone;
    return r.undecided > 0 ? kExitUndecided : kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
