// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "sepack/choosability.hpp"
#include "sepack/constructive.hpp"
#include "sepack/corpus.hpp"
#include "sepack/enumerate.hpp"
#include "sepack/graph.hpp"
#include "sepack/packing.hpp"
#include "sepack/poly.hpp"

using namespace sepack;

namespace {

struct Checker {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& text) { notes.push_back(text); }
};

int jobs() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

// ---- 1: chorded-cycle coefficient table ------------------------------------

void criterion1(Checker& c) {
  const std::vector<std::pair<std::vector<int>, long long>> table = {
      {{2, 3, 2, 2, 2, 2}, 2},
      {{2, 3, 2, 2, 2, 2, 2}, 1},
      {{2, 2, 2, 3, 2, 1, 3, 2}, -1},
      {{2, 3, 2, 2, 2, 2, 2, 2, 2}, 2},
      {{2, 3, 2, 2, 2, 2, 2, 2, 2, 2}, 1},
      {{2, 2, 2, 3, 2, 2, 2, 2, 1, 3, 2}, -1},
  };
  for (const auto& [exponents, expected] : table) {
    int n = static_cast<int>(exponents.size());
    FactoredPoly dn = build_poly(PolyKind::kChordedCycle, 0, n);
    long long d = coeff(dn, Monomial{exponents});
    c.expect(d == expected, "d_" + std::to_string(n) + " = " + std::to_string(d) + ", expected " +
                                std::to_string(expected));
  }
}

// ---- 2: path coefficient closed forms and recurrence -----------------------

void criterion2(Checker& c) {
  for (PathPattern pattern : {PathPattern::kEndPair, PathPattern::kEndSquare,
                              PathPattern::kStartPair, PathPattern::kStartSquare})
    for (int k = 1; k <= 4; ++k)
      for (int l = k + 2; l <= k + 12; ++l) {
        FactoredPoly p = build_poly(PolyKind::kPath, k, l);
        long long direct = coeff(p, path_pattern_monomial(pattern, k, l));
        c.expect(direct == path_coeff_closed_form(pattern, k, l),
                 "closed form mismatch at pattern/k/l " + std::to_string(static_cast<int>(pattern)) +
                     "/" + std::to_string(k) + "/" + std::to_string(l));
      }
  auto a = [](int l) { return path_coeff_closed_form(PathPattern::kEndPair, 1, l); };
  for (int l = 5; l <= 60; ++l)
    c.expect(a(l) == -a(l - 1) - a(l - 2), "recurrence fails at l=" + std::to_string(l));
  c.expect(a(3) == 0 && a(4) == -1 && a(5) == 1, "a_3..a_5 values");
  c.note("note: the often-quoted seed a_3 = -1 contradicts the closed-form table; "
         "direct expansion gives a_3 = 0 (the recurrence holds from l = 5 on)");
}

// ---- 3: alpha/beta and the non-colorable list families ---------------------

void criterion3(Checker& c) {
  for (int n = 10; n <= 14; ++n) {
    ChordCoeffs cc = chord_cycle_coeffs(n);
    c.expect(cc.alpha == 0, "alpha(" + std::to_string(n) + ") = " + std::to_string(cc.alpha));
  }
  const long long beta_by_residue[] = {1, -2, 1};  // n = 12, 13, 14
  for (int n = 12; n <= 14; ++n) {
    BetaDecomposition d = beta_decomposition(n);
    c.expect(d.beta == beta_by_residue[n - 12],
             "beta(" + std::to_string(n) + ") = " + std::to_string(d.beta));
    c.expect(d.beta == chord_cycle_coeffs(n).beta, "decomposition disagrees with direct beta");
    c.expect(d.parts[4] == 0 && d.parts[5] == 0, "beta_5/beta_6 nonzero");
  }
  for (int n = 12; n <= 14; ++n)
    c.expect(!list_color_line({LineKind::kCycle, n}, bad_cycle_lists(n)).has_value(),
             "bad list family for n=" + std::to_string(n) + " is colorable");
}

// ---- 4: the 13-factor polynomial certificate --------------------------------

void criterion4(Checker& c) {
  FactoredPoly f = build_poly(PolyKind::kFourCycleLink, 0, 0);
  long long printed = coeff(f, Monomial{{2, 4, 2, 2, 3, 0}});
  long long amended = coeff(f, Monomial{{2, 4, 1, 1, 3, 2}});
  c.expect(amended == 1, "amended certificate coefficient is " + std::to_string(amended));
  c.expect(choosability_certificate(f, {3, 5, 3, 3, 5, 3}, Monomial{{2, 4, 1, 1, 3, 2}}),
           "amended monomial is not a certificate under the list sizes");
  c.note("note: the often-quoted monomial X1^2 X2^4 X3^2 X4^2 X5^3 has coefficient " +
         std::to_string(printed) + "; the certificate within the same list sizes is "
         "X1^2 X2^4 X3 X4 X5^3 X6^2 with coefficient +1");
  c.expect(printed == 0, "quoted monomial coefficient changed");
}

// ---- 5: named-graph facts ----------------------------------------------------

void criterion5(Checker& c) {
  auto admits = [](const char* name, const char* spec) {
    return solve(named_graph(name), PackingSpec::parse(spec)).status == SolveStatus::kFound;
  };
  for (const char* name : {"petersen", "tietze"}) {
    c.expect(admits(name, "1,1,1,2"), std::string(name) + " rejects (1,1,1,2)");
    c.expect(!admits(name, "1,1,1,3"), std::string(name) + " admits (1,1,1,3)");
  }
  c.expect(chromatic_index(named_graph("wagner")) == 3, "wagner chromatic index");
  c.expect(strong_index(named_graph("wagner")) == 10, "wagner strong index");
  c.expect(strong_index(named_graph("prism3")) == 9, "prism strong index");
  c.expect(strong_index(named_graph("k33")) == 9, "k33 strong index");
  c.expect(!admits("k33", "1,1,2^2"), "k33 admits (1,1,2^2)");
  c.expect(!admits("k33", "1,2^5"), "k33 admits (1,2^5)");
  c.expect(chromatic_index(named_graph("k33_subdivided")) == 4, "subdivided k33 chromatic index");
  c.expect(strong_index(named_graph("k33_subdivided")) == 10, "subdivided k33 strong index");
  c.expect(!admits("k33_subdivided", "1,1,2^3"), "subdivided k33 admits (1,1,2^3)");
  c.expect(!admits("k33_subdivided", "1,2^6"), "subdivided k33 admits (1,2^6)");
}

// ---- 6: constructions succeed on every small graph --------------------------

// Tries alpha_induced_127 under the given proper coloring for each class; on a
// workable class cl, relabeling colors moves cl onto any alpha, so one success
// certifies every alpha. Returns true iff all three relabeled runs verify.
bool alpha_induced_via(const Graph& g, const EdgeColoring& pi) {
  for (int cl = 1; cl <= 3; ++cl) {
    try {
      alpha_induced_127(g, pi, cl);
    } catch (const std::exception&) {
      continue;
    }
    for (int alpha = 1; alpha <= 3; ++alpha) {
      EdgeColoring rel = pi;
      for (int& x : rel.classes) x = x == cl ? alpha : (x == alpha ? cl : x);
      EdgeColoring e = alpha_induced_127(g, rel, alpha);
      if (!verify(g, e).valid) return false;
      for (EdgeId ed = 0; ed < g.edge_count(); ++ed)
        if ((e.classes[ed] == 1) != (rel.classes[ed] == alpha)) return false;
    }
    return true;
  }
  return false;
}

bool alpha_induced_every_alpha(const Graph& g, const EdgeColoring& base) {
  if (alpha_induced_via(g, base)) return true;
  // Rare fallback: scan every proper 3-edge-coloring for a workable class.
  int m = g.edge_count();
  std::vector<int> cls(m, 1);
  PackingSpec p111({1, 1, 1});
  for (;;) {
    EdgeColoring pi{p111, cls};
    if (verify(g, pi).valid && alpha_induced_via(g, pi)) return true;
    int i = 0;
    while (i < m && cls[i] == 3) cls[i++] = 1;
    if (i == m) return false;
    ++cls[i];
  }
}

void criterion6(Checker& c) {
  PackingSpec s1112 = PackingSpec::parse("1,1,1,2");
  PackingSpec class_i = PackingSpec::parse("1,1,2^4");
  PackingSpec class_ii = PackingSpec::parse("1,1,2^5");
  for (int n = 1; n <= 9 && c.ok; ++n)
    for (const Graph& g : enumerate_subcubic(n)) {
      EdgeColoring a = coloring_1112(g);
      c.expect(a.spec == s1112 && verify(g, a).valid, "(1,1,1,2) failed at n=" + std::to_string(n));
      bool class1 = chromatic_index(g) <= 3;
      EdgeColoring b = contraction_coloring(g);
      c.expect(b.spec == (class1 ? class_i : class_ii) && verify(g, b).valid,
               "contraction coloring failed at n=" + std::to_string(n));
      EdgeColoring d = good_128(g);
      c.expect(verify(g, d, true).valid, "good (1,2^8) failed at n=" + std::to_string(n));
      if (class1) {
        SolveOutcome pi = solve(g, PackingSpec({1, 1, 1}));
        c.expect(alpha_induced_every_alpha(g, *pi.coloring),
                 "alpha-induced failed for every proper coloring at n=" + std::to_string(n));
      }
      if (!c.ok) return;
    }
  c.note("note: the 1-class-induced coloring is checked per color class under some proper "
         "3-edge-coloring; under a fixed coloring it can fail (on the Wagner graph with the "
         "rim/spoke coloring, forcing the spokes leaves 8 mutually conflicting rim edges "
         "and only 7 radius-2 classes)");
}

// ---- 7: conjecture surveys at order <= 9 -------------------------------------

void criterion7(Checker& c) {
  SurveyFilters none;
  SurveyFilters class1;
  class1.class_one = true;
  auto count = [&](const char* spec, const SurveyFilters& f) {
    return run_survey(PackingSpec::parse(spec), f, 1, 9, false, jobs());
  };
  for (const char* spec : {"1,1,2^4", "1,2^7"}) {
    SurveyReport r = count(spec, none);
    c.expect(r.undecided == 0 && r.counterexamples.empty(),
             std::string(spec) + " has counterexamples below 10 vertices");
  }
  for (const char* spec : {"1,1,2^3", "1,2^6"}) {
    SurveyReport r = count(spec, class1);
    c.expect(r.undecided == 0 && r.counterexamples.empty(),
             std::string(spec) + " has class I counterexamples below 10 vertices");
  }
  std::string k33 = canonical_form(named_graph("k33"));
  std::string k33s = canonical_form(named_graph("k33_subdivided"));
  auto contains = [](const SurveyReport& r, const std::string& g6) {
    for (const std::string& x : r.counterexamples)
      if (x == g6) return true;
    return false;
  };
  c.expect(contains(count("1,1,2^3", none), k33s), "tightened (1,1,2^3): subdivided k33 missing");
  c.expect(contains(count("1,2^6", none), k33s), "tightened (1,2^6): subdivided k33 missing");
  c.expect(contains(count("1,1,2^2", class1), k33), "tightened (1,1,2^2): k33 missing");
  c.expect(contains(count("1,2^5", class1), k33), "tightened (1,2^5): k33 missing");
}

// ---- 8: induced-matching-at-distance-2 bound ---------------------------------

void criterion8(Checker& c) {
  bool witness_ok = true;
  int max_size = 0;
  for (int n = 1; n <= 10; ++n)
    for (const Graph& g : enumerate_subcubic(n, true, false, 10)) {
      auto set = max_exact2_set(g);
      int size = static_cast<int>(set.size());
      max_size = std::max(max_size, size);
      if (size > 5) {
        c.expect(false, "exact-2 set of size " + std::to_string(size));
        return;
      }
      if (size == 5) {
        bool cubic = g.vertex_count() == 10;
        for (VertexId v = 0; v < g.vertex_count(); ++v) cubic = cubic && g.degree(v) == 3;
        witness_ok = witness_ok && cubic;
      }
    }
  c.expect(max_size == 5, "no size-5 witness found");
  c.expect(witness_ok, "a size-5 witness on a non-cubic or smaller graph");
}

// ---- 9: choosability pattern checks ------------------------------------------

void criterion9(Checker& c) {
  auto status = [](LineKind kind, std::vector<int> pattern, int universe) {
    LineTopology t{kind, static_cast<int>(pattern.size())};
    return check_pattern(t, pattern, universe).status;
  };
  c.expect(status(LineKind::kCycle, std::vector<int>(5, 4), 6) == PatternStatus::kCounterexample,
           "C5 admits a 4-pattern coloring from every assignment");
  c.note("note: C5 genuinely requires size-5 lists, so the exhaustive check reports a "
         "size-4 counterexample assignment rather than choosability");
  for (int n : {4, 7, 8})
    c.expect(status(LineKind::kCycle, std::vector<int>(n, 4), 6) == PatternStatus::kChoosable,
             "C" + std::to_string(n) + " 4-pattern");
  for (int n : {3, 6, 9})
    c.expect(status(LineKind::kCycle, std::vector<int>(n, 3), 5) == PatternStatus::kChoosable,
             "C" + std::to_string(n) + " 3-pattern");
  c.expect(status(LineKind::kPath, {2, 2, 3, 2}, 5) == PatternStatus::kChoosable,
           "path (2,2,3,2)");
  c.expect(status(LineKind::kPath, {2, 2, 3, 3, 2}, 5) == PatternStatus::kChoosable,
           "path (2,2,3,3,2)");
  c.expect(status(LineKind::kPath, {2, 3, 1}, 5) == PatternStatus::kChoosable, "path (2,3,1)");
  c.expect(status(LineKind::kPath, {2, 3, 3, 3, 3, 1}, 5) == PatternStatus::kChoosable,
           "path (2,3^4,1)");
  PatternOptions cert;
  cert.mode = PatternMode::kCertificate;
  c.expect(check_pattern({LineKind::kChordedPath, 8}, {3, 3, 3, 5, 3, 2, 4, 3}, 5, cert).status ==
               PatternStatus::kCertified,
           "chorded path n=8 certificate");
}

// ---- 10: solver vs naive oracle ------------------------------------------------

bool naive_solvable(const Graph& g, const PackingSpec& spec) {
  int m = g.edge_count();
  int k = spec.classes();
  std::vector<int> classes(m, 1);
  for (;;) {
    if (verify(g, {spec, classes}).valid) return true;
    int i = 0;
    while (i < m && classes[i] == k) classes[i++] = 1;
    if (i == m) return false;
    ++classes[i];
  }
}

void criterion10(Checker& c) {
  std::vector<PackingSpec> specs = {PackingSpec({1, 1, 1}), PackingSpec({2, 2, 2}),
                                    PackingSpec({1, 2, 2})};
  int tested = 0;
  for (int n = 1; n <= 9; ++n)
    for (const Graph& g : enumerate_subcubic(n)) {
      if (g.edge_count() > 8) continue;
      ++tested;
      for (const PackingSpec& spec : specs) {
        SolveOutcome out = solve(g, spec);
        bool naive = naive_solvable(g, spec);
        c.expect((out.status == SolveStatus::kFound) == naive &&
                     out.status != SolveStatus::kUndecided,
                 "oracle disagreement on a graph with " + std::to_string(g.edge_count()) +
                     " edges, spec " + spec.to_string());
        if (out.coloring) c.expect(verify(g, *out.coloring).valid, "invalid coloring returned");
      }
    }
  c.expect(tested == 159, "unexpected graph count: " + std::to_string(tested));
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<void(Checker&)> run;
  };
  std::vector<Entry> entries = {
      {"1 chorded-cycle coefficient table d_6..d_11", criterion1},
      {"2 path closed forms and recurrence", criterion2},
      {"3 alpha/beta and non-colorable cycle lists", criterion3},
      {"4 thirteen-factor polynomial certificate", criterion4},
      {"5 named-graph facts", criterion5},
      {"6 constructions on all subcubic graphs up to 9 vertices", criterion6},
      {"7 spec surveys up to 9 vertices", criterion7},
      {"8 exact-distance-2 matching bound up to 10 vertices", criterion8},
      {"9 choosability pattern checks", criterion9},
      {"10 solver equals naive oracle on up to 8 edges", criterion10},
  };
  bool all_ok = true;
  for (Entry& e : entries) {
    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.ok = false;
      c.notes.push_back(std::string("exception: ") + ex.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %s: %s (%.1fs)\n", e.name, c.ok ? "PASS" : "FAIL", secs);
    for (const std::string& note : c.notes) std::printf("  %s\n", note.c_str());
    std::fflush(stdout);
    all_ok = all_ok && c.ok;
  }
  return all_ok ? 0 : 1;
}
