#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sepack/graph.hpp"

namespace sepack {

// A packing spec is a non-decreasing-free list of class radii, e.g. (1,2,2).
// Class i (1-based) must be an s_i-packing: any two of its edges lie at edge
// distance at least s_i + 1.
class PackingSpec {
public:
  PackingSpec() = default;
  explicit PackingSpec(std::vector<int> radii);

  // Accepts "1,2,2" and exponent shorthand "1,2^8".
  static PackingSpec parse(const std::string& text);
  std::string to_string() const;

  int classes() const { return static_cast<int>(radii_.size()); }
  int radius(int cls) const;  // cls is 1-based
  const std::vector<int>& radii() const { return radii_; }

  bool operator==(const PackingSpec&) const = default;

private:
  std::vector<int> radii_;
};

// Per-edge class assignment; 0 means uncolored.
struct EdgeColoring {
  PackingSpec spec;
  std::vector<int> classes;
};

struct Violation {
  enum class Kind { kPair, kGoodVertex, kUncolored, kBadClass };
  Kind kind;
  EdgeId e = -1, f = -1;   // kPair: edges of the same class too close
  VertexId vertex = -1;    // kGoodVertex: 2⁻-vertex meeting a radius-1 class
  int cls = 0;
  int distance = 0;
};

struct VerifyResult {
  bool valid = false;
  std::vector<Violation> violations;
};

// good = additionally require that no vertex of degree <= 2 is incident with
// an edge of a class of radius 1 (partial colorings: only assigned edges are
// checked for pair violations, but every edge must be assigned unless
// `allow_partial`).
VerifyResult verify(const Graph& g, const EdgeColoring& coloring, bool good = false,
                    bool allow_partial = false);

enum class SolveStatus { kFound, kNone, kUndecided };

struct SolveOptions {
  bool good = false;
  // forced[e] = cls pins edge e to that class; forbid lists (edge, cls) pairs
  // that may not be used.
  std::map<EdgeId, int> forced;
  std::vector<std::pair<EdgeId, int>> forbid;
  std::uint64_t node_budget = 0;  // 0 = unlimited
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::kNone;
  std::optional<EdgeColoring> coloring;  // set iff status == kFound
  std::uint64_t nodes = 0;
};

SolveOutcome solve(const Graph& g, const PackingSpec& spec, const SolveOptions& options = {});

// Smallest k with a proper k-edge-coloring, i.e. spec (1^k).
int chromatic_index(const Graph& g);

// Smallest k with a strong edge-coloring, i.e. spec (2^k).
int strong_index(const Graph& g);

// A system of distinct representatives: lists[i] is a set of candidates;
// returns one element per list, all distinct, or nullopt.
std::optional<std::vector<int>> sdr(const std::vector<std::vector<int>>& lists);

// A maximum set of edges that pairwise lie at edge distance exactly 2.
std::vector<EdgeId> max_exact2_set(const Graph& g);

}  // namespace sepack
