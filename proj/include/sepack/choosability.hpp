#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sepack/poly.hpp"

namespace sepack {

// Line configurations whose edges are colored under the strong (distance <= 2)
// rule. kChordedPath is the path u_0..u_n with the extra structural edge
// u_1 u_{n-1}, which constrains distances but is itself never colored.
enum class LineKind { kPath, kCycle, kChordedPath };

struct LineTopology {
  LineKind kind = LineKind::kPath;
  int length = 0;  // number of colorable edges
};

// Pairs of 1-based edge positions in conflict (distance <= 2 in the
// underlying graph, through the chord where present).
std::vector<std::pair<int, int>> conflict_positions(const LineTopology& t);

// lists[i] is the color list of position i+1.
using ListAssignment = std::vector<std::vector<int>>;

// Exact search for a strong list coloring; nullopt iff none exists.
std::optional<std::vector<int>> list_color_line(const LineTopology& t, const ListAssignment& lists);

enum class PatternMode { kExhaustive, kRandom, kCertificate };

struct PatternOptions {
  PatternMode mode = PatternMode::kExhaustive;
  std::uint64_t seed = 0;       // random mode only
  std::uint64_t trials = 1000;  // random mode only
};

enum class PatternStatus { kChoosable, kCounterexample, kCertified, kInconclusive };

struct PatternVerdict {
  PatternStatus status = PatternStatus::kInconclusive;
  ListAssignment counterexample;          // set for kCounterexample
  std::optional<Monomial> certificate;    // set for kCertified
  int universe = 0;                       // color pool the verdict is relative to
  std::uint64_t assignments_checked = 0;
  std::string note;
};

// Decides whether every assignment of lists with the given sizes admits a
// strong coloring. Exhaustive mode enumerates lists over {1..universe} up to
// color renaming, so kChoosable is relative to the recorded universe;
// certificate mode is universe-independent but only ever affirms.
PatternVerdict check_pattern(const LineTopology& t, const std::vector<int>& pattern, int universe,
                             const PatternOptions& options = {});

// Color-propagation along a path of length 3l+1 whose middle lists all equal
// the 3-set X: true iff every strong list coloring assigns the first and last
// edge the same color (checked exhaustively; vacuously true when no coloring
// exists). First and last lists must have size 1..3 and be subsets of X.
bool trick_check(const ListAssignment& lists, const std::vector<int>& x);

// The explicit non-choosable cycle list families with size pattern
// (3,3,2,3,5,3,2,3^{n-9},4,2), one family per residue of n mod 3. n >= 10.
ListAssignment bad_cycle_lists(int n);

}  // namespace sepack
