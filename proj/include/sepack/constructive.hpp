#pragma once

#include <array>
#include <optional>
#include <vector>

#include "sepack/graph.hpp"
#include "sepack/packing.hpp"

namespace sepack {

// A (1,1,1,2)-coloring; exists for every subcubic graph.
EdgeColoring coloring_1112(const Graph& g);

// A (1,1,2^5)-coloring built by refining one matching class of a
// (1,1,1,2)-coloring through contraction and vertex coloring; 3-edge-colorable
// inputs start from (1,1,1) and end in (1,1,2^4).
EdgeColoring contraction_coloring(const Graph& g);

// A good (1,2^8)-coloring: no vertex of degree <= 2 touches the 1-class.
// Computed by structural reduction (multi-edges, low-degree vertices, bridges,
// short cycles), recursing on the reduced graph and extending by bounded
// search; falls back to a direct solve when an extension step fails.
EdgeColoring good_128(const Graph& g);

// Result of removing a 6-vertex path P = u_0..u_5 of a bc-cycle together with
// the a-colored pendants of u_1..u_4, and adding the a-colored edges
// u_1'u_3' and u_2'u_4'.
struct Crossing {
  Graph graph;
  EdgeColoring coloring;          // proper 3-edge-coloring of the new graph
  std::vector<EdgeId> edge_map;   // new edge -> old edge id, -1 for the two added edges
  std::array<VertexId, 6> path{};
  std::array<VertexId, 6> pendants{};  // u_i' for i = 0..5
};

// pi must be a proper 3-edge-coloring of g; the path's five edges must
// alternate between the two colors other than a, and every path vertex needs
// an a-colored pendant edge.
Crossing crossing(const Graph& g, const EdgeColoring& pi, const std::array<VertexId, 6>& path);

// A (1,2^7)-coloring whose 1-class is exactly the alpha_class edges of the
// proper 3-edge-coloring pi. Throws if pi is not proper; a failure to extend
// (impossible for class I subcubic graphs) raises a logic error.
EdgeColoring alpha_induced_127(const Graph& g, const EdgeColoring& pi, int alpha_class);

// Classification of the available-color lists of the three middle path edges
// after a crossing.
struct ListTrichotomy {
  enum class Case { kMiddleFull, kSharedSlack, kDisjointEnds, kNoCase };
  Case c = Case::kNoCase;
  int x = 0;  // kSharedSlack: the shared spare color; kDisjointEnds: escape in L1
  int y = 0;  // kDisjointEnds: escape color in L3
};

ListTrichotomy crossing_list_trichotomy(const std::vector<int>& l1, const std::vector<int>& l2,
                                        const std::vector<int>& l3);

}  // namespace sepack
