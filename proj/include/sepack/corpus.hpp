#pragma once

#include <string>
#include <vector>

#include "sepack/graph.hpp"

namespace sepack {

// Canonical small graphs. Accepted names: k4, k4_subdivided, k33,
// k33_subdivided, petersen, tietze, wagner, prism3, cycle(n), path(n).
Graph named_graph(const std::string& name);
std::vector<std::string> named_graph_names();

enum class GraphFormat { kEdgeList, kGraph6 };

// EDGELIST: "n m" header followed by m lines "u v" (0-based); lines starting
// with '#' are comments. GRAPH6: standard bit-packed encoding, simple graphs
// only.
Graph read_graph(const std::string& bytes, GraphFormat format);
std::string write_graph(const Graph& g, GraphFormat format);

// Reads a file, picking the format from the extension (.g6 vs anything else)
// unless the content settles it.
Graph load_graph_file(const std::string& path);

}  // namespace sepack
