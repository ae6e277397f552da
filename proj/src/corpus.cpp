#include "sepack/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sepack {

namespace {

Graph petersen() {
  // Kneser (5,2) labeling: vertices are the 2-subsets of {0..4} in
  // lexicographic order, adjacent iff disjoint.
  std::vector<std::pair<int, int>> subsets;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
  std::vector<Edge> edges;
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      auto [a, b] = subsets[i];
      auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d) edges.push_back({i, j});
    }
  return Graph(10, std::move(edges));
}

Graph tietze() {
  // Expand vertex 0 of the Petersen graph above into a triangle; the three
  // triangle vertices 0,1,2 take over the neighbors of the old vertex in
  // ascending order, remaining vertices shift up by 2.
  Graph p = petersen();
  std::vector<VertexId> nbrs;
  for (EdgeId e : p.incident_edges(0)) nbrs.push_back(p.other_end(e, 0));
  std::sort(nbrs.begin(), nbrs.end());
  std::vector<Edge> edges = {{0, 1}, {1, 2}, {2, 0}};
  for (int i = 0; i < 3; ++i) edges.push_back({i, nbrs[i] + 2});
  for (const Edge& e : p.edges())
    if (e.u != 0 && e.v != 0) edges.push_back({e.u + 2, e.v + 2});
  return Graph(12, std::move(edges));
}

Graph wagner() {
  std::vector<Edge> edges;
  for (int i = 0; i < 8; ++i) edges.push_back({i, (i + 1) % 8});
  for (int i = 0; i < 4; ++i) edges.push_back({i, i + 4});
  return Graph(8, std::move(edges));
}

Graph prism3() {
  return Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

Graph k4_subdivided() {
  // K4 with the edge 01 subdivided by the new vertex 4.
  return Graph(5, {{0, 4}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Graph k33() {
  std::vector<Edge> edges;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) edges.push_back({a, b});
  return Graph(6, std::move(edges));
}

Graph k33_subdivided() {
  // K3,3 with the edge 03 subdivided by the new vertex 6.
  std::vector<Edge> edges = {{0, 6}, {6, 3}};
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b)
      if (!(a == 0 && b == 3)) edges.push_back({a, b});
  return Graph(7, std::move(edges));
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

bool parse_parametric(const std::string& name, const std::string& head, int& n) {
  if (name.size() <= head.size() + 2 || name.compare(0, head.size(), head) != 0) return false;
  if (name[head.size()] != '(' || name.back() != ')') return false;
  std::string num = name.substr(head.size() + 1, name.size() - head.size() - 2);
  if (num.empty() || !std::all_of(num.begin(), num.end(), [](unsigned char c) { return std::isdigit(c); }))
    return false;
  n = std::stoi(num);
  return true;
}

}  // namespace

Graph named_graph(const std::string& name) {
  if (name == "k4") return k4();
  if (name == "k4_subdivided") return k4_subdivided();
  if (name == "k33") return k33();
  if (name == "k33_subdivided") return k33_subdivided();
  if (name == "petersen") return petersen();
  if (name == "tietze") return tietze();
  if (name == "wagner") return wagner();
  if (name == "prism3") return prism3();
  int n = 0;
  if (parse_parametric(name, "cycle", n)) return cycle(n);
  if (parse_parametric(name, "path", n)) return path(n);
  throw std::invalid_argument("unknown graph name: " + name);
}

std::vector<std::string> named_graph_names() {
  return {"k4", "k4_subdivided", "k33", "k33_subdivided", "petersen", "tietze",
          "wagner", "prism3", "cycle(n)", "path(n)"};
}

namespace {

[[noreturn]] void parse_fail(const std::string& what, int line) {
  throw std::runtime_error("parse error at line " + std::to_string(line) + ": " + what);
}

Graph read_edgelist(const std::string& bytes) {
  std::istringstream in(bytes);
  std::string line;
  int lineno = 0;
  int n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m) || n < 0 || m < 0) parse_fail("expected header \"n m\"", lineno);
    } else {
      int u, v;
      if (!(ls >> u >> v)) parse_fail("expected edge \"u v\"", lineno);
      if (u < 0 || u >= n || v < 0 || v >= n) parse_fail("endpoint out of range", lineno);
      edges.push_back({u, v});
    }
    std::string rest;
    if (ls >> rest && rest[0] != '#') parse_fail("trailing tokens", lineno);
  }
  if (n < 0) parse_fail("missing header", lineno);
  if (static_cast<int>(edges.size()) != m) parse_fail("edge count does not match header", lineno);
  return Graph(n, std::move(edges));
}

[[noreturn]] void g6_fail(const std::string& what, size_t pos) {
  throw std::runtime_error("graph6 error at byte " + std::to_string(pos) + ": " + what);
}

Graph read_graph6(const std::string& raw) {
  std::string bytes = raw;
  while (!bytes.empty() && (bytes.back() == '\n' || bytes.back() == '\r')) bytes.pop_back();
  if (!bytes.empty() && bytes.compare(0, 10, ">>graph6<<") == 0) bytes.erase(0, 10);
  if (bytes.empty()) g6_fail("empty input", 0);
  size_t pos = 0;
  long long n;
  if (bytes[pos] == 126) {
    if (bytes.size() >= 2 && bytes[1] == 126) g6_fail("graphs beyond 258047 vertices unsupported", 1);
    if (bytes.size() < 4) g6_fail("truncated vertex count", bytes.size());
    n = 0;
    for (int i = 1; i <= 3; ++i) {
      int c = static_cast<unsigned char>(bytes[i]) - 63;
      if (c < 0 || c > 63) g6_fail("byte out of range", i);
      n = (n << 6) | c;
    }
    pos = 4;
  } else {
    n = static_cast<unsigned char>(bytes[pos]) - 63;
    if (n < 0 || n > 62) g6_fail("byte out of range", pos);
    pos = 1;
  }
  long long nbits = n * (n - 1) / 2;
  size_t need = pos + static_cast<size_t>((nbits + 5) / 6);
  if (bytes.size() != need) g6_fail("length does not match vertex count", bytes.size());
  std::vector<Edge> edges;
  long long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      size_t byte = pos + static_cast<size_t>(bit / 6);
      int c = static_cast<unsigned char>(bytes[byte]) - 63;
      if (c < 0 || c > 63) g6_fail("byte out of range", byte);
      if ((c >> (5 - bit % 6)) & 1) edges.push_back({i, j});
    }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& g) {
  if (!g.is_simple()) throw std::invalid_argument("graph6 cannot encode multigraphs");
  int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw std::invalid_argument("graph too large for this encoder");
  }
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  int acc = 0, nb = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (adj[i][j] ? 1 : 0);
      if (++nb == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nb = 0;
      }
    }
  if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
  return out;
}

std::string write_edgelist(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace

Graph read_graph(const std::string& bytes, GraphFormat format) {
  return format == GraphFormat::kEdgeList ? read_edgelist(bytes) : read_graph6(bytes);
}

std::string write_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::kEdgeList ? write_edgelist(g) : write_graph6(g);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  bool g6 = path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0;
  return read_graph(buf.str(), g6 ? GraphFormat::kGraph6 : GraphFormat::kEdgeList);
}

}  // namespace sepack
