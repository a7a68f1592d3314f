#include "walkmat/graph.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>
#include <algorithm>

namespace walkmat {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > max_vertices)
    throw std::out_of_range("graph order must be in [0, 64], got " + std::to_string(n));
  rows_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " +
                            std::to_string(n_) + ")");
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (rows_[static_cast<std::size_t>(u)] >> v) & 1u;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self loops are not allowed");
  rows_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  rows_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(rows_[static_cast<std::size_t>(v)]);
}

int Graph::edge_count() const {
  int total = 0;
  for (auto row : rows_) total += std::popcount(row);
  return total / 2;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> degs(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) degs[static_cast<std::size_t>(v)] = degree(v);
  std::sort(degs.begin(), degs.end());
  return degs;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph result(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) result.add_edge(u, v);
  return result;
}

Graph union_with_vertex(const Graph& g) {
  const int n = g.order();
  Graph result(n + 1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v)) result.add_edge(u + 1, v + 1);
  return result;
}

Graph join_with_vertex(const Graph& g) {
  Graph result = union_with_vertex(g);
  for (int v = 1; v <= g.order(); ++v) result.add_edge(0, v);
  return result;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permutation length does not match graph order");
  Graph result(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
        result.add_edge(i, j);
  return result;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw std::out_of_range("connectivity is undefined for the empty graph");
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1)
      next |= g.neighbour_mask(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  if (n == 64) return seen == ~std::uint64_t{0};
  return seen == (std::uint64_t{1} << n) - 1;
}

Graph parse_edge_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ';') {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);

  auto parse_int = [](const std::string& token, const char* what) {
    std::istringstream in(token);
    int value = 0;
    if (!(in >> value)) throw std::invalid_argument(std::string("expected ") + what);
    return value;
  };

  if (parts.empty()) throw std::invalid_argument("empty edge list");
  Graph g(parse_int(parts[0], "vertex count"));
  for (std::size_t k = 1; k < parts.size(); ++k) {
    std::istringstream in(parts[k]);
    int u = 0, v = 0;
    if (!(in >> u)) {
      std::string stray;
      std::istringstream probe(parts[k]);
      if (probe >> stray)
        throw std::invalid_argument("malformed edge at segment " + std::to_string(k));
      continue;  // blank segment, e.g. a trailing ";"
    }
    if (!(in >> v)) throw std::invalid_argument("edge needs two endpoints at segment " + std::to_string(k));
    std::string extra;
    if (in >> extra) throw std::invalid_argument("trailing tokens in edge at segment " + std::to_string(k));
    g.add_edge(u, v);
  }
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycles need at least three vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

}  // namespace walkmat
