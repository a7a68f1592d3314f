#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace walkmat {

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one 64-bit neighbour mask per vertex, so the
/// order is capped at 64. That covers everything this library does:
/// census work stops at n = 8 and family construction at n = 62 (the
/// graph6 limit).
class Graph {
public:
  static constexpr int max_vertices = 64;

  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  bool adjacent(int u, int v) const;
  void add_edge(int u, int v);

  /// Neighbour set of v as a bit mask.
  std::uint64_t neighbour_mask(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  int degree(int v) const;
  int edge_count() const;
  std::vector<int> degree_sequence() const;  // sorted ascending

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

Graph complement(const Graph& g);

/// Adds an isolated vertex w in front: w gets index 0, old vertex i
/// becomes i+1. The placement fixes the sign of the walk determinant
/// identities checked in walk_matrix.hpp.
Graph union_with_vertex(const Graph& g);

/// Adds a dominating vertex w in front (index 0, adjacent to all).
/// Satisfies join_with_vertex(g) == complement(union_with_vertex(complement(g))).
Graph join_with_vertex(const Graph& g);

/// result.adjacent(i, j) == g.adjacent(perm[i], perm[j]); perm maps the
/// positions of the result onto the vertices of g.
Graph relabel(const Graph& g, const std::vector<int>& perm);

bool is_connected(const Graph& g);

/// Parses the plain-text edge list "n; u v; u v; ...".
/// Throws std::invalid_argument on malformed input.
Graph parse_edge_list(const std::string& text);

// small named graphs, mostly for tests and docs
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}, centre at index 0

}  // namespace walkmat
