#include "walkmat/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "walkmat/canonical.hpp"
#include "walkmat/graph6.hpp"

namespace walkmat {

namespace {

void check_order(int n) {
  if (n < 1 || n > enumeration_order_bound)
    throw std::out_of_range("enumeration supports orders 1.." +
                            std::to_string(enumeration_order_bound) + ", got " +
                            std::to_string(n));
}

}  // namespace

std::uint64_t labeled_graph_count(int n) {
  check_order(n);
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph labeled_graph(int n, std::uint64_t index) {
  check_order(n);
  if (index >= labeled_graph_count(n)) throw std::out_of_range("labeled graph index out of range");
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((index >> bit) & 1u) g.add_edge(u, v);
  return g;
}

std::vector<Graph> graph_classes(int n, bool connected_only) {
  check_order(n);

  std::vector<Graph> reps = {Graph(1)};
  for (int m = 2; m <= n; ++m) {
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& base : reps) {
      const std::uint64_t neighbourhoods = std::uint64_t{1} << (m - 1);
      for (std::uint64_t mask = 0; mask < neighbourhoods; ++mask) {
        Graph extended(m);
        for (int u = 0; u + 1 < m; ++u)
          for (int v = u + 1; v + 1 < m; ++v)
            if (base.adjacent(u, v)) extended.add_edge(u, v);
        for (int u = 0; u + 1 < m; ++u)
          if ((mask >> u) & 1u) extended.add_edge(u, m - 1);
        Graph canonical = canonical_relabel(extended);
        if (seen.insert(graph6_encode(canonical)).second) next.push_back(std::move(canonical));
      }
    }
    reps = std::move(next);
  }

  if (connected_only) {
    std::erase_if(reps, [](const Graph& g) { return !is_connected(g); });
  }
  std::sort(reps.begin(), reps.end(), [](const Graph& a, const Graph& b) {
    return graph6_encode(a) < graph6_encode(b);
  });
  return reps;
}

}  // namespace walkmat
