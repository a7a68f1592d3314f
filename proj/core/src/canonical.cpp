#include "walkmat/canonical.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "walkmat/graph6.hpp"

namespace walkmat {

namespace {

using Cells = std::vector<std::vector<int>>;

// Equitable refinement. Repeatedly splits cells by the number of
// neighbours each vertex has inside every other cell; subcells are
// ordered by ascending count. The whole procedure only looks at
// label-independent data, so it commutes with isomorphism.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      std::uint64_t splitter = 0;
      for (int v : cells[s]) splitter |= std::uint64_t{1} << v;
      for (std::size_t d = 0; d < cells.size(); ++d) {
        if (cells[d].size() <= 1) continue;
        std::map<int, std::vector<int>> groups;
        for (int v : cells[d])
          groups[std::popcount(g.neighbour_mask(v) & splitter)].push_back(v);
        if (groups.size() <= 1) continue;
        Cells next;
        next.reserve(cells.size() + groups.size() - 1);
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i == d) {
            for (auto& [count, members] : groups) next.push_back(std::move(members));
          } else {
            next.push_back(std::move(cells[i]));
          }
        }
        cells = std::move(next);
        changed = true;
        break;
      }
    }
  }
}

struct LabelingSearch {
  const Graph& g;
  int n;
  bool have_best = false;
  std::vector<int> best;              // position -> vertex
  std::vector<std::uint8_t> best_bits;
  std::vector<std::vector<int>> automorphisms;

  static constexpr std::size_t max_stored_automorphisms = 128;

  explicit LabelingSearch(const Graph& graph) : g(graph), n(graph.order()) {}

  // Upper-triangle adjacency bits of the partial labeling, column-major,
  // matching the graph6 bit order.
  std::vector<std::uint8_t> bits_of(const std::vector<int>& seq) const {
    std::vector<std::uint8_t> bits;
    bits.reserve(seq.size() * (seq.size() + 1) / 2);
    for (std::size_t col = 1; col < seq.size(); ++col)
      for (std::size_t row = 0; row < col; ++row)
        bits.push_back(g.adjacent(seq[row], seq[col]) ? 1 : 0);
    return bits;
  }

  // lexicographic comparison of a against the same-length prefix of best_bits
  int compare_prefix(const std::vector<std::uint8_t>& a) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != best_bits[i]) return a[i] < best_bits[i] ? -1 : 1;
    }
    return 0;
  }

  void record_automorphism(const std::vector<int>& labeling) {
    if (automorphisms.size() >= max_stored_automorphisms) return;
    std::vector<int> sigma(static_cast<std::size_t>(n));
    for (int pos = 0; pos < n; ++pos)
      sigma[static_cast<std::size_t>(best[static_cast<std::size_t>(pos)])] =
          labeling[static_cast<std::size_t>(pos)];
    for (int v = 0; v < n; ++v)
      if (sigma[static_cast<std::size_t>(v)] != v) {
        automorphisms.push_back(std::move(sigma));
        return;
      }
    // identity: nothing worth keeping
  }

  // v is redundant if a known automorphism fixes the current prefix
  // pointwise and maps an already-tried branch onto v.
  bool pruned(const std::vector<int>& prefix, const std::vector<int>& tried, int v) const {
    for (const auto& sigma : automorphisms) {
      bool fixes_prefix = true;
      for (int w : prefix)
        if (sigma[static_cast<std::size_t>(w)] != w) {
          fixes_prefix = false;
          break;
        }
      if (!fixes_prefix) continue;
      for (int u : tried)
        if (sigma[static_cast<std::size_t>(u)] == v) return true;
    }
    return false;
  }

  void search(Cells cells) {
    refine(g, cells);

    std::vector<int> prefix;
    std::size_t ci = 0;
    while (ci < cells.size() && cells[ci].size() == 1) prefix.push_back(cells[ci++][0]);

    const auto partial = bits_of(prefix);
    if (have_best && compare_prefix(partial) < 0) return;  // cannot beat the best labeling

    if (ci == cells.size()) {
      if (!have_best) {
        best = prefix;
        best_bits = partial;
        have_best = true;
        return;
      }
      const int cmp = compare_prefix(partial);
      if (cmp > 0) {
        best = prefix;
        best_bits = partial;
      } else if (cmp == 0) {
        record_automorphism(prefix);
      }
      return;
    }

    std::vector<int> tried;
    for (int v : cells[ci]) {
      if (pruned(prefix, tried, v)) continue;
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < ci; ++i) child.push_back(cells[i]);
      child.push_back({v});
      std::vector<int> rest;
      for (int u : cells[ci])
        if (u != v) rest.push_back(u);
      child.push_back(std::move(rest));
      for (std::size_t i = ci + 1; i < cells.size(); ++i) child.push_back(cells[i]);
      search(std::move(child));
      tried.push_back(v);
    }
  }
};

std::vector<int> canonical_labeling(const Graph& g) {
  const int n = g.order();
  if (n > canonical_order_bound)
    throw std::out_of_range("canonical labeling supports at most " +
                            std::to_string(canonical_order_bound) + " vertices, got " +
                            std::to_string(n));
  if (n == 0) return {};

  // seed cells: vertices grouped by degree, ascending
  std::map<int, std::vector<int>> by_degree;
  for (int v = 0; v < n; ++v) by_degree[g.degree(v)].push_back(v);
  Cells cells;
  for (auto& [degree, members] : by_degree) cells.push_back(std::move(members));

  LabelingSearch search(g);
  search.search(std::move(cells));
  return search.best;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  return CanonicalForm{graph6_encode(canonical_relabel(g))};
}

Graph canonical_relabel(const Graph& g) {
  if (g.order() == 0) return g;
  return relabel(g, canonical_labeling(g));
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  if (g.edge_count() != h.edge_count()) return false;
  if (g.degree_sequence() != h.degree_sequence()) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace walkmat
