#include "walkmat/sachs.hpp"

#include <cstdint>
#include <stdexcept>

namespace walkmat {

int ElementarySubgraph::span() const {
  int total = static_cast<int>(edges.size()) * 2;
  for (const auto& cycle : cycles) total += static_cast<int>(cycle.size());
  return total;
}

namespace {

struct SubgraphSearch {
  const Graph& g;
  int n;
  std::uint64_t used = 0;
  ElementarySubgraph current;
  std::vector<ElementarySubgraph>& out;

  SubgraphSearch(const Graph& graph, std::vector<ElementarySubgraph>& sink)
      : g(graph), n(graph.order()), out(sink) {}

  bool is_used(int v) const { return (used >> v) & 1u; }
  void mark(int v) { used |= std::uint64_t{1} << v; }
  void unmark(int v) { used &= ~(std::uint64_t{1} << v); }

  // Extends a path anchored at `anchor` through unused vertices larger
  // than the anchor; whenever the path closes back it emits one cycle.
  // path[1] < path.back() fixes the orientation.
  void grow_cycles(int anchor, std::vector<int>& path, int remaining) {
    const int tip = path.back();
    for (int next = anchor + 1; next < n; ++next) {
      if (is_used(next) || !g.adjacent(tip, next)) continue;
      path.push_back(next);
      mark(next);
      if (path.size() >= 3 && g.adjacent(next, anchor) && path[1] < next) {
        current.cycles.push_back(path);
        descend(remaining - static_cast<int>(path.size()), anchor + 1);
        current.cycles.pop_back();
      }
      if (static_cast<int>(path.size()) < remaining) grow_cycles(anchor, path, remaining);
      unmark(next);
      path.pop_back();
    }
  }

  // Chooses the next component; anchors (least vertices of components)
  // increase strictly, so every subgraph is generated exactly once.
  void descend(int remaining, int min_anchor) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int anchor = min_anchor; anchor < n; ++anchor) {
      if (is_used(anchor)) continue;
      mark(anchor);
      if (remaining >= 2) {
        for (int other = anchor + 1; other < n; ++other) {
          if (is_used(other) || !g.adjacent(anchor, other)) continue;
          mark(other);
          current.edges.emplace_back(anchor, other);
          descend(remaining - 2, anchor + 1);
          current.edges.pop_back();
          unmark(other);
        }
      }
      if (remaining >= 3) {
        std::vector<int> path = {anchor};
        grow_cycles(anchor, path, remaining);
      }
      unmark(anchor);
    }
  }
};

void check_bounds(const Graph& g, int span) {
  if (g.order() > sachs_order_bound)
    throw std::out_of_range("elementary subgraph enumeration supports at most " +
                            std::to_string(sachs_order_bound) + " vertices");
  if (span < 0 || span > g.order())
    throw std::out_of_range("subgraph span must be in [0, order]");
}

}  // namespace

std::vector<ElementarySubgraph> enumerate_elementary_subgraphs(const Graph& g, int span) {
  check_bounds(g, span);
  std::vector<ElementarySubgraph> out;
  if (span == 0) {
    out.emplace_back();  // the empty subgraph
    return out;
  }
  SubgraphSearch search(g, out);
  search.descend(span, 0);
  return out;
}

mpz_class sachs_coefficient(const Graph& g, int i) {
  check_bounds(g, i);
  mpz_class total(0);
  for (const auto& subgraph : enumerate_elementary_subgraphs(g, i)) {
    mpz_class term(1);
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(subgraph.cycle_count()));
    if (subgraph.components() % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

IntPoly char_poly_via_sachs(const Graph& g) {
  const int n = g.order();
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs[0] = 1;
  for (int i = 1; i <= n; ++i) coeffs[static_cast<std::size_t>(i)] = sachs_coefficient(g, i);
  return IntPoly(std::move(coeffs));
}

bool check_family_constant_terms(const std::vector<FamilyStep>& steps,
                                 const FamilyParams& params) {
  for (const auto& step : steps) {
    if (step.index % 2 == 0) {
      if (abs(determinant(adjacency_matrix(step.graph))) != params.a) return false;
    } else {
      if (abs(determinant(adjacency_matrix(complement(step.graph)))) != params.p) return false;
    }
  }
  return true;
}

}  // namespace walkmat
