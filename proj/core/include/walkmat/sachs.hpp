#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "walkmat/family.hpp"
#include "walkmat/graph.hpp"
#include "walkmat/int_matrix.hpp"

namespace walkmat {

/// Subgraph enumeration is exponential; sixteen vertices is far past
/// anything the rest of the library asks for.
constexpr int sachs_order_bound = 16;

/// A subgraph whose components are single edges and cycles, the
/// combinatorial pieces behind the characteristic-polynomial
/// coefficients.
struct ElementarySubgraph {
  std::vector<std::pair<int, int>> edges;  // K2 components, (min, max) pairs
  std::vector<std::vector<int>> cycles;    // length >= 3, anchored at their least vertex

  int span() const;
  int components() const { return static_cast<int>(edges.size() + cycles.size()); }
  int cycle_count() const { return static_cast<int>(cycles.size()); }
};

/// Every elementary subgraph covering exactly `span` vertices, each once.
/// Components are generated with strictly increasing least vertices and
/// cycles carry a fixed orientation, which rules out double counting.
std::vector<ElementarySubgraph> enumerate_elementary_subgraphs(const Graph& g, int span);

/// Coefficient c_i of the characteristic polynomial as the signed count
/// sum_{H} (-1)^{components(H)} 2^{cycles(H)} over elementary subgraphs
/// on i vertices; c_0 = 1.
mpz_class sachs_coefficient(const Graph& g, int i);

/// Assembles the full polynomial from the coefficients above. Serves as
/// an oracle that is independent of the elimination-based char_poly.
IntPoly char_poly_via_sachs(const Graph& g);

/// The determinant bookkeeping that makes the family construction tick:
/// |det A| = a at even steps, |det A(complement)| = p at odd steps.
bool check_family_constant_terms(const std::vector<FamilyStep>& steps,
                                 const FamilyParams& params);

}  // namespace walkmat
