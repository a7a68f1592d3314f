#pragma once

#include <compare>
#include <string>

#include "walkmat/graph.hpp"

namespace walkmat {

/// Complete isomorphism invariant: the graph6 encoding of a canonical
/// relabeling. cert(g) == cert(h) exactly when g and h are isomorphic.
struct CanonicalForm {
  std::string cert;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Orders above this are rejected. Twelve keeps the labeling search
/// cheap even on regular graphs; census work never goes past eight.
constexpr int canonical_order_bound = 12;

/// Canonical labeling by partition refinement plus backtracking over the
/// individualization tree, pruned with automorphisms found along the way.
/// Deterministic. Throws std::out_of_range above canonical_order_bound.
CanonicalForm canonical_form(const Graph& g);

/// The relabeled graph whose graph6 encoding equals canonical_form(g).cert.
Graph canonical_relabel(const Graph& g);

/// Canonical-form equality, after cheap order and edge-count screens.
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace walkmat
