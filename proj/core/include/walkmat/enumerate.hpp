#pragma once

#include <cstdint>
#include <vector>

#include "walkmat/graph.hpp"

namespace walkmat {

/// Exhaustive enumeration is desk-scale work; n = 8 already means 2^28
/// labeled graphs.
constexpr int enumeration_order_bound = 8;

/// 2^{n(n-1)/2} for 1 <= n <= enumeration_order_bound.
std::uint64_t labeled_graph_count(int n);

/// The labeled graph at a given index, the primitive behind exhaustive
/// scans. Bit k of the index picks the vertex pair at position k in
/// row-major order (0,1), (0,2), ..., (n-2,n-1); the least significant
/// bit is the pair (0,1). Scans partition [0, labeled_graph_count(n))
/// into index ranges, one per worker.
Graph labeled_graph(int n, std::uint64_t index);

/// One canonically labeled representative per isomorphism class, sorted
/// by canonical graph6 text. Built by extending the class list of order
/// n-1 with one new vertex in every possible way and deduplicating by
/// canonical form; every n-vertex graph contains an (n-1)-vertex induced
/// subgraph, so the sweep is exhaustive.
std::vector<Graph> graph_classes(int n, bool connected_only = false);

}  // namespace walkmat
