// Exact edge-subset searches shared by the collapsibility and trail
// modules. All searches are deterministic: fixed edge orders, fixed branch
// preference, no randomness.
#pragma once

#include <optional>
#include <vector>

#include "supereuler/graph.hpp"

namespace supereuler::detail {

enum class EdgeOrder {
  lexicographic,        // (u, v) ascending
  edge_degree_desc,     // d(u)+d(v) descending, ties lexicographic
};

// F subseteq E(g) with odd-degree set exactly `target`, spanning and
// connected as a spanning subgraph. `forced` edges are pre-included.
std::optional<std::vector<Edge>> spanning_parity_subgraph(
    const Graph& g, VertexSet target, const std::vector<Edge>& forced,
    EdgeOrder order);

// Connected even subgraph with at least one edge whose support meets every
// edge of g. Support need not span. (Trivial one-vertex covers are the
// caller's case.)
std::optional<std::vector<Edge>> dominating_even_subgraph(const Graph& g);

// Spanning connected even sub-multigraph, per-edge usage in {0, 1, 2}.
// Returns the usage-expanded edge list. Exact; used for cross-checking
// contraction invariance without assuming it.
std::optional<std::vector<Edge>> multigraph_even_spanning(const Multigraph& g);

}  // namespace supereuler::detail
