// Collapsibility and reduction. A graph is collapsible when for every
// even-sized vertex set R there is a spanning connected subgraph whose
// odd-degree vertices are exactly R. The reduction contracts maximal
// collapsible subgraphs until none remain; the result is unique.
//
// Both analyses enumerate vertex subsets and are exponential by nature;
// they are capped at 16 vertices, comfortably above the n <= 10 graphs the
// enumeration layer produces (and the subdivided auxiliary graphs built
// from them).
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "supereuler/graph.hpp"

namespace supereuler {

// Vertices required to have odd degree.
using ParityTarget = VertexSet;

// Spanning connected subgraph of g with odd-degree set exactly r, if one
// exists. Preconditions (throws std::invalid_argument): g connected, |r|
// even, r within the vertex range.
std::optional<std::vector<Edge>> parity_connected_subgraph(const Graph& g,
                                                           ParityTarget r);

struct CollapsibilityResult {
  bool collapsible = false;
  // When not collapsible: the first parity target (in the enumeration
  // order) admitting no witness.
  ParityTarget failing_target = 0;
  // When collapsible and witnesses were requested: target -> edge set.
  std::map<ParityTarget, std::vector<Edge>> witnesses;
};

// Exact collapsibility test. K1 is collapsible. Pre: g connected, n <= 16.
CollapsibilityResult is_collapsible(const Graph& g,
                                    bool with_witnesses = false);

// Convenience wrapper: true iff g is connected and collapsible; never
// throws on disconnected input (disconnected graphs are not collapsible).
bool collapsible(const Graph& g);

struct ReductionResult {
  Graph reduced;
  // reduced vertex -> original vertices it absorbed (sorted; covers V).
  std::vector<std::vector<int>> preimage;
  // nontrivial[i]: preimage[i] has more than one vertex.
  std::vector<bool> nontrivial;
};

// Contract maximal collapsible subgraphs until none remain. Pre: g
// connected, n <= 16. The result is reduced and independent of the order
// in which collapsible subgraphs are found.
ReductionResult reduce(const Graph& g);

// Same reduction applied to a loopless multigraph (parallel pairs are
// collapsible 2-cycles, so they contract along the way).
ReductionResult reduce(const Multigraph& g);

// True iff g has no nontrivial collapsible subgraph. Pre: n <= 16.
bool is_reduced(const Graph& g);

// True iff the multigraph is connected and collapsible; parallel pairs are
// contracted first, then the simple core is tested.
bool multigraph_collapsible(const Multigraph& g);

// True iff vertex y (not in h) has at least two neighbors inside h, i.e.
// a collapsible g[h] extends to a collapsible g[h + y].
bool two_neighbor_extension(const Graph& g, VertexSet h, int y);

namespace detail {
// Internal knob for the order-independence test: scan candidate collapsible
// subgraphs in reversed order. Must produce the same reduction.
ReductionResult reduce_with_order(const Multigraph& g, bool reverse_scan);
}  // namespace detail

}  // namespace supereuler
