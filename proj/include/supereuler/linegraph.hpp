// Line graphs, Hamilton-cycle search, and the k-hamiltonicity check for
// line graphs. The k-hamiltonicity question is answered along two routes —
// a direct Hamilton search on the vertex-deleted line graph, and a
// dominating-closed-trail criterion on the underlying graph — and the
// routes are compared wherever the criterion's hypothesis (at least four
// vertices) holds.
#pragma once

#include <optional>
#include <vector>

#include "supereuler/graph.hpp"

namespace supereuler {

struct LineGraphMap {
  Graph graph;                       // the line graph
  std::vector<Edge> vertex_to_edge;  // line-graph vertex i <-> this edge of g
};

// Line graph of g: one vertex per edge (lexicographic order), adjacent when
// the edges share an endpoint. Throws std::invalid_argument if g has no
// edges.
LineGraphMap line_graph(const Graph& g);

// Hamilton cycle as a vertex sequence of length n starting at vertex 0
// (implicitly closed), or nullopt. Graphs on fewer than 3 vertices have no
// Hamilton cycle.
std::optional<std::vector<int>> hamilton_cycle(const Graph& g);

struct KHamiltonicityReport {
  bool k_hamiltonian = false;
  int k = 0;
  // First vertex set (as line-graph vertex ids) whose deletion leaves a
  // non-hamiltonian graph, when not k-hamiltonian.
  std::optional<std::vector<int>> failing_set;
  // Number of deletion sets inspected before the verdict.
  long long sets_checked = 0;
  // Dual-route bookkeeping: sets where the Hamilton search and the
  // dominating-trail criterion were both evaluated, and any disagreements
  // observed. Inside the criterion's hypothesis a disagreement is counted
  // here rather than silently trusted either way.
  long long sets_compared = 0;
  std::vector<std::vector<int>> route_disagreements;
  bool routes_agree = true;
};

// True iff the line graph of g stays hamiltonian after deleting any set of
// at most k of its vertices (k >= 0; k = 0 is plain hamiltonicity). Pre: g
// connected with at least one edge.
KHamiltonicityReport k_hamiltonian_check(const Graph& g, int k);

}  // namespace supereuler
