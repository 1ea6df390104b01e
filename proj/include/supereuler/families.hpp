// The exceptional graph families that appear in the trail and
// hamiltonicity classifications: stars, complete bipartite graphs with a
// side of two, their one-edge augmentation, the pendant variant, the
// 5-cycle, and the two sporadic 7-vertex graphs found by exhaustive search.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supereuler/graph.hpp"

namespace supereuler {

enum class FamilyTag {
  star,                    // K_{1,n-1}: center 0
  complete_bipartite_two,  // K_{2,n-2}: hubs 0 and 1
  k2n2_star,               // K_{2,n-2} plus the hub-hub edge
  k2n3_prime,              // K_{2,n-3} plus a pendant on hub 0
  cycle5,                  // C_5
  sporadic7,               // the two 7-vertex sporadic exceptions
};

struct Family {
  FamilyTag tag;
  // Vertex count for the parametric families; 5 for cycle5; the index
  // (0 or 1, in canonical-code order) for sporadic7.
  int param;
};

// Builds the family member on its standard labeling. Throws
// std::invalid_argument for parameters outside the family's range.
Graph construct_family(FamilyTag tag, int param);

// Identifies g up to isomorphism against the families above, trying them
// in the declaration order. Pre: n <= 10.
std::optional<Family> recognize_family(const Graph& g);

// Serialized family names, e.g. "K_{1,4}", "K_{2,5}", "K*_{2,4}",
// "K'_{2,4}", "C_5", "G7", "G7'".
std::string family_name(const Family& f);

// If g is a star K_{1,t-1} (K2 counts, with t = 2), returns its order t.
std::optional<int> star_order(const Graph& g);

// All connected graphs on n vertices (4 <= n <= 10) that satisfy the
// minimum edge-degree bound xi >= n - 1 - p(n) (p = 0 for even n, 1 for
// odd), are not collapsible, do not reduce to a star K_{1,t-1} with
// 2 <= t < n, and are not one of the named parametric families — keeping
// only the primitive cores: graphs that are their own reduction and have
// minimum degree at least two. (A graph that reduces nontrivially
// classifies through its reduction, and a graph with a pendant vertex is
// an attachment variant of a smaller exceptional graph; neither is a new
// exceptional shape.) Computed once per n by exhaustive search and
// cached; sorted by canonical code.
const std::vector<Graph>& discovered_exceptions(int n);

}  // namespace supereuler
