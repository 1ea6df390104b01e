// Canonical forms for isomorphism rejection on small graphs (n <= 10).
// The code is the graph6 string of a canonical relabeling, chosen as the
// lexicographically least adjacency bitstring over labelings compatible
// with an iterated degree-refinement partition.
#pragma once

#include <string>
#include <vector>

#include "supereuler/graph.hpp"

namespace supereuler {

struct CanonicalCode {
  std::string bytes;  // valid graph6 of the canonical labeling
  auto operator<=>(const CanonicalCode&) const = default;
};

inline constexpr int kMaxCanonicalVertices = 10;

CanonicalCode canonical_form(const Graph& g);  // throws if n > 10

// Relabels: vertex v of g becomes perm[v] in the result.
Graph permute(const Graph& g, const std::vector<int>& perm);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace supereuler
