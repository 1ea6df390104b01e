// Exhaustive generation of connected simple graphs up to isomorphism
// (n <= 10) by incremental edge augmentation with canonical-form
// deduplication, plus replay of externally supplied graph6 files.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "supereuler/graph.hpp"

namespace supereuler {

// One graph per isomorphism class, canonically labeled, sorted by
// canonical code. min_xi > 0 keeps only graphs with an edge and
// xi(g) >= min_xi.
std::vector<Graph> enumerate_connected(int n, int min_xi = 0);

// Ordered source of graphs for the verification pipeline: either generated
// or replayed from a graph6 file (one code per line, '#' comments allowed).
// Graphs are always sorted by canonical code.
struct EnumerationStream {
  std::vector<Graph> graphs;

  static EnumerationStream generate(int n_min, int n_max, int min_xi = 0);
  static EnumerationStream from_file(const std::string& path);
};

}  // namespace supereuler
