// Core graph values: simple graphs as bitset adjacency rows, multigraphs as
// edge-multiplicity maps, and the handful of invariants everything else is
// built from (degrees, edge degree, xi, odd set, connectivity, contraction).
// Vertex sets are uint64_t masks; all supported sizes fit (n <= 62).
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace supereuler {

inline constexpr int kMaxVertices = 62;  // graph6 single-byte size header

using VertexSet = std::uint64_t;

inline constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

int popcount(VertexSet s);
int lowest_vertex(VertexSet s);  // index of least set bit; -1 if empty

// Undirected edge; endpoints are normalized so u < v.
struct Edge {
  int u;
  int v;

  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw std::invalid_argument("loop edges are not supported");
    if (a < 0 || b < 0) throw std::invalid_argument("negative vertex id");
  }

  auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on vertices 0..n-1. Values are treated as
// immutable once built; add_edge exists for construction only.
class Graph {
 public:
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  int m() const { return m_; }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  VertexSet neighbors(int u) const;
  int degree(int u) const;
  std::vector<Edge> edges() const;  // lexicographic (u, v) order
  VertexSet vertex_mask() const;
  Graph induced(VertexSet s) const;          // relabels to 0..|s|-1, id order
  Graph remove_edges(const std::vector<Edge>& xs) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_;
  int m_;
  std::vector<VertexSet> adj_;
};

// Undirected multigraph (loopless): vertex count plus edge multiplicities.
class Multigraph {
 public:
  explicit Multigraph(int n);
  static Multigraph from_graph(const Graph& g);

  int n() const { return n_; }
  int m() const;  // sum of multiplicities
  void add_edge(int u, int v, int count = 1);
  int multiplicity(int u, int v) const;
  const std::map<Edge, int>& mult() const { return mult_; }
  int degree(int u) const;
  bool simple() const;       // every multiplicity <= 1
  Graph as_graph() const;    // requires simple()

  bool operator==(const Multigraph&) const = default;

 private:
  int n_;
  std::map<Edge, int> mult_;
};

int edge_degree(const Graph& g, Edge e);  // d(u) + d(v)
int xi(const Graph& g);                   // min edge degree; throws if edgeless
int girth(const Graph& g);                // shortest cycle length; 0 if acyclic
VertexSet odd_set(const Graph& g);
VertexSet odd_set(const Multigraph& g);
bool is_connected(const Graph& g);
bool is_connected(const Multigraph& g);

// Contraction of a full vertex partition. New vertex i is parts[i]; loops
// are dropped, multiplicities are kept. preimage[i] is parts[i], sorted.
struct Contraction {
  Multigraph result;
  std::vector<std::vector<int>> preimage;
};
Contraction contract(const Multigraph& g,
                     const std::vector<std::vector<int>>& parts);
Contraction contract(const Graph& g,
                     const std::vector<std::vector<int>>& parts);

}  // namespace supereuler
