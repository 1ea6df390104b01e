#include "supereuler/graph.hpp"

#include <algorithm>
#include <bit>

namespace supereuler {

int popcount(VertexSet s) { return std::popcount(s); }

int lowest_vertex(VertexSet s) {
  return s == 0 ? -1 : std::countr_zero(s);
}

Graph::Graph(int n) : n_(n), m_(0), adj_(static_cast<size_t>(n), 0) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("vertex count out of range [1, 62]");
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  return (adj_[u] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("vertex id out of range");
  if (u == v) throw std::invalid_argument("loop edges are not supported");
  if (has_edge(u, v)) return;
  adj_[u] |= vbit(v);
  adj_[v] |= vbit(u);
  ++m_;
}

VertexSet Graph::neighbors(int u) const { return adj_[u]; }

int Graph::degree(int u) const { return std::popcount(adj_[u]); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    VertexSet higher = adj_[u] >> (u + 1) << (u + 1);
    while (higher) {
      int v = std::countr_zero(higher);
      higher &= higher - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet Graph::vertex_mask() const {
  return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
}

Graph Graph::induced(VertexSet s) const {
  std::vector<int> label(static_cast<size_t>(n_), -1);
  int k = 0;
  for (int v = 0; v < n_; ++v)
    if (s & vbit(v)) label[v] = k++;
  if (k == 0) throw std::invalid_argument("induced subgraph needs a vertex");
  Graph g(k);
  for (int u = 0; u < n_; ++u) {
    if (label[u] < 0) continue;
    VertexSet rest = adj_[u] & s;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (u < v) g.add_edge(label[u], label[v]);
    }
  }
  return g;
}

Graph Graph::remove_edges(const std::vector<Edge>& xs) const {
  Graph g(n_);
  VertexSet drop[64] = {};
  for (const Edge& e : xs) {
    if (e.v >= n_) throw std::invalid_argument("edge endpoint out of range");
    drop[e.u] |= vbit(e.v);
  }
  for (const Edge& e : edges())
    if (!(drop[e.u] & vbit(e.v))) g.add_edge(e.u, e.v);
  return g;
}

Multigraph::Multigraph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("vertex count out of range [1, 62]");
}

Multigraph Multigraph::from_graph(const Graph& g) {
  Multigraph mg(g.n());
  for (const Edge& e : g.edges()) mg.add_edge(e.u, e.v);
  return mg;
}

int Multigraph::m() const {
  int total = 0;
  for (const auto& [e, c] : mult_) total += c;
  return total;
}

void Multigraph::add_edge(int u, int v, int count) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("vertex id out of range");
  if (count <= 0) throw std::invalid_argument("multiplicity must be positive");
  mult_[Edge(u, v)] += count;
}

int Multigraph::multiplicity(int u, int v) const {
  auto it = mult_.find(Edge(u, v));
  return it == mult_.end() ? 0 : it->second;
}

int Multigraph::degree(int u) const {
  int d = 0;
  for (const auto& [e, c] : mult_)
    if (e.u == u || e.v == u) d += c;
  return d;
}

bool Multigraph::simple() const {
  for (const auto& [e, c] : mult_)
    if (c > 1) return false;
  return true;
}

Graph Multigraph::as_graph() const {
  if (!simple())
    throw std::invalid_argument("multigraph with parallel edges is not simple");
  Graph g(n_);
  for (const auto& [e, c] : mult_) g.add_edge(e.u, e.v);
  return g;
}

int edge_degree(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("edge not in graph");
  return g.degree(e.u) + g.degree(e.v);
}

int xi(const Graph& g) {
  if (g.m() == 0) throw std::invalid_argument("xi is undefined on edgeless graphs");
  int best = 4 * kMaxVertices;
  for (const Edge& e : g.edges())
    best = std::min(best, g.degree(e.u) + g.degree(e.v));
  return best;
}

int girth(const Graph& g) {
  // Shortest cycle through edge (u, v) = 1 + dist(u, v) in g - (u, v).
  int best = 0;
  for (const Edge& e : g.edges()) {
    VertexSet seen = vbit(e.u);
    VertexSet frontier = seen;
    int dist = 0;
    bool found = false;
    while (frontier && !found) {
      ++dist;
      VertexSet next = 0;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        VertexSet nb = g.neighbors(v);
        if (v == e.u) nb &= ~vbit(e.v);
        if (v == e.v) nb &= ~vbit(e.u);
        next |= nb;
      }
      frontier = next & ~seen;
      seen |= next;
      if (seen & vbit(e.v)) found = true;
    }
    if (found && (best == 0 || dist + 1 < best)) best = dist + 1;
  }
  return best;
}

VertexSet odd_set(const Graph& g) {
  VertexSet r = 0;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) & 1) r |= vbit(v);
  return r;
}

VertexSet odd_set(const Multigraph& g) {
  VertexSet r = 0;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) & 1) r |= vbit(v);
  return r;
}

namespace {

// Closure of {start} under mask-valued adjacency.
template <typename NeighborFn>
bool connected_from(int n, NeighborFn nb) {
  VertexSet seen = vbit(0);
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= nb(v);
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return popcount(seen) == n;
}

}  // namespace

bool is_connected(const Graph& g) {
  return connected_from(g.n(), [&](int v) { return g.neighbors(v); });
}

bool is_connected(const Multigraph& g) {
  std::vector<VertexSet> adj(static_cast<size_t>(g.n()), 0);
  for (const auto& [e, c] : g.mult()) {
    adj[e.u] |= vbit(e.v);
    adj[e.v] |= vbit(e.u);
  }
  return connected_from(g.n(), [&](int v) { return adj[v]; });
}

Contraction contract(const Multigraph& g,
                     const std::vector<std::vector<int>>& parts) {
  std::vector<int> part_of(static_cast<size_t>(g.n()), -1);
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw std::invalid_argument("empty partition part");
    for (int v : parts[i]) {
      if (v < 0 || v >= g.n()) throw std::invalid_argument("partition vertex out of range");
      if (part_of[v] != -1) throw std::invalid_argument("partition parts overlap");
      part_of[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < g.n(); ++v)
    if (part_of[v] == -1) throw std::invalid_argument("partition does not cover all vertices");

  Multigraph out(static_cast<int>(parts.size()));
  for (const auto& [e, c] : g.mult()) {
    int pu = part_of[e.u], pv = part_of[e.v];
    if (pu != pv) out.add_edge(pu, pv, c);
  }
  Contraction res{std::move(out), parts};
  for (auto& p : res.preimage) std::sort(p.begin(), p.end());
  return res;
}

Contraction contract(const Graph& g, const std::vector<std::vector<int>>& parts) {
  return contract(Multigraph::from_graph(g), parts);
}

}  // namespace supereuler
