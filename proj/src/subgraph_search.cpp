#include "subgraph_search.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace supereuler::detail {
namespace {

// Small union-find rebuilt from scratch for connectivity prunes; the graphs
// are tiny, so no rollback machinery is needed.
struct ScratchDsu {
  std::array<int, kMaxVertices> parent{};

  void reset(int n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(b)] = find(a); }
};

std::vector<Edge> order_edges(const Graph& g, EdgeOrder order) {
  std::vector<Edge> edges = g.edges();
  if (order == EdgeOrder::edge_degree_desc) {
    std::stable_sort(edges.begin(), edges.end(),
                     [&g](const Edge& a, const Edge& b) {
                       return edge_degree(g, a) > edge_degree(g, b);
                     });
  }
  return edges;
}

// Shared bookkeeping for the three searches: a fixed decision order over
// edges, the index of each vertex's final incident edge (where its degree
// parity becomes permanent), and incrementally maintained adjacency of the
// chosen subgraph.
struct SearchBase {
  const Graph& g;
  std::vector<Edge> edges;
  // closer_of[i] = vertices whose last incident edge in `edges` is i.
  std::vector<VertexSet> closer_of;
  std::array<VertexSet, kMaxVertices> chosen_adj{};
  std::array<int, kMaxVertices> deg{};
  VertexSet parity = 0;
  ScratchDsu dsu;

  explicit SearchBase(const Graph& graph, std::vector<Edge> ordered)
      : g(graph), edges(std::move(ordered)), closer_of(edges.size(), 0) {
    std::array<int, kMaxVertices> last{};
    last.fill(-1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      last[edges[i].u] = static_cast<int>(i);
      last[edges[i].v] = static_cast<int>(i);
    }
    for (int v = 0; v < g.n(); ++v) {
      if (last[v] >= 0) closer_of[static_cast<std::size_t>(last[v])] |= vbit(v);
    }
  }

  void add_edge_state(const Edge& e) {
    chosen_adj[e.u] |= vbit(e.v);
    chosen_adj[e.v] |= vbit(e.u);
    ++deg[e.u];
    ++deg[e.v];
    parity ^= vbit(e.u) ^ vbit(e.v);
  }
  void remove_edge_state(const Edge& e) {
    chosen_adj[e.u] &= ~vbit(e.v);
    chosen_adj[e.v] &= ~vbit(e.u);
    --deg[e.u];
    --deg[e.v];
    parity ^= vbit(e.u) ^ vbit(e.v);
  }

  // True when the vertices in `must_connect` can still end up in a single
  // component using every chosen edge plus every not-yet-decided edge.
  bool potentially_connected(std::size_t next_index,
                             const std::vector<signed char>& chosen,
                             VertexSet must_connect) {
    if (must_connect == 0) return true;
    dsu.reset(g.n());
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (j < next_index ? chosen[j] > 0 : true)
        dsu.unite(edges[j].u, edges[j].v);
    }
    const int root = dsu.find(lowest_vertex(must_connect));
    for (VertexSet s = must_connect; s != 0; s &= s - 1) {
      if (dsu.find(lowest_vertex(s)) != root) return false;
    }
    return true;
  }

  // BFS over the chosen subgraph from `start`; returns the reached set.
  VertexSet chosen_component(int start) const {
    VertexSet seen = vbit(start);
    VertexSet frontier = seen;
    while (frontier != 0) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f != 0; f &= f - 1) {
        next |= chosen_adj[lowest_vertex(f)];
      }
      frontier = next & ~seen;
      seen |= frontier;
    }
    return seen;
  }
};

struct ParitySearch : SearchBase {
  VertexSet target;
  std::size_t forced_count;
  std::vector<signed char> chosen;  // -1 undecided, 0 excluded, 1 included

  ParitySearch(const Graph& graph, std::vector<Edge> ordered, VertexSet tgt,
               std::size_t forced)
      : SearchBase(graph, std::move(ordered)),
        target(tgt),
        forced_count(forced),
        chosen(edges.size(), -1) {}

  bool closures_ok(std::size_t index) const {
    for (VertexSet s = closer_of[index]; s != 0; s &= s - 1) {
      const int w = lowest_vertex(s);
      if (((parity ^ target) & vbit(w)) != 0) return false;
      if (g.n() > 1 && deg[w] == 0) return false;
    }
    return true;
  }

  bool solve(std::size_t index) {
    if (index == edges.size()) {
      return chosen_component(0) == g.vertex_mask();
    }
    // Every remaining edge can repair at most two parity mismatches.
    const int mismatched = popcount(parity ^ target);
    if (mismatched > 2 * static_cast<int>(edges.size() - index)) return false;

    const Edge& e = edges[index];
    const bool mismatch_here = ((parity ^ target) & (vbit(e.u) | vbit(e.v))) != 0;
    for (int attempt = 0; attempt < 2; ++attempt) {
      const bool include = (attempt == 0) == mismatch_here;
      if (include) {
        add_edge_state(e);
        chosen[index] = 1;
        if (closures_ok(index) && solve(index + 1)) return true;
        remove_edge_state(e);
      } else {
        chosen[index] = 0;
        if (closures_ok(index) &&
            potentially_connected(index + 1, chosen, g.vertex_mask()) &&
            solve(index + 1))
          return true;
      }
      chosen[index] = -1;
    }
    return false;
  }

  std::vector<Edge> picked() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (chosen[i] > 0) out.push_back(edges[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

struct DominatingSearch : SearchBase {
  std::vector<signed char> chosen;
  VertexSet closed_zero = 0;  // closed vertices that ended with degree 0

  explicit DominatingSearch(const Graph& graph)
      : SearchBase(graph, graph.edges()), chosen(edges.size(), -1) {}

  VertexSet support() const {
    VertexSet s = 0;
    for (int v = 0; v < g.n(); ++v) {
      if (deg[v] > 0) s |= vbit(v);
    }
    return s;
  }

  bool solve(std::size_t index) {
    if (index == edges.size()) {
      const VertexSet sup = support();
      if (sup == 0) return false;
      if ((chosen_component(lowest_vertex(sup)) & sup) != sup) return false;
      for (const Edge& e : g.edges()) {
        if (((vbit(e.u) | vbit(e.v)) & sup) == 0) return false;
      }
      return true;
    }
    const Edge& e = edges[index];
    for (int attempt = 0; attempt < 2; ++attempt) {
      const bool include = attempt == 0;
      VertexSet closed_zero_added = 0;
      bool ok = true;
      if (include) {
        add_edge_state(e);
        chosen[index] = 1;
      } else {
        chosen[index] = 0;
      }
      // Closure: degrees must be even; a vertex may close with degree 0 as
      // long as no edge joins two degree-0 closed vertices (that edge could
      // never be met by the trail).
      for (VertexSet s = closer_of[index]; ok && s != 0; s &= s - 1) {
        const int w = lowest_vertex(s);
        if ((parity & vbit(w)) != 0) {
          ok = false;
        } else if (deg[w] == 0) {
          if ((g.neighbors(w) & closed_zero) != 0) {
            ok = false;
          } else {
            closed_zero |= vbit(w);
            closed_zero_added |= vbit(w);
          }
        }
      }
      if (ok && !include) {
        ok = potentially_connected(index + 1, chosen, support());
      }
      if (ok && solve(index + 1)) return true;
      closed_zero &= ~closed_zero_added;
      if (include) remove_edge_state(e);
      chosen[index] = -1;
    }
    return false;
  }

  std::vector<Edge> picked() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (chosen[i] > 0) out.push_back(edges[i]);
    }
    return out;
  }
};

struct MultiSearch {
  const Multigraph& g;
  std::vector<std::pair<Edge, int>> edges;  // (edge, multiplicity), lex order
  std::vector<VertexSet> closer_of;
  std::vector<signed char> usage;  // -1 undecided, else 0/1/2
  std::array<VertexSet, kMaxVertices> chosen_adj{};
  std::array<int, kMaxVertices> deg{};
  VertexSet parity = 0;
  ScratchDsu dsu;

  explicit MultiSearch(const Multigraph& graph) : g(graph) {
    for (const auto& [e, c] : g.mult()) edges.emplace_back(e, c);
    closer_of.assign(edges.size(), 0);
    usage.assign(edges.size(), -1);
    std::array<int, kMaxVertices> last{};
    last.fill(-1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      last[edges[i].first.u] = static_cast<int>(i);
      last[edges[i].first.v] = static_cast<int>(i);
    }
    for (int v = 0; v < g.n(); ++v) {
      if (last[v] >= 0) closer_of[static_cast<std::size_t>(last[v])] |= vbit(v);
    }
  }

  bool closures_ok(std::size_t index) const {
    for (VertexSet s = closer_of[index]; s != 0; s &= s - 1) {
      const int w = lowest_vertex(s);
      if ((parity & vbit(w)) != 0) return false;
      if (g.n() > 1 && deg[w] == 0) return false;
    }
    return true;
  }

  bool potentially_connected(std::size_t next_index) {
    dsu.reset(g.n());
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (j < next_index ? usage[j] > 0 : true)
        dsu.unite(edges[j].first.u, edges[j].first.v);
    }
    const int root = dsu.find(0);
    for (int v = 1; v < g.n(); ++v) {
      if (dsu.find(v) != root) return false;
    }
    return true;
  }

  VertexSet chosen_component(int start) const {
    VertexSet seen = vbit(start);
    VertexSet frontier = seen;
    while (frontier != 0) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f != 0; f &= f - 1) {
        next |= chosen_adj[lowest_vertex(f)];
      }
      frontier = next & ~seen;
      seen |= frontier;
    }
    return seen;
  }

  void apply(std::size_t index, int count) {
    const Edge& e = edges[index].first;
    usage[index] = static_cast<signed char>(count);
    if (count > 0) {
      chosen_adj[e.u] |= vbit(e.v);
      chosen_adj[e.v] |= vbit(e.u);
      deg[e.u] += count;
      deg[e.v] += count;
      if (count == 1) parity ^= vbit(e.u) ^ vbit(e.v);
    }
  }
  void unapply(std::size_t index) {
    const Edge& e = edges[index].first;
    const int count = usage[index];
    if (count > 0) {
      chosen_adj[e.u] &= ~vbit(e.v);
      chosen_adj[e.v] &= ~vbit(e.u);
      deg[e.u] -= count;
      deg[e.v] -= count;
      if (count == 1) parity ^= vbit(e.u) ^ vbit(e.v);
    }
    usage[index] = -1;
  }

  bool solve(std::size_t index) {
    if (index == edges.size()) {
      return g.n() == 1 || chosen_component(0) == ((VertexSet{1} << g.n()) - 1);
    }
    const int max_use = std::min(2, edges[index].second);
    for (int count = 0; count <= max_use; ++count) {
      apply(index, count);
      bool ok = closures_ok(index);
      if (ok && count == 0) ok = potentially_connected(index + 1);
      if (ok && solve(index + 1)) return true;
      unapply(index);
    }
    return false;
  }

  std::vector<Edge> picked() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (int c = 0; c < usage[i]; ++c) out.push_back(edges[i].first);
    }
    return out;
  }
};

}  // namespace

std::optional<std::vector<Edge>> spanning_parity_subgraph(
    const Graph& g, VertexSet target, const std::vector<Edge>& forced,
    EdgeOrder order) {
  if ((target & ~g.vertex_mask()) != 0) {
    throw std::invalid_argument("parity target mentions vertices outside the graph");
  }
  if (popcount(target) % 2 != 0) {
    throw std::invalid_argument("parity target must have even size");
  }
  if (g.n() == 1) return std::vector<Edge>{};
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 0) return std::nullopt;  // cannot span an isolated vertex
  }

  // Decision order: forced edges first (in the chosen order), then the rest.
  std::vector<Edge> ordered = order_edges(g, order);
  std::vector<Edge> forced_sorted;
  for (const Edge& e : forced) {
    if (!g.has_edge(e.u, e.v)) {
      throw std::invalid_argument("forced edge is not an edge of the graph");
    }
    forced_sorted.push_back(e);
  }
  std::sort(forced_sorted.begin(), forced_sorted.end());
  if (std::adjacent_find(forced_sorted.begin(), forced_sorted.end()) !=
      forced_sorted.end()) {
    throw std::invalid_argument("forced edge list contains duplicates");
  }
  std::vector<Edge> decision;
  decision.reserve(ordered.size());
  auto is_forced = [&forced_sorted](const Edge& e) {
    return std::binary_search(forced_sorted.begin(), forced_sorted.end(), e);
  };
  for (const Edge& e : ordered) {
    if (is_forced(e)) decision.push_back(e);
  }
  const std::size_t forced_count = decision.size();
  for (const Edge& e : ordered) {
    if (!is_forced(e)) decision.push_back(e);
  }

  ParitySearch search(g, std::move(decision), target, forced_count);
  for (std::size_t i = 0; i < forced_count; ++i) {
    search.add_edge_state(search.edges[i]);
    search.chosen[i] = 1;
    if (!search.closures_ok(i)) return std::nullopt;
  }
  if (!search.solve(forced_count)) return std::nullopt;
  return search.picked();
}

std::optional<std::vector<Edge>> dominating_even_subgraph(const Graph& g) {
  if (g.m() == 0) return std::nullopt;
  DominatingSearch search(g);
  if (!search.solve(0)) return std::nullopt;
  return search.picked();
}

std::optional<std::vector<Edge>> multigraph_even_spanning(const Multigraph& g) {
  if (g.n() == 1) return std::vector<Edge>{};
  MultiSearch search(g);
  if (!search.solve(0)) return std::nullopt;
  return search.picked();
}

}  // namespace supereuler::detail
