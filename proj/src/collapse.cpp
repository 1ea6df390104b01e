#include "supereuler/collapse.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "subgraph_search.hpp"

namespace supereuler {
namespace {

constexpr int kAnalysisCap = 16;

void require_analyzable(const Graph& g, const char* what) {
  if (g.n() > kAnalysisCap) {
    throw std::invalid_argument(std::string(what) +
                                " is exponential and capped at 16 vertices");
  }
}

// Components of the spanning subgraph (V, edges); returns one mask per
// component, ordered by smallest contained vertex.
std::vector<VertexSet> component_masks(int n, const std::vector<Edge>& edges) {
  std::array<VertexSet, kMaxVertices> adj{};
  for (const Edge& e : edges) {
    adj[e.u] |= vbit(e.v);
    adj[e.v] |= vbit(e.u);
  }
  std::vector<VertexSet> comps;
  VertexSet left = n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
  while (left != 0) {
    const int start = lowest_vertex(left);
    VertexSet seen = vbit(start);
    VertexSet frontier = seen;
    while (frontier != 0) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f != 0; f &= f - 1) next |= adj[lowest_vertex(f)];
      frontier = next & ~seen;
      seen |= frontier;
    }
    comps.push_back(seen);
    left &= ~seen;
  }
  return comps;
}

// J subseteq `edges` with odd-degree set exactly r, built along a BFS
// forest (edge to parent included iff the subtree below has odd demand).
// Pre: r meets every component of (V, edges) in an even number of vertices.
std::vector<Edge> forest_parity_join(int n, const std::vector<Edge>& edges,
                                     VertexSet r) {
  std::array<VertexSet, kMaxVertices> adj{};
  for (const Edge& e : edges) {
    adj[e.u] |= vbit(e.v);
    adj[e.v] |= vbit(e.u);
  }
  std::array<int, kMaxVertices> parent{};
  parent.fill(-2);  // -2 unvisited, -1 root
  std::vector<int> order;
  for (int root = 0; root < n; ++root) {
    if (parent[root] != -2) continue;
    parent[root] = -1;
    std::vector<int> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int v = queue[qi];
      order.push_back(v);
      for (VertexSet s = adj[v]; s != 0; s &= s - 1) {
        const int w = lowest_vertex(s);
        if (parent[w] == -2) {
          parent[w] = v;
          queue.push_back(w);
        }
      }
    }
  }
  std::array<bool, kMaxVertices> odd{};
  for (int v = 0; v < n; ++v) odd[v] = (r & vbit(v)) != 0;
  std::vector<Edge> join;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    if (parent[v] >= 0 && odd[v]) {
      join.emplace_back(v, parent[v]);
      odd[parent[v]] = !odd[parent[v]];
      odd[v] = false;
    }
  }
  return join;
}

}  // namespace

std::optional<std::vector<Edge>> parity_connected_subgraph(const Graph& g,
                                                           ParityTarget r) {
  if ((r & ~g.vertex_mask()) != 0) {
    throw std::invalid_argument("parity target mentions vertices outside the graph");
  }
  if (popcount(r) % 2 != 0) {
    throw std::invalid_argument("parity target must have even size");
  }
  if (!is_connected(g)) {
    throw std::invalid_argument("graph must be connected");
  }
  return detail::spanning_parity_subgraph(g, r, {},
                                          detail::EdgeOrder::lexicographic);
}

CollapsibilityResult is_collapsible(const Graph& g, bool with_witnesses) {
  require_analyzable(g, "collapsibility analysis");
  if (!is_connected(g)) {
    throw std::invalid_argument("graph must be connected");
  }
  CollapsibilityResult result;
  if (g.n() == 1) {
    result.collapsible = true;
    if (with_witnesses) result.witnesses[0] = {};
    return result;
  }

  // Base witness for the empty target; everything else is answered either
  // by augmenting it with edges outside it or by a direct search.
  auto base = detail::spanning_parity_subgraph(g, 0, {},
                                               detail::EdgeOrder::lexicographic);
  if (!base) {
    result.collapsible = false;
    result.failing_target = 0;
    return result;
  }
  if (with_witnesses) result.witnesses[0] = *base;

  std::vector<Edge> spare;  // edges outside the base witness
  {
    std::vector<Edge> base_sorted = *base;
    std::sort(base_sorted.begin(), base_sorted.end());
    for (const Edge& e : g.edges()) {
      if (!std::binary_search(base_sorted.begin(), base_sorted.end(), e)) {
        spare.push_back(e);
      }
    }
  }
  const std::vector<VertexSet> spare_comps = component_masks(g.n(), spare);

  // Even targets in Gray-code order over subsets of {1..n-1}, with vertex 0
  // completing the parity.
  const std::uint64_t total = std::uint64_t{1} << (g.n() - 1);
  for (std::uint64_t i = 1; i < total; ++i) {
    const std::uint64_t s = i ^ (i >> 1);
    VertexSet r = s << 1;
    if (popcount(r) % 2 != 0) r |= vbit(0);

    bool spare_feasible = true;
    for (const VertexSet cm : spare_comps) {
      if (popcount(r & cm) % 2 != 0) {
        spare_feasible = false;
        break;
      }
    }
    if (spare_feasible) {
      if (with_witnesses) {
        std::vector<Edge> witness = *base;
        std::vector<Edge> join = forest_parity_join(g.n(), spare, r);
        witness.insert(witness.end(), join.begin(), join.end());
        std::sort(witness.begin(), witness.end());
        result.witnesses[r] = std::move(witness);
      }
      continue;
    }
    auto direct = detail::spanning_parity_subgraph(
        g, r, {}, detail::EdgeOrder::lexicographic);
    if (!direct) {
      result.collapsible = false;
      result.failing_target = r;
      result.witnesses.clear();
      return result;
    }
    if (with_witnesses) result.witnesses[r] = std::move(*direct);
  }
  result.collapsible = true;
  return result;
}

bool collapsible(const Graph& g) {
  if (!is_connected(g)) return false;
  return is_collapsible(g).collapsible;
}

bool two_neighbor_extension(const Graph& g, VertexSet h, int y) {
  if (y < 0 || y >= g.n() || (h & vbit(y)) != 0 || (h & ~g.vertex_mask()) != 0) {
    throw std::invalid_argument("extension vertex must lie outside the subset");
  }
  return popcount(g.neighbors(y) & h) >= 2;
}

namespace {

// Some vertex set inducing a nontrivial collapsible subgraph, or 0. Scans
// triangles first, then larger sets by size; `reverse_scan` flips the scan
// order to exercise the order-independence of the reduction.
VertexSet find_collapsible_subset(const Graph& g, bool reverse_scan) {
  std::vector<Edge> es = g.edges();
  if (reverse_scan) std::reverse(es.begin(), es.end());
  for (const Edge& e : es) {
    const VertexSet common = g.neighbors(e.u) & g.neighbors(e.v);
    if (common != 0) return vbit(e.u) | vbit(e.v) | vbit(lowest_vertex(common));
  }
  const int n = g.n();
  for (int size = 4; size <= n; ++size) {
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t raw = 0; raw < total; ++raw) {
      const VertexSet s =
          reverse_scan ? static_cast<VertexSet>(total - 1 - raw) : static_cast<VertexSet>(raw);
      if (popcount(s) != size) continue;
      // Cheap necessary conditions: internal degree >= 2 everywhere and at
      // least |S| + 1 induced edges (collapsible graphs beyond a triangle
      // are 2-edge-connected and have a cycle plus a chord path).
      int twice_edges = 0;
      bool plausible = true;
      for (VertexSet rest = s; rest != 0; rest &= rest - 1) {
        const int d = popcount(g.neighbors(lowest_vertex(rest)) & s);
        if (d < 2) {
          plausible = false;
          break;
        }
        twice_edges += d;
      }
      if (!plausible || twice_edges < 2 * (size + 1)) continue;
      const Graph h = g.induced(s);
      if (!is_connected(h)) continue;
      if (is_collapsible(h).collapsible) return s;
    }
  }
  return 0;
}

// One contraction step: collapse `blob` (a set of current vertex ids) and
// fold the step's preimage into the accumulated one.
void contract_step(Multigraph& m, std::vector<std::vector<int>>& acc,
                   VertexSet blob) {
  std::vector<std::vector<int>> parts;
  bool blob_done = false;
  for (int v = 0; v < m.n(); ++v) {
    if ((blob & vbit(v)) != 0) {
      if (!blob_done) {
        std::vector<int> part;
        for (VertexSet s = blob; s != 0; s &= s - 1) part.push_back(lowest_vertex(s));
        parts.push_back(std::move(part));
        blob_done = true;
      }
    } else {
      parts.push_back({v});
    }
  }
  Contraction c = contract(m, parts);
  std::vector<std::vector<int>> next_acc(c.preimage.size());
  for (std::size_t i = 0; i < c.preimage.size(); ++i) {
    for (const int v : c.preimage[i]) {
      next_acc[i].insert(next_acc[i].end(), acc[static_cast<std::size_t>(v)].begin(),
                         acc[static_cast<std::size_t>(v)].end());
    }
    std::sort(next_acc[i].begin(), next_acc[i].end());
  }
  m = std::move(c.result);
  acc = std::move(next_acc);
}

}  // namespace

namespace detail {

ReductionResult reduce_with_order(const Multigraph& g, bool reverse_scan) {
  if (g.n() > kAnalysisCap) {
    throw std::invalid_argument(
        "reduction analysis is exponential and capped at 16 vertices");
  }
  if (!is_connected(g)) {
    throw std::invalid_argument("graph must be connected");
  }
  Multigraph m = g;
  std::vector<std::vector<int>> acc;
  for (int v = 0; v < g.n(); ++v) acc.push_back({v});

  for (;;) {
    // Parallel pairs are collapsible 2-cycles: contract them first so the
    // rest of the scan works on a simple graph.
    const Edge* parallel = nullptr;
    for (const auto& [e, c] : m.mult()) {
      if (c >= 2) {
        parallel = &e;
        if (!reverse_scan) break;
      }
    }
    if (parallel != nullptr) {
      contract_step(m, acc, vbit(parallel->u) | vbit(parallel->v));
      continue;
    }
    const Graph simple = m.as_graph();
    VertexSet blob = find_collapsible_subset(simple, reverse_scan);
    if (blob == 0) break;
    // Absorb vertices with two or more neighbors in the blob; each such
    // extension stays collapsible, so this only grows the contracted part.
    for (bool grew = true; grew;) {
      grew = false;
      for (int y = 0; y < simple.n(); ++y) {
        if ((blob & vbit(y)) == 0 && popcount(simple.neighbors(y) & blob) >= 2) {
          blob |= vbit(y);
          grew = true;
        }
      }
    }
    contract_step(m, acc, blob);
  }

  ReductionResult out{m.as_graph(), std::move(acc), {}};
  out.nontrivial.reserve(out.preimage.size());
  for (const auto& part : out.preimage) out.nontrivial.push_back(part.size() > 1);
  return out;
}

}  // namespace detail

ReductionResult reduce(const Graph& g) {
  return detail::reduce_with_order(Multigraph::from_graph(g), false);
}

ReductionResult reduce(const Multigraph& g) {
  return detail::reduce_with_order(g, false);
}

bool is_reduced(const Graph& g) {
  require_analyzable(g, "reduction analysis");
  return find_collapsible_subset(g, false) == 0;
}

bool multigraph_collapsible(const Multigraph& g) {
  if (!is_connected(g)) return false;
  Multigraph m = g;
  std::vector<std::vector<int>> acc;
  for (int v = 0; v < g.n(); ++v) acc.push_back({v});
  for (;;) {
    const Edge* parallel = nullptr;
    for (const auto& [e, c] : m.mult()) {
      if (c >= 2) {
        parallel = &e;
        break;
      }
    }
    if (parallel == nullptr) break;
    contract_step(m, acc, vbit(parallel->u) | vbit(parallel->v));
  }
  if (m.n() == 1) return true;
  return is_collapsible(m.as_graph()).collapsible;
}

}  // namespace supereuler
