#include "supereuler/trails.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "subgraph_search.hpp"

namespace supereuler {
namespace {

// Hierholzer's splicing walk over an even-degree (or two-odd-vertex) edge
// set. Neighbors are taken smallest-id first, so the walk is deterministic.
TrailCertificate extract_trail(int n, const std::vector<Edge>& edges, int start,
                               TrailKind kind) {
  std::vector<std::vector<std::pair<int, std::size_t>>> adj(
      static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    adj[edges[i].u].emplace_back(edges[i].v, i);
    adj[edges[i].v].emplace_back(edges[i].u, i);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(edges.size(), false);

  std::vector<int> stack{start};
  std::vector<int> walk;
  while (!stack.empty()) {
    const int v = stack.back();
    auto& list = adj[static_cast<std::size_t>(v)];
    std::size_t& ptr = next[static_cast<std::size_t>(v)];
    while (ptr < list.size() && used[list[ptr].second]) ++ptr;
    if (ptr == list.size()) {
      walk.push_back(v);
      stack.pop_back();
    } else {
      used[list[ptr].second] = true;
      stack.push_back(list[ptr].first);
    }
  }
  std::reverse(walk.begin(), walk.end());
  return TrailCertificate{kind, std::move(walk)};
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
}

std::vector<Edge> sorted_distinct(const Graph& g, const std::vector<Edge>& x) {
  std::vector<Edge> out = x;
  for (const Edge& e : out) {
    if (!g.has_edge(e.u, e.v)) {
      throw std::invalid_argument("prescribed edge is not an edge of the graph");
    }
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw std::invalid_argument("prescribed edge list contains duplicates");
  }
  return out;
}

}  // namespace

std::vector<Edge> TrailCertificate::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    out.emplace_back(walk[i], walk[i + 1]);
  }
  return out;
}

CertStatus verify_certificate(const Graph& g, const TrailCertificate& cert,
                              const CertRequirements& req) {
  if (cert.walk.empty()) return CertStatus::empty_walk;
  VertexSet visited = 0;
  for (const int v : cert.walk) {
    if (v < 0 || v >= g.n()) return CertStatus::edge_missing;
    visited |= vbit(v);
  }
  std::set<Edge> seen;
  for (std::size_t i = 0; i + 1 < cert.walk.size(); ++i) {
    if (cert.walk[i] == cert.walk[i + 1]) return CertStatus::edge_missing;
    const Edge e(cert.walk[i], cert.walk[i + 1]);
    if (!g.has_edge(e.u, e.v)) return CertStatus::edge_missing;
    if (!seen.insert(e).second) return CertStatus::repeated_edge;
  }
  if (req.kind == TrailKind::closed && cert.walk.front() != cert.walk.back()) {
    return CertStatus::not_closed;
  }
  if (req.kind == TrailKind::open && req.endpoints.has_value()) {
    const auto [a, b] = *req.endpoints;
    if (cert.walk.front() != a || cert.walk.back() != b) {
      return CertStatus::wrong_endpoints;
    }
  }
  if (req.spanning && visited != g.vertex_mask()) return CertStatus::not_spanning;
  if (req.dominating) {
    for (const Edge& e : g.edges()) {
      if (((vbit(e.u) | vbit(e.v)) & visited) == 0) return CertStatus::not_dominating;
    }
  }
  for (const Edge& e : req.contains) {
    if (seen.find(e) == seen.end()) return CertStatus::missing_required_edge;
  }
  return CertStatus::ok;
}

std::string cert_status_name(CertStatus status) {
  switch (status) {
    case CertStatus::ok: return "ok";
    case CertStatus::empty_walk: return "empty_walk";
    case CertStatus::edge_missing: return "edge_missing";
    case CertStatus::repeated_edge: return "repeated_edge";
    case CertStatus::not_closed: return "not_closed";
    case CertStatus::wrong_endpoints: return "wrong_endpoints";
    case CertStatus::not_spanning: return "not_spanning";
    case CertStatus::not_dominating: return "not_dominating";
    case CertStatus::missing_required_edge: return "missing_required_edge";
  }
  return "unknown";
}

std::optional<TrailCertificate> has_spanning_closed_trail(const Graph& g) {
  require_connected(g);
  if (g.n() == 1) return TrailCertificate{TrailKind::closed, {0}};
  auto edges = detail::spanning_parity_subgraph(
      g, 0, {}, detail::EdgeOrder::edge_degree_desc);
  if (!edges) return std::nullopt;
  return extract_trail(g.n(), *edges, 0, TrailKind::closed);
}

std::optional<TrailCertificate> has_spanning_trail(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) {
    throw std::invalid_argument("trail endpoint out of range");
  }
  require_connected(g);
  if (u == v) {
    if (g.n() == 1) return TrailCertificate{TrailKind::closed, {u}};
    auto edges = detail::spanning_parity_subgraph(
        g, 0, {}, detail::EdgeOrder::edge_degree_desc);
    if (!edges) return std::nullopt;
    return extract_trail(g.n(), *edges, u, TrailKind::closed);
  }
  auto edges = detail::spanning_parity_subgraph(
      g, vbit(u) | vbit(v), {}, detail::EdgeOrder::edge_degree_desc);
  if (!edges) return std::nullopt;
  return extract_trail(g.n(), *edges, u, TrailKind::open);
}

std::optional<TrailCertificate> has_dominating_closed_trail(const Graph& g) {
  require_connected(g);
  if (g.n() == 1) return TrailCertificate{TrailKind::closed, {0}};
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) == g.m()) {
      return TrailCertificate{TrailKind::closed, {v}};
    }
  }
  auto edges = detail::dominating_even_subgraph(g);
  if (!edges) return std::nullopt;
  VertexSet support = 0;
  for (const Edge& e : *edges) support |= vbit(e.u) | vbit(e.v);
  return extract_trail(g.n(), *edges, lowest_vertex(support), TrailKind::closed);
}

int SubdividedGraph::marker(const Edge& e) const {
  const auto it = std::lower_bound(x.begin(), x.end(), e);
  if (it == x.end() || *it != e) {
    throw std::invalid_argument("edge was not subdivided");
  }
  return base_n + static_cast<int>(it - x.begin());
}

SubdividedGraph build_gx(const Graph& g, const std::vector<Edge>& x) {
  std::vector<Edge> xs = sorted_distinct(g, x);
  if (g.n() + static_cast<int>(xs.size()) > kMaxVertices) {
    throw std::invalid_argument("subdivided graph exceeds the vertex limit");
  }
  Graph out(g.n() + static_cast<int>(xs.size()));
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(xs.begin(), xs.end(), e)) out.add_edge(e.u, e.v);
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const int w = g.n() + static_cast<int>(i);
    out.add_edge(xs[i].u, w);
    out.add_edge(w, xs[i].v);
  }
  return SubdividedGraph{std::move(out), g.n(), std::move(xs)};
}

Contraction build_gx_star(const SubdividedGraph& s) {
  const Graph& gx = s.graph;
  std::array<VertexSet, kMaxVertices> adj{};
  for (const Edge& e : gx.edges()) {
    if (gx.degree(e.u) == 2 && gx.degree(e.v) == 2) {
      adj[e.u] |= vbit(e.v);
      adj[e.v] |= vbit(e.u);
    }
  }
  std::vector<std::vector<int>> parts;
  VertexSet left = gx.vertex_mask();
  while (left != 0) {
    const int start = lowest_vertex(left);
    VertexSet seen = vbit(start);
    VertexSet frontier = seen;
    while (frontier != 0) {
      VertexSet nxt = 0;
      for (VertexSet f = frontier; f != 0; f &= f - 1) nxt |= adj[lowest_vertex(f)];
      frontier = nxt & ~seen;
      seen |= frontier;
    }
    std::vector<int> part;
    for (VertexSet p = seen; p != 0; p &= p - 1) part.push_back(lowest_vertex(p));
    parts.push_back(std::move(part));
    left &= ~seen;
  }
  return contract(gx, parts);
}

std::optional<TrailCertificate> trail_through_x(const Graph& g,
                                                const std::vector<Edge>& x) {
  require_connected(g);
  const SubdividedGraph sub = build_gx(g, x);  // validates and sorts x

  auto via_subdivision = detail::spanning_parity_subgraph(
      sub.graph, 0, {}, detail::EdgeOrder::edge_degree_desc);
  auto direct = detail::spanning_parity_subgraph(
      g, 0, sub.x, detail::EdgeOrder::edge_degree_desc);
  if (via_subdivision.has_value() != direct.has_value()) {
    throw std::logic_error(
        "internal consistency failure: subdivision and direct trail searches "
        "disagree");
  }
  if (!via_subdivision) return std::nullopt;

  // Map the subdivision witness back: marker vertices have degree exactly 2
  // in any spanning even subgraph, so both halves of a subdivided edge are
  // present and collapse back to the original edge.
  std::vector<Edge> mapped;
  std::array<int, kMaxVertices> marker_hits{};
  for (const Edge& e : *via_subdivision) {
    if (e.v < sub.base_n) {
      mapped.push_back(e);
    } else {
      ++marker_hits[e.v];
    }
  }
  for (std::size_t i = 0; i < sub.x.size(); ++i) {
    const int w = sub.base_n + static_cast<int>(i);
    if (marker_hits[w] != 2) {
      throw std::logic_error(
          "internal consistency failure: marker vertex not traversed exactly "
          "twice");
    }
    mapped.push_back(sub.x[i]);
  }
  std::sort(mapped.begin(), mapped.end());

  TrailCertificate cert =
      g.n() == 1 ? TrailCertificate{TrailKind::closed, {0}}
                 : extract_trail(g.n(), mapped, 0, TrailKind::closed);
  CertRequirements req;
  req.kind = TrailKind::closed;
  req.spanning = true;
  req.contains = sub.x;
  if (verify_certificate(g, cert, req) != CertStatus::ok) {
    throw std::logic_error(
        "internal consistency failure: mapped-back trail fails verification");
  }
  return cert;
}

}  // namespace supereuler
