// Spanning and dominating trail queries with replayable certificates, and
// the subdivision construction used to force a trail through a prescribed
// edge set.
//
// A closed trail is reported as a vertex walk whose first and last entries
// coincide; the one-vertex walk {v} is the legal trivial closed trail. An
// open (u, v)-trail is a walk from u to v. Walks never repeat an edge.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supereuler/graph.hpp"

namespace supereuler {

enum class TrailKind { closed, open };

struct TrailCertificate {
  TrailKind kind = TrailKind::closed;
  std::vector<int> walk;  // vertex sequence; closed: front() == back()

  std::pair<int, int> endpoints() const { return {walk.front(), walk.back()}; }
  std::vector<Edge> edges() const;  // consecutive pairs of the walk
};

// Reason codes for certificate verification; `ok` means every requested
// requirement holds.
enum class CertStatus {
  ok,
  empty_walk,
  edge_missing,        // a step is not an edge of the graph
  repeated_edge,       // a step reuses an edge
  not_closed,          // closed kind but front() != back()
  wrong_endpoints,     // open kind with endpoints other than required
  not_spanning,        // walk does not visit every vertex
  not_dominating,      // some edge has no endpoint on the walk
  missing_required_edge,
};

struct CertRequirements {
  TrailKind kind = TrailKind::closed;
  bool spanning = false;
  bool dominating = false;
  std::vector<Edge> contains = {};
  std::optional<std::pair<int, int>> endpoints = std::nullopt;  // open trails
};

// Replays the walk against g and checks the requested requirements in the
// order of the CertStatus declaration, returning the first failure.
CertStatus verify_certificate(const Graph& g, const TrailCertificate& cert,
                              const CertRequirements& req);
std::string cert_status_name(CertStatus status);

// Spanning closed trail (the defining property of a supereulerian graph).
// Pre: g connected. K1 yields the trivial trail.
std::optional<TrailCertificate> has_spanning_closed_trail(const Graph& g);

// Spanning (u, v)-trail. For u != v: open trail from u to v visiting every
// vertex. For u == v: spanning closed trail through u. Pre: g connected,
// valid vertex ids.
std::optional<TrailCertificate> has_spanning_trail(const Graph& g, int u,
                                                   int v);

// Closed trail whose vertices meet every edge of g (the trail need not
// span). One-vertex trails count: a star is dominated from its center.
// Pre: g connected.
std::optional<TrailCertificate> has_dominating_closed_trail(const Graph& g);

// g with every edge of x subdivided once; the marker vertex for x[i] is
// base_n + i, with x sorted lexicographically first.
struct SubdividedGraph {
  Graph graph;
  int base_n = 0;
  std::vector<Edge> x;  // sorted; marker for x[i] is base_n + i

  int marker(const Edge& e) const;  // throws if e is not in x
};
SubdividedGraph build_gx(const Graph& g, const std::vector<Edge>& x);

// Simultaneously contract the components formed by the edges of the
// subdivided graph whose endpoints both have degree 2 there. The result
// may have parallel edges; the preimage refers to the subdivided graph's
// vertices.
Contraction build_gx_star(const SubdividedGraph& s);

// Spanning closed trail that traverses every edge of x. Answered along two
// independent routes (the subdivision graph and a direct search with x
// forced); a disagreement throws std::logic_error. Pre: g connected,
// x distinct edges of g.
std::optional<TrailCertificate> trail_through_x(const Graph& g,
                                                const std::vector<Edge>& x);

}  // namespace supereuler
