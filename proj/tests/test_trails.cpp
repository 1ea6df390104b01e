#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "supereuler/canonical.hpp"
#include "supereuler/enumerate.hpp"
#include "supereuler/graph6.hpp"
#include "supereuler/trails.hpp"

using namespace supereuler;

namespace {

Graph k_star_2_4() {
  // K_{2,4} plus the hub-hub edge: hubs 0, 1; leaves 2..5.
  Graph g(6);
  g.add_edge(0, 1);
  for (int leaf = 2; leaf < 6; ++leaf) {
    g.add_edge(0, leaf);
    g.add_edge(1, leaf);
  }
  return g;
}

CertStatus replay_closed_spanning(const Graph& g, const TrailCertificate& c) {
  CertRequirements req;
  req.kind = TrailKind::closed;
  req.spanning = true;
  return verify_certificate(g, c, req);
}

}  // namespace

TEST_CASE("spanning closed trails match the brute-force scan, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      std::optional<TrailCertificate> cert = has_spanning_closed_trail(g);
      CAPTURE(graph6_encode(g));
      CHECK(cert.has_value() == oracles::spanning_closed_trail_exists(g));
      if (cert) CHECK(replay_closed_spanning(g, *cert) == CertStatus::ok);
    }
  }
}

TEST_CASE("spanning trails match the brute-force scan for all endpoint pairs, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          std::optional<TrailCertificate> cert = has_spanning_trail(g, u, v);
          CAPTURE(graph6_encode(g));
          CAPTURE(u);
          CAPTURE(v);
          CHECK(cert.has_value() == oracles::spanning_trail_exists(g, u, v));
          if (!cert) continue;
          CertRequirements req;
          req.spanning = true;
          if (u == v) {
            req.kind = TrailKind::closed;
            CHECK(cert->walk.front() == u);
          } else {
            req.kind = TrailKind::open;
            req.endpoints = std::pair<int, int>{u, v};
          }
          CHECK(verify_certificate(g, *cert, req) == CertStatus::ok);
        }
      }
    }
  }
}

TEST_CASE("spanning trails match the brute-force scan, n = 6 sample") {
  const std::vector<Graph>& all = enumerate_connected(6);
  for (std::size_t i = 0; i < all.size(); i += 11) {
    const Graph& g = all[i];
    for (auto [u, v] : {std::pair<int, int>{0, 0}, {0, 5}, {2, 3}}) {
      CAPTURE(graph6_encode(g));
      CHECK(has_spanning_trail(g, u, v).has_value() ==
            oracles::spanning_trail_exists(g, u, v));
    }
  }
}

TEST_CASE("a closed spanning trail through any vertex is just a spanning closed trail") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      bool sct = has_spanning_closed_trail(g).has_value();
      for (int u = 0; u < n; ++u) {
        CHECK(has_spanning_trail(g, u, u).has_value() == sct);
      }
    }
  }
}

TEST_CASE("trail pins on named graphs") {
  // K_{2,4}: every leaf must take both its edges for even degree, forcing
  // both hubs even too, so no open spanning trail joins the hubs.
  Graph k24 = oracles::complete_bipartite(2, 4);
  CHECK_FALSE(has_spanning_trail(k24, 0, 1).has_value());
  CHECK_FALSE(oracles::spanning_trail_exists(k24, 0, 1));

  // K_{2,3} has no spanning closed trail at all (odd leaves get in the way).
  Graph k23 = oracles::complete_bipartite(2, 3);
  CHECK_FALSE(has_spanning_trail(k23, 0, 0).has_value());
  CHECK_FALSE(has_spanning_closed_trail(k23).has_value());

  // A path on four vertices has no dominating closed trail: the only
  // closed trails in a tree are single vertices, and no single vertex
  // meets both end edges.
  CHECK_FALSE(has_dominating_closed_trail(oracles::path(4)).has_value());

  // A star is dominated from its center by the trivial one-vertex trail.
  std::optional<TrailCertificate> star_cert =
      has_dominating_closed_trail(oracles::star(6));
  REQUIRE(star_cert.has_value());
  CHECK(star_cert->walk.size() == 1);

  // The five-cycle dominates itself.
  CHECK(has_dominating_closed_trail(oracles::cycle(5)).has_value());
}

TEST_CASE("dominating closed trails match the brute-force scan") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      std::optional<TrailCertificate> cert = has_dominating_closed_trail(g);
      CAPTURE(graph6_encode(g));
      CHECK(cert.has_value() == oracles::dominating_closed_trail_exists(g));
      if (!cert) continue;
      CertRequirements req;
      req.kind = TrailKind::closed;
      req.dominating = true;
      CHECK(verify_certificate(g, *cert, req) == CertStatus::ok);
    }
  }
  const std::vector<Graph>& all = enumerate_connected(6);
  for (std::size_t i = 0; i < all.size(); i += 7) {
    CHECK(has_dominating_closed_trail(all[i]).has_value() ==
          oracles::dominating_closed_trail_exists(all[i]));
  }
}

TEST_CASE("subdividing one triangle edge yields a four-cycle") {
  Graph triangle = oracles::complete(3);
  SubdividedGraph s = build_gx(triangle, {Edge(0, 1)});
  CHECK(s.base_n == 3);
  REQUIRE(s.x.size() == 1);
  CHECK(s.x[0] == Edge(0, 1));
  CHECK(s.graph.n() == 4);
  CHECK(s.graph.m() == 4);
  CHECK(isomorphic(s.graph, oracles::cycle(4)));

  int marker = s.marker(Edge(0, 1));
  CHECK(marker == 3);
  CHECK(s.graph.has_edge(0, marker));
  CHECK(s.graph.has_edge(1, marker));
  CHECK_FALSE(s.graph.has_edge(0, 1));
  CHECK_THROWS_AS(s.marker(Edge(0, 2)), std::invalid_argument);
}

TEST_CASE("marker vertices follow the sorted order of the subdivided set") {
  Graph k4 = oracles::complete(4);
  SubdividedGraph s = build_gx(k4, {Edge(2, 3), Edge(0, 1)});
  REQUIRE(s.x.size() == 2);
  CHECK(s.x[0] == Edge(0, 1));
  CHECK(s.x[1] == Edge(2, 3));
  CHECK(s.marker(Edge(0, 1)) == 4);
  CHECK(s.marker(Edge(2, 3)) == 5);
  CHECK(s.graph.n() == 6);
  CHECK(s.graph.m() == 8);
}

TEST_CASE("contracting degree-two chains in the subdivided graph") {
  // Subdividing one edge of a triangle gives a four-cycle: every edge
  // joins two degree-2 vertices, so the whole cycle contracts to a point.
  SubdividedGraph all_degree_two = build_gx(oracles::complete(3), {Edge(0, 1)});
  Contraction collapsed = build_gx_star(all_degree_two);
  CHECK(collapsed.result.n() == 1);
  CHECK(collapsed.result.m() == 0);
  REQUIRE(collapsed.preimage.size() == 1);
  CHECK(collapsed.preimage[0].size() == 4);

  // Subdividing one edge of K4 leaves the marker's neighbors at degree 3:
  // no edge joins two degree-2 vertices, so nothing contracts.
  SubdividedGraph stiff = build_gx(oracles::complete(4), {Edge(0, 1)});
  Contraction untouched = build_gx_star(stiff);
  CHECK(untouched.result.n() == stiff.graph.n());
  CHECK(untouched.result.m() == stiff.graph.m());
}

TEST_CASE("trails through prescribed edges match the brute-force scan") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      std::vector<Edge> edges = g.edges();
      std::vector<std::vector<Edge>> subsets;
      subsets.push_back({});
      for (std::size_t i = 0; i < edges.size(); ++i) {
        subsets.push_back({edges[i]});
        for (std::size_t j = i + 1; j < edges.size(); ++j)
          subsets.push_back({edges[i], edges[j]});
      }
      for (const std::vector<Edge>& x : subsets) {
        std::optional<TrailCertificate> cert = trail_through_x(g, x);
        CAPTURE(graph6_encode(g));
        CHECK(cert.has_value() == oracles::trail_through_exists(g, x));
        if (!cert) continue;
        CertRequirements req;
        req.kind = TrailKind::closed;
        req.spanning = true;
        req.contains = x;
        CHECK(verify_certificate(g, *cert, req) == CertStatus::ok);
      }
    }
  }
}

TEST_CASE("the hub-hub edge of K*_{2,4} is the one unusable edge") {
  Graph g = k_star_2_4();
  CHECK_FALSE(trail_through_x(g, {Edge(0, 1)}).has_value());
  CHECK_FALSE(oracles::trail_through_exists(g, {Edge(0, 1)}));
  std::optional<TrailCertificate> through_leaf =
      trail_through_x(g, {Edge(0, 2)});
  REQUIRE(through_leaf.has_value());
  CHECK(oracles::trail_through_exists(g, {Edge(0, 2)}));
  CertRequirements req;
  req.kind = TrailKind::closed;
  req.spanning = true;
  req.contains = {Edge(0, 2)};
  CHECK(verify_certificate(g, *through_leaf, req) == CertStatus::ok);
}

TEST_CASE("certificate verification reports the first failing requirement") {
  Graph c4 = oracles::cycle(4);
  CertRequirements closed_spanning;
  closed_spanning.kind = TrailKind::closed;
  closed_spanning.spanning = true;

  TrailCertificate good{TrailKind::closed, {0, 1, 2, 3, 0}};
  CHECK(verify_certificate(c4, good, closed_spanning) == CertStatus::ok);

  TrailCertificate empty{TrailKind::closed, {}};
  CHECK(verify_certificate(c4, empty, closed_spanning) ==
        CertStatus::empty_walk);

  TrailCertificate chord{TrailKind::closed, {0, 2, 0}};
  CHECK(verify_certificate(c4, chord, closed_spanning) ==
        CertStatus::edge_missing);

  TrailCertificate doubled{TrailKind::closed, {0, 1, 0}};
  CHECK(verify_certificate(c4, doubled, closed_spanning) ==
        CertStatus::repeated_edge);

  TrailCertificate open_walk{TrailKind::closed, {0, 1, 2}};
  CHECK(verify_certificate(c4, open_walk, closed_spanning) ==
        CertStatus::not_closed);

  CertRequirements open_req;
  open_req.kind = TrailKind::open;
  open_req.endpoints = std::pair<int, int>{0, 2};
  TrailCertificate stray{TrailKind::open, {0, 1}};
  CHECK(verify_certificate(c4, stray, open_req) ==
        CertStatus::wrong_endpoints);

  open_req.spanning = true;
  TrailCertificate partial{TrailKind::open, {0, 1, 2}};
  CHECK(verify_certificate(c4, partial, open_req) == CertStatus::not_spanning);

  CertRequirements dominating;
  dominating.kind = TrailKind::closed;
  dominating.dominating = true;
  TrailCertificate lone{TrailKind::closed, {0}};
  CHECK(verify_certificate(c4, lone, dominating) == CertStatus::not_dominating);

  Graph k4 = oracles::complete(4);
  CertRequirements with_edge;
  with_edge.kind = TrailKind::closed;
  with_edge.contains = {Edge(0, 2)};
  TrailCertificate rim{TrailKind::closed, {0, 1, 2, 3, 0}};
  CHECK(verify_certificate(k4, rim, with_edge) ==
        CertStatus::missing_required_edge);
}

TEST_CASE("certificate status names are distinct and non-empty") {
  std::set<std::string> names;
  for (CertStatus s :
       {CertStatus::ok, CertStatus::empty_walk, CertStatus::edge_missing,
        CertStatus::repeated_edge, CertStatus::not_closed,
        CertStatus::wrong_endpoints, CertStatus::not_spanning,
        CertStatus::not_dominating, CertStatus::missing_required_edge}) {
    std::string name = cert_status_name(s);
    CHECK_FALSE(name.empty());
    names.insert(name);
  }
  CHECK(names.size() == 9);
}

TEST_CASE("the one-vertex graph has the trivial closed trail") {
  Graph g(1);
  std::optional<TrailCertificate> cert = has_spanning_closed_trail(g);
  REQUIRE(cert.has_value());
  CHECK(cert->walk == std::vector<int>{0});
  CHECK(replay_closed_spanning(g, *cert) == CertStatus::ok);
}
