#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "supereuler/canonical.hpp"
#include "supereuler/collapse.hpp"
#include "supereuler/enumerate.hpp"
#include "supereuler/graph6.hpp"
#include "supereuler/trails.hpp"

using namespace supereuler;

namespace {

Graph diamond() {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  return g;
}

}  // namespace

TEST_CASE("collapsibility matches the brute-force definition, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      CAPTURE(graph6_encode(g));
      CHECK(is_collapsible(g).collapsible == oracles::collapsible(g));
    }
  }
}

TEST_CASE("collapsibility matches the brute-force definition, n = 6 sample") {
  const std::vector<Graph>& all = enumerate_connected(6);
  for (std::size_t i = 0; i < all.size(); i += 5) {
    CAPTURE(graph6_encode(all[i]));
    CHECK(is_collapsible(all[i]).collapsible == oracles::collapsible(all[i]));
  }
  for (const Graph& g : {oracles::complete_bipartite(3, 3), oracles::prism(),
                         oracles::cycle(6), oracles::complete_bipartite(2, 4)}) {
    CHECK(is_collapsible(g).collapsible == oracles::collapsible(g));
  }
}

TEST_CASE("witnesses cover every even target on K4") {
  Graph g = oracles::complete(4);
  CollapsibilityResult r = is_collapsible(g, /*with_witnesses=*/true);
  REQUIRE(r.collapsible);
  // Every even-sized vertex subset appears with a valid witness subgraph.
  int even_targets = 0;
  for (VertexSet target = 0; target < 16; ++target) {
    if (popcount(target) % 2 != 0) continue;
    ++even_targets;
    REQUIRE(r.witnesses.count(target) == 1);
    std::vector<Edge> chosen = r.witnesses.at(target);
    std::uint64_t mask = (1ull << chosen.size()) - 1;
    oracles::SubsetView view = oracles::subset_view(g, chosen, mask);
    CHECK(view.spanning_connected);
    CHECK(view.odd == target);
  }
  CHECK(even_targets == 8);
}

TEST_CASE("reduction pins on small graphs") {
  CHECK(reduce(oracles::complete(4)).reduced.n() == 1);
  CHECK(reduce(oracles::complete(3)).reduced.n() == 1);
  CHECK(reduce(diamond()).reduced.n() == 1);

  for (const Graph& g : {oracles::cycle(4), oracles::complete_bipartite(2, 4),
                         oracles::complete_bipartite(2, 3)}) {
    ReductionResult r = reduce(g);
    CHECK(r.reduced.n() == g.n());
    for (bool expanded : r.nontrivial) CHECK_FALSE(expanded);
    CHECK(isomorphic(r.reduced, g));
    CHECK(is_reduced(g));
  }
}

TEST_CASE("the Petersen graph is reduced") {
  CHECK(is_reduced(oracles::petersen()));
}

TEST_CASE("reduction preimages partition the vertex set") {
  for (const char* code : {"F?yRg", "FEohg", "FFHKW", "DFw", "C^", "E?~w"}) {
    Graph g = graph6_decode(code);
    ReductionResult r = reduce(g);
    std::vector<int> seen(static_cast<std::size_t>(g.n()), 0);
    REQUIRE(r.preimage.size() == static_cast<std::size_t>(r.reduced.n()));
    for (std::size_t i = 0; i < r.preimage.size(); ++i) {
      CHECK_FALSE(r.preimage[i].empty());
      CHECK((r.preimage[i].size() > 1) == static_cast<bool>(r.nontrivial[i]));
      for (int v : r.preimage[i]) {
        REQUIRE(v >= 0);
        REQUIRE(v < g.n());
        ++seen[static_cast<std::size_t>(v)];
      }
    }
    for (int count : seen) CHECK(count == 1);
  }
}

TEST_CASE("reduction is idempotent") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      Graph once = reduce(g).reduced;
      ReductionResult again = reduce(once);
      CHECK(again.reduced.n() == once.n());
      CHECK(is_reduced(once));
    }
  }
}

TEST_CASE("triangle-expanded K_{2,3} variants all reduce to K_{2,3}") {
  // Three 7-vertex graphs built by expanding one vertex of K_{2,3} into a
  // triangle; the triangle collapses, landing back on K_{2,3} itself.
  Graph k23 = oracles::complete_bipartite(2, 3);
  std::string k23_code = canonical_form(k23).bytes;
  CHECK(k23_code == "DFw");
  for (const char* code : {"F?yRg", "FEohg", "FFHKW"}) {
    Graph g = graph6_decode(code);
    ReductionResult r = reduce(g);
    CHECK(r.reduced.n() == 5);
    CHECK(canonical_form(r.reduced).bytes == k23_code);
  }
}

TEST_CASE("scan order does not change the reduction") {
  auto check_same = [](const Graph& g) {
    Multigraph mg = Multigraph::from_graph(g);
    Graph forward = detail::reduce_with_order(mg, false).reduced;
    Graph backward = detail::reduce_with_order(mg, true).reduced;
    CHECK(canonical_form(forward).bytes == canonical_form(backward).bytes);
  };
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_connected(n)) check_same(g);
  check_same(oracles::complete_bipartite(3, 3));
  check_same(oracles::prism());
  check_same(graph6_decode("F?yRg"));
}

TEST_CASE("reduction preserves spanning closed trail existence") {
  // Contracting collapsible subgraphs never creates or destroys a spanning
  // closed trail, so a graph and its reduction agree.
  for (int n = 4; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      bool whole = has_spanning_closed_trail(g).has_value();
      bool contracted =
          has_spanning_closed_trail(reduce(g).reduced).has_value();
      CAPTURE(graph6_encode(g));
      CHECK(whole == contracted);
    }
  }
}

TEST_CASE("collapsible graphs have spanning closed trails, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      if (!is_collapsible(g).collapsible) continue;
      CAPTURE(graph6_encode(g));
      CHECK(oracles::spanning_closed_trail_exists(g));
    }
  }
}

TEST_CASE("two_neighbor_extension detects doubly-attached vertices") {
  // C4 plus a fifth vertex joined to two cycle vertices: the cycle together
  // with the new vertex collapses once both attachment edges exist.
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(0, 3);
  g.add_edge(0, 4);
  g.add_edge(1, 4);
  VertexSet cycle_part = vbit(0) | vbit(1) | vbit(2) | vbit(3);
  CHECK(two_neighbor_extension(g, cycle_part, 4));

  Graph h(5);
  h.add_edge(0, 1);
  h.add_edge(1, 2);
  h.add_edge(2, 3);
  h.add_edge(0, 3);
  h.add_edge(0, 4);  // only one attachment edge
  CHECK_FALSE(two_neighbor_extension(h, cycle_part, 4));
}

TEST_CASE("parity_connected_subgraph validates its inputs") {
  Graph g = oracles::cycle(4);
  CHECK_THROWS_AS(parity_connected_subgraph(g, vbit(0)), std::invalid_argument);
  Graph split(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  CHECK_THROWS_AS(parity_connected_subgraph(split, 0), std::invalid_argument);
  CHECK_THROWS_AS(parity_connected_subgraph(g, vbit(0) | (1ull << 60)),
                  std::invalid_argument);
}

TEST_CASE("collapsible() convenience wrapper") {
  CHECK(collapsible(Graph(1)));
  CHECK_FALSE(collapsible(oracles::path(2)));
  CHECK(collapsible(oracles::complete(3)));
  CHECK_FALSE(collapsible(oracles::cycle(4)));
  CHECK(collapsible(diamond()));
  Graph split(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  CHECK_FALSE(collapsible(split));  // disconnected: false, not a throw
}

TEST_CASE("multigraph reduction contracts parallel pairs") {
  // A parallel pair is a collapsible 2-cycle; a triple edge therefore
  // contracts all the way to a single vertex (the third copy becomes a
  // loop and vanishes). A single edge stays K2.
  Multigraph triple(2);
  triple.add_edge(0, 1, 3);
  CHECK(reduce(triple).reduced.n() == 1);
  CHECK(multigraph_collapsible(triple));

  Multigraph twice(2);
  twice.add_edge(0, 1, 2);
  CHECK(reduce(twice).reduced.n() == 1);
  CHECK(multigraph_collapsible(twice));

  Multigraph single(2);
  single.add_edge(0, 1, 1);
  ReductionResult r = reduce(single);
  CHECK(r.reduced.n() == 2);
  CHECK(r.reduced.m() == 1);
  CHECK_FALSE(multigraph_collapsible(single));
}
