#include "supereuler/canonical.hpp"

#include <algorithm>
#include <bit>

#include "supereuler/graph6.hpp"

namespace supereuler {

namespace {

// Iterated neighborhood-color refinement. Color ids are ranks of sorted
// signatures, so they are invariant across isomorphic graphs.
std::vector<int> refine_colors(const Graph& g) {
  int n = g.n();
  std::vector<int> color(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = 0;
  for (;;) {
    std::vector<std::vector<int>> sig(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      VertexSet s = g.neighbors(v);
      while (s) {
        int w = std::countr_zero(s);
        s &= s - 1;
        nb.push_back(color[w]);
      }
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int v = 0; v < n; ++v)
      color[v] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    int now = static_cast<int>(uniq.size());
    if (now == classes) break;
    classes = now;
  }
  return color;
}

// Least adjacency bitstring over labelings that respect the refinement
// partition (classes in color order, vertices permuted within classes).
// Column p of the upper triangle is decided when position p is filled, so
// the search compares words level by level against the incumbent.
struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<int> class_for_pos;
  std::vector<std::vector<int>> members;  // color -> vertices
  std::vector<int> perm_pos;              // position -> original vertex
  std::vector<std::uint64_t> cur;         // column words of current prefix
  VertexSet used = 0;
  bool have_best = false;
  std::vector<std::uint64_t> best;
  std::vector<int> best_perm;

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.n()) {
    std::vector<int> color = refine_colors(g);
    int classes = *std::max_element(color.begin(), color.end()) + 1;
    members.assign(static_cast<size_t>(classes), {});
    for (int v = 0; v < n; ++v) members[color[v]].push_back(v);
    for (int c = 0; c < classes; ++c)
      for (size_t i = 0; i < members[c].size(); ++i) class_for_pos.push_back(c);
    perm_pos.assign(static_cast<size_t>(n), -1);
    cur.assign(static_cast<size_t>(n), 0);
  }

  std::uint64_t column_word(int x, int p) const {
    std::uint64_t w = 0;
    for (int i = 0; i < p; ++i)
      w = (w << 1) | (g.has_edge(perm_pos[i], x) ? 1 : 0);
    return w;
  }

  // matches_best: the prefix cur[0..p-1] equals best[0..p-1]. Otherwise it
  // is strictly smaller (or no incumbent exists yet).
  void descend(int p, bool matches_best) {
    if (p == n) {
      if (!have_best || !matches_best) {
        best = cur;
        best_perm = perm_pos;
        have_best = true;
      }
      return;
    }

    std::uint64_t minw = ~std::uint64_t{0};
    std::vector<int> cand;
    for (int x : members[class_for_pos[p]]) {
      if (used & vbit(x)) continue;
      std::uint64_t w = column_word(x, p);
      if (w < minw) {
        minw = w;
        cand.clear();
      }
      if (w == minw) cand.push_back(x);
    }
    if (have_best && matches_best && minw > best[p]) return;
    bool child_matches = have_best && matches_best && minw == best[p];

    // Candidates with identical neighborhoods on the unplaced vertices are
    // interchangeable; their subtrees coincide, so keep one.
    std::vector<int> kept;
    for (int x : cand) {
      bool twin = false;
      for (int y : kept) {
        VertexSet rest = ~used & g.vertex_mask() & ~vbit(x) & ~vbit(y);
        if (((g.neighbors(x) ^ g.neighbors(y)) & rest) == 0) {
          twin = true;
          break;
        }
      }
      if (!twin) kept.push_back(x);
    }

    cur[p] = minw;
    for (int x : kept) {
      perm_pos[p] = x;
      used |= vbit(x);
      descend(p + 1, child_matches);
      used &= ~vbit(x);
      perm_pos[p] = -1;
      // Any update inside the subtree copied cur[0..p] into best, and all
      // siblings here share the same column word, so the prefix now matches.
      child_matches = true;
    }
  }

  CanonicalCode run() {
    descend(0, false);
    std::vector<int> relabel(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) relabel[best_perm[p]] = p;
    return CanonicalCode{graph6_encode(permute(g, relabel))};
  }
};

}  // namespace

CanonicalCode canonical_form(const Graph& g) {
  if (g.n() > kMaxCanonicalVertices)
    throw std::invalid_argument("canonical_form supports at most 10 vertices");
  if (g.n() == 1) return CanonicalCode{graph6_encode(g)};
  return CanonSearch(g).run();
}

Graph permute(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n())
    throw std::invalid_argument("permutation size mismatch");
  Graph out(g.n());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace supereuler
