#include "supereuler/families.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "supereuler/canonical.hpp"
#include "supereuler/collapse.hpp"
#include "supereuler/enumerate.hpp"

namespace supereuler {

Graph construct_family(FamilyTag tag, int param) {
  switch (tag) {
    case FamilyTag::star: {
      if (param < 2) throw std::invalid_argument("star needs at least 2 vertices");
      Graph g(param);
      for (int v = 1; v < param; ++v) g.add_edge(0, v);
      return g;
    }
    case FamilyTag::complete_bipartite_two: {
      if (param < 4) {
        throw std::invalid_argument("complete bipartite family needs n >= 4");
      }
      Graph g(param);
      for (int v = 2; v < param; ++v) {
        g.add_edge(0, v);
        g.add_edge(1, v);
      }
      return g;
    }
    case FamilyTag::k2n2_star: {
      Graph g = construct_family(FamilyTag::complete_bipartite_two, param);
      g.add_edge(0, 1);
      return g;
    }
    case FamilyTag::k2n3_prime: {
      if (param < 4) throw std::invalid_argument("pendant family needs n >= 4");
      Graph g(param);
      for (int v = 2; v < param - 1; ++v) {
        g.add_edge(0, v);
        g.add_edge(1, v);
      }
      g.add_edge(0, param - 1);
      return g;
    }
    case FamilyTag::cycle5: {
      if (param != 5) throw std::invalid_argument("the 5-cycle has 5 vertices");
      Graph g(5);
      for (int v = 0; v < 5; ++v) g.add_edge(v, (v + 1) % 5);
      return g;
    }
    case FamilyTag::sporadic7: {
      if (param != 0 && param != 1) {
        throw std::invalid_argument("sporadic index must be 0 or 1");
      }
      const auto& found = discovered_exceptions(7);
      if (static_cast<std::size_t>(param) >= found.size()) {
        throw std::logic_error("sporadic 7-vertex exception not available");
      }
      return found[static_cast<std::size_t>(param)];
    }
  }
  throw std::invalid_argument("unknown family tag");
}

std::optional<Family> recognize_family(const Graph& g) {
  const int n = g.n();
  const CanonicalCode code = canonical_form(g);
  const auto matches = [&code](const Graph& h) {
    return canonical_form(h) == code;
  };
  if (n >= 2 && matches(construct_family(FamilyTag::star, n))) {
    return Family{FamilyTag::star, n};
  }
  if (n >= 4) {
    if (matches(construct_family(FamilyTag::complete_bipartite_two, n))) {
      return Family{FamilyTag::complete_bipartite_two, n};
    }
    if (matches(construct_family(FamilyTag::k2n2_star, n))) {
      return Family{FamilyTag::k2n2_star, n};
    }
    if (matches(construct_family(FamilyTag::k2n3_prime, n))) {
      return Family{FamilyTag::k2n3_prime, n};
    }
  }
  if (n == 5 && matches(construct_family(FamilyTag::cycle5, 5))) {
    return Family{FamilyTag::cycle5, 5};
  }
  if (n == 7) {
    const auto& found = discovered_exceptions(7);
    for (std::size_t i = 0; i < found.size(); ++i) {
      if (matches(found[i])) {
        return Family{FamilyTag::sporadic7, static_cast<int>(i)};
      }
    }
  }
  return std::nullopt;
}

std::string family_name(const Family& f) {
  switch (f.tag) {
    case FamilyTag::star:
      return "K_{1," + std::to_string(f.param - 1) + "}";
    case FamilyTag::complete_bipartite_two:
      return "K_{2," + std::to_string(f.param - 2) + "}";
    case FamilyTag::k2n2_star:
      return "K*_{2," + std::to_string(f.param - 2) + "}";
    case FamilyTag::k2n3_prime:
      return "K'_{2," + std::to_string(f.param - 3) + "}";
    case FamilyTag::cycle5:
      return "C_5";
    case FamilyTag::sporadic7:
      return f.param == 0 ? "G7" : "G7'";
  }
  return "unknown";
}

std::optional<int> star_order(const Graph& g) {
  const int t = g.n();
  if (t < 2 || g.m() != t - 1) return std::nullopt;
  int max_degree = 0;
  for (int v = 0; v < t; ++v) max_degree = std::max(max_degree, g.degree(v));
  if (max_degree != t - 1) return std::nullopt;
  return t;
}

const std::vector<Graph>& discovered_exceptions(int n) {
  if (n < 4 || n > 10) {
    throw std::invalid_argument("exception discovery covers 4 <= n <= 10");
  }
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  const int parity_slack = (n % 2 == 0) ? 0 : 1;
  const int bound = n - 1 - parity_slack;
  std::vector<Graph> out;
  // Named parametric families to exclude, up to isomorphism.
  std::vector<CanonicalCode> named;
  named.push_back(canonical_form(construct_family(FamilyTag::star, n)));
  named.push_back(
      canonical_form(construct_family(FamilyTag::complete_bipartite_two, n)));
  named.push_back(canonical_form(construct_family(FamilyTag::k2n3_prime, n)));

  for (const Graph& g : enumerate_connected(n, bound)) {
    if (is_collapsible(g).collapsible) continue;
    const ReductionResult r = reduce(g);
    const std::optional<int> t = star_order(r.reduced);
    if (t.has_value() && *t >= 2 && *t < n) continue;
    // Only irreducible cores count as discoveries: a graph that is not its
    // own reduction classifies through its reduction, and a graph with a
    // pendant vertex is an attachment variant of a smaller exceptional
    // graph.  Both kinds are derived shapes, not primitive exceptions.
    if (r.reduced.n() != g.n()) continue;
    int min_degree = g.n();
    for (int v = 0; v < g.n(); ++v) {
      min_degree = std::min(min_degree, g.degree(v));
    }
    if (min_degree < 2) continue;
    const CanonicalCode code = canonical_form(g);
    bool is_named = false;
    for (const CanonicalCode& named_code : named) {
      if (code == named_code) {
        is_named = true;
        break;
      }
    }
    if (is_named) continue;
    out.push_back(g);
  }
  std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    return canonical_form(a).bytes < canonical_form(b).bytes;
  });
  return cache.emplace(n, std::move(out)).first->second;
}

}  // namespace supereuler
