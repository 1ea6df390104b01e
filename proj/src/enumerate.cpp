#include "supereuler/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <set>

#include "supereuler/canonical.hpp"
#include "supereuler/graph6.hpp"

namespace supereuler {

namespace {

// Full sweeps are requested repeatedly with different degree filters, so the
// unfiltered class lists are generated once per vertex count and cached.
const std::vector<std::string>& connected_codes(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<std::string>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Level k holds every isomorphism class with k edges, as canonical codes.
  // Augmenting each class by every non-edge reaches every class at k+1.
  std::set<std::string> level{canonical_form(Graph(n)).bytes};
  std::vector<std::string> keep;
  auto consider = [&](const std::string& code) {
    if (is_connected(graph6_decode(code))) keep.push_back(code);
  };
  for (const std::string& code : level) consider(code);

  int max_edges = n * (n - 1) / 2;
  for (int k = 0; k < max_edges; ++k) {
    std::set<std::string> next;
    for (const std::string& code : level) {
      Graph g = graph6_decode(code);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          Graph h = g;
          h.add_edge(u, v);
          next.insert(canonical_form(h).bytes);
        }
    }
    level = std::move(next);
    for (const std::string& code : level) consider(code);
  }

  std::sort(keep.begin(), keep.end());
  return cache.emplace(n, std::move(keep)).first->second;
}

}  // namespace

std::vector<Graph> enumerate_connected(int n, int min_xi) {
  if (n < 1 || n > kMaxCanonicalVertices)
    throw std::invalid_argument("enumeration supports 1 <= n <= 10");

  std::vector<Graph> out;
  for (const std::string& code : connected_codes(n)) {
    Graph g = graph6_decode(code);
    if (min_xi > 0 && (g.m() == 0 || xi(g) < min_xi)) continue;
    out.push_back(std::move(g));
  }
  return out;
}

EnumerationStream EnumerationStream::generate(int n_min, int n_max, int min_xi) {
  if (n_min < 1 || n_max < n_min)
    throw std::invalid_argument("bad vertex range");
  EnumerationStream s;
  for (int n = n_min; n <= n_max; ++n) {
    std::vector<Graph> part = enumerate_connected(n, min_xi);
    s.graphs.insert(s.graphs.end(), part.begin(), part.end());
  }
  return s;
}

EnumerationStream EnumerationStream::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
  std::vector<std::string> codes;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    Graph g = graph6_decode(line);
    codes.push_back(canonical_form(g).bytes);
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  EnumerationStream s;
  for (const std::string& code : codes) s.graphs.push_back(graph6_decode(code));
  return s;
}

}  // namespace supereuler
