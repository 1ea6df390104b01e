#include "supereuler/graph6.hpp"

namespace supereuler {

Graph graph6_decode(std::string_view line) {
  // Tolerate a trailing newline so files can be fed line by line.
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  if (line.empty()) throw ParseError("empty graph6 line", 0);

  unsigned char size = static_cast<unsigned char>(line[0]);
  if (size == 126)
    throw ParseError("multi-byte graph6 sizes (n > 62) are not supported", 0);
  if (size < 63 || size > 63 + kMaxVertices)
    throw ParseError("invalid graph6 size byte", 0);
  int n = size - 63;
  if (n == 0) throw ParseError("graph6 size 0 is not supported", 0);

  Graph g(n);
  int bits = n * (n - 1) / 2;
  int need = (bits + 5) / 6;
  if (static_cast<int>(line.size()) - 1 < need)
    throw ParseError("graph6 line truncated", line.size());
  if (static_cast<int>(line.size()) - 1 > need)
    throw ParseError("trailing bytes after graph6 payload", 1 + static_cast<size_t>(need));

  int bit_index = 0, row = 0, col = 1;
  for (int idx = 0; idx < need; ++idx) {
    unsigned char c = static_cast<unsigned char>(line[1 + idx]);
    if (c < 63 || c > 126)
      throw ParseError("graph6 payload byte out of range", 1 + static_cast<size_t>(idx));
    int group = c - 63;
    for (int b = 5; b >= 0; --b, ++bit_index) {
      if (bit_index >= bits) {
        if ((group >> b) & 1)
          throw ParseError("nonzero padding bit in graph6 payload",
                           1 + static_cast<size_t>(idx));
        continue;
      }
      if ((group >> b) & 1) g.add_edge(row, col);
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return g;
}

std::string graph6_encode(const Graph& g) {
  std::string out;
  out.push_back(static_cast<char>(63 + g.n()));
  int group = 0, filled = 0;
  for (int j = 1; j < g.n(); ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

}  // namespace supereuler
