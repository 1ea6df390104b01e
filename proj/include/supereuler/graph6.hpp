// graph6 codec for simple graphs on 1..62 vertices: one size byte (63+n)
// followed by the upper-triangle adjacency bits in column-major order,
// packed into 6-bit groups (zero padded), each group stored as byte+63.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "supereuler/graph.hpp"

namespace supereuler {

struct ParseError : std::runtime_error {
  std::size_t offset;  // byte offset of the offending character
  ParseError(const std::string& what, std::size_t off)
      : std::runtime_error(what + " (byte offset " + std::to_string(off) + ")"),
        offset(off) {}
};

Graph graph6_decode(std::string_view line);
std::string graph6_encode(const Graph& g);

}  // namespace supereuler
