#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "stabset/graph.hpp"

namespace stabset {

// User-facing parse failure with the byte offset of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error("syntax error at offset " + std::to_string(offset) +
                           ": " + message),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Generator expression grammar:
//   atom       := cycle(k) | complete(k) | path(k) | empty(k)
//               | complete_multipartite(k1,...,kr) | random(n,p,seed)
//   combinator := line(e) | complement(e) | join(e,e) | union(e,e)
//               | induced(e,[v1,...,vm])
// p is an integer, decimal, or fraction a/b, parsed exactly.
Graph parse_dsl(const std::string& expr);

// Builds a graph from either source format: an edge-list document (first
// meaningful character is a digit) or a DSL expression.
Graph build_graph(const std::string& text);

}  // namespace stabset
