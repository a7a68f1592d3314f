#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "walkmat/graph.hpp"

namespace walkmat {

/// Thrown by graph6_decode; byte_offset() points at the offending byte.
class Graph6ParseError : public std::runtime_error {
public:
  Graph6ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error("graph6: byte " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t byte_offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// Encodes to the standard graph6 text format: one size byte 63+n
/// followed by the upper triangle packed column by column, six bits per
/// byte, each byte offset by 63. Supports n <= 62.
std::string graph6_encode(const Graph& g);

/// Strict decoder: rejects bytes outside [63, 126], wrong lengths and
/// non-zero padding bits, so encode(decode(s)) == s on every accepted
/// input.
Graph graph6_decode(const std::string& text);

}  // namespace walkmat
