#include "walkmat/graph6.hpp"

namespace walkmat {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxOrder = 62;

std::size_t payload_bytes(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > kMaxOrder)
    throw std::out_of_range("graph6 encoding supports at most 62 vertices, got " +
                            std::to_string(n));
  std::string out;
  out.reserve(1 + payload_bytes(n));
  out.push_back(static_cast<char>(kOffset + n));

  int group = 0;
  int filled = 0;
  // column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      group = (group << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kOffset + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kOffset + (group << (6 - filled))));
  return out;
}

Graph graph6_decode(const std::string& text) {
  if (text.empty()) throw Graph6ParseError(0, "empty input");

  const unsigned char size_byte = static_cast<unsigned char>(text[0]);
  if (size_byte < kOffset || size_byte > 126)
    throw Graph6ParseError(0, "size byte outside the printable range [63, 126]");
  if (size_byte == 126)
    throw Graph6ParseError(0, "multi-byte size headers (n > 62) are not supported");
  const int n = size_byte - kOffset;

  const std::size_t expected = 1 + payload_bytes(n);
  if (text.size() < expected)
    throw Graph6ParseError(text.size(), "truncated bit field, expected " +
                                            std::to_string(expected) + " bytes");
  if (text.size() > expected)
    throw Graph6ParseError(expected, "trailing data after the bit field");

  Graph g(n);
  std::size_t bit_index = 0;
  const std::size_t total_bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  for (std::size_t k = 1; k < text.size(); ++k) {
    const unsigned char byte = static_cast<unsigned char>(text[k]);
    if (byte < kOffset || byte > 126)
      throw Graph6ParseError(k, "byte outside the printable range [63, 126]");
    const int group = byte - kOffset;
    for (int b = 5; b >= 0; --b, ++bit_index) {
      const bool bit = (group >> b) & 1;
      if (bit_index >= total_bits) {
        if (bit) throw Graph6ParseError(k, "non-zero padding bits");
        continue;
      }
      if (bit) {
        // invert the column-major index: find the column of this bit
        std::size_t idx = bit_index;
        int col = 1;
        while (idx >= static_cast<std::size_t>(col)) {
          idx -= static_cast<std::size_t>(col);
          ++col;
        }
        g.add_edge(static_cast<int>(idx), col);
      }
    }
  }
  return g;
}

}  // namespace walkmat
