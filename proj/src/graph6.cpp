#include "halfspec/graph6.hpp"

namespace halfspec {

Graph graph6_decode(std::string_view text) {
  // Tolerate a single trailing newline, as written by corpus tools.
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("graph6: empty input");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw Graph6Error("graph6: byte " + std::to_string(i) + " out of range");
  }

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4) throw Graph6Error("graph6: truncated length field");
    if (text[1] == '~') throw Graph6Error("graph6: order exceeds the 64-vertex cap");
    n = (static_cast<long>(text[1] - 63) << 12) | (static_cast<long>(text[2] - 63) << 6) | (text[3] - 63);
    if (n < 63) throw Graph6Error("graph6: non-canonical long length form");
    pos = 4;
  }
  if (n > kMaxOrder) throw Graph6Error("graph6: order " + std::to_string(n) + " exceeds the 64-vertex cap");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw Graph6Error("graph6: too few adjacency bytes");
  if (text.size() - pos > bytes) throw Graph6Error("graph6: trailing garbage");

  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    const int last = text[pos + bytes - 1] - 63;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw Graph6Error("graph6: nonzero padding bits");
  }
  return g;
}

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

}  // namespace halfspec
