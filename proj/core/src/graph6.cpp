#include "randic/graph.hpp"

// graph6 format: N(n) followed by the upper triangle of the adjacency matrix
// in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per
// byte, big-endian within each group, each byte offset by 63.

namespace randic {

Graph6Error::Graph6Error(const std::string& what, std::size_t offset)
    : std::runtime_error("graph6: " + what + " at byte " + std::to_string(offset)),
      offset_(offset) {}

namespace {

bool printable(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  if (text.empty()) throw Graph6Error("empty input", 0);

  std::size_t pos = 0;
  long n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') {
      throw Graph6Error("orders above 258047 are not supported", 1);
    }
    if (text.size() < 4) throw Graph6Error("truncated order header", text.size());
    for (std::size_t i = 1; i <= 3; ++i) {
      if (!printable(text[i])) throw Graph6Error("byte out of range in order header", i);
      n = (n << 6) | (text[i] - 63);
    }
    if (n < 63) throw Graph6Error("non-canonical long order header", 0);
    pos = 4;
  } else {
    if (!printable(text[0]) || text[0] == '~') throw Graph6Error("byte out of range in order header", 0);
    n = text[0] - 63;
    pos = 1;
  }
  if (n > kMaxVertices) throw Graph6Error("order " + std::to_string(n) + " exceeds 64", 0);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() < pos + bytes) throw Graph6Error("truncated adjacency bit field", text.size());
  if (text.size() > pos + bytes) throw Graph6Error("trailing bytes after adjacency bit field", pos + bytes);

  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      std::size_t at = pos + k / 6;
      char c = text[at];
      if (!printable(c)) throw Graph6Error("byte out of range in adjacency bit field", at);
      if (((c - 63) >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero, and every data byte must be printable even
  // when all of its bits are padding.
  for (std::size_t at = pos; at < pos + bytes; ++at) {
    if (!printable(text[at])) throw Graph6Error("byte out of range in adjacency bit field", at);
  }
  if (bits % 6 != 0) {
    int padding = 6 - static_cast<int>(bits % 6);
    std::size_t last = pos + bytes - 1;
    if (((text[last] - 63) & ((1 << padding) - 1)) != 0) {
      throw Graph6Error("nonzero padding bits", last);
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace randic
