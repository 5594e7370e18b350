#pragma once

// graph6 text encoding: N(n) followed by the upper triangle of the adjacency
// matrix in column-major order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed
// six bits per byte big-endian and offset by 63.

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "xstab/graph.hpp"

namespace xstab {

inline std::string graph6_encode(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }

  int acc = 0;
  int bits = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

/// Decodes one graph6 line. An optional ">>graph6<<" header and a trailing
/// newline are accepted.
inline Graph graph6_decode(std::string_view text) {
  std::size_t base = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) {
    text.remove_prefix(header.size());
    base = header.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  std::size_t pos = 0;
  auto sextet = [&](std::size_t at) -> std::uint64_t {
    if (at >= text.size()) throw ParseError("graph6: truncated input", base + at);
    const auto c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", base + at);
    return c - 63U;
  };

  if (text.empty()) throw ParseError("graph6: empty input", base);
  std::uint64_t n = 0;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = sextet(0);
    pos = 1;
  } else if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126) {
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(i);
    pos = 8;
  } else {
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(i);
    pos = 4;
  }
  if (n > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
    throw ParseError("graph6: order too large", base);

  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t need = (pairs + 5) / 6;
  if (text.size() - pos != need)
    throw ParseError("graph6: expected " + std::to_string(need) + " adjacency bytes, found " +
                         std::to_string(text.size() - pos),
                     base + std::min(text.size(), pos + need));

  Graph g(static_cast<int>(n));
  std::uint64_t bit = 0;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const std::size_t at = pos + static_cast<std::size_t>(bit / 6);
      if ((sextet(at) >> (5 - bit % 6)) & 1U) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero for the canonical form.
  if (pairs % 6 != 0) {
    const std::size_t last = pos + need - 1;
    const auto pad = static_cast<unsigned>(6 - pairs % 6);
    if (sextet(last) & ((1U << pad) - 1U)) throw ParseError("graph6: nonzero padding bits", base + last);
  }
  return g;
}

}  // namespace xstab
