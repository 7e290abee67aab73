#include "alphacrit/graph6.hpp"

#include <cctype>

namespace alphacrit {

namespace {

bool is_g6_char(char c) {
  const unsigned char u = static_cast<unsigned char>(c);
  return u >= 63 && u <= 126;
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

Graph parse_graph6(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) throw Error(Errc::MalformedGraph6, "empty graph6 string");
  for (char c : s) {
    if (!is_g6_char(c))
      throw Error(Errc::MalformedGraph6,
                  "byte " + std::to_string(static_cast<int>(static_cast<unsigned char>(c))) +
                      " outside graph6 alphabet");
  }

  std::size_t pos = 0;
  long long n = 0;
  if (s[0] != '~') {
    n = s[0] - 63;
    pos = 1;
  } else {
    if (s.size() >= 2 && s[1] == '~') {
      // 8-byte form, values >= 258048; always beyond our capacity.
      if (s.size() < 8) throw Error(Errc::MalformedGraph6, "truncated size header");
      throw Error(Errc::CapacityExceeded, "graph6 header encodes 258048 or more vertices");
    }
    if (s.size() < 4) throw Error(Errc::MalformedGraph6, "truncated size header");
    n = 0;
    for (int i = 1; i <= 3; ++i) n = (n << 6) | static_cast<long long>(s[i] - 63);
    pos = 4;
  }
  if (n > Graph::kMaxVertices)
    throw Error(Errc::CapacityExceeded,
                "graph6 header encodes " + std::to_string(n) + " vertices, capacity is " +
                    std::to_string(Graph::kMaxVertices));

  const long long bits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - pos != body)
    throw Error(Errc::MalformedGraph6,
                "body has " + std::to_string(s.size() - pos) + " bytes, expected " +
                    std::to_string(body));

  Graph g(static_cast<int>(n));
  long long bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      const int group = s[pos + static_cast<std::size_t>(bit / 6)] - 63;
      if ((group >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  }
  for (long long b = bit; b < static_cast<long long>(body) * 6; ++b) {
    const int group = s[pos + static_cast<std::size_t>(b / 6)] - 63;
    if ((group >> (5 - b % 6)) & 1)
      throw Error(Errc::MalformedGraph6, "nonzero padding bits");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int group = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

}  // namespace alphacrit
