#include "mhc/graph6.hpp"

#include <sstream>
#include <vector>

namespace mhc {

namespace {

constexpr std::string_view kHeaderPrefix = ">>graph6<<";

int checked_sextet(char c) {
  if (c < 63 || c > 126) throw Graph6Error("invalid graph6 byte");
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.starts_with(kHeaderPrefix)) line.remove_prefix(kHeaderPrefix.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  if (line.empty()) throw Graph6Error("empty graph6 line");

  std::size_t pos = 0;
  long n;
  if (line[0] == '~') {
    if (line.size() >= 2 && line[1] == '~')
      throw Graph6Error("graph6 order above supported range");
    if (line.size() < 4) throw Graph6Error("truncated graph6 header");
    n = 0;
    for (int i = 1; i <= 3; ++i) n = (n << 6) | checked_sextet(line[i]);
    pos = 4;
  } else {
    n = checked_sextet(line[0]);
    pos = 1;
  }
  if (n < 1 || n > kMaxOrder)
    throw Graph6Error("graph6 order " + std::to_string(n) + " out of range");

  const long nbits = n * (n - 1) / 2;
  const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (line.size() - pos < nbytes) throw Graph6Error("truncated graph6 bit field");
  if (line.size() - pos > nbytes) throw Graph6Error("trailing bytes after graph6 bit field");

  std::vector<Edge> es;
  long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = checked_sextet(line[pos + static_cast<std::size_t>(bit / 6)]);
      if ((byte >> (5 - bit % 6)) & 1) es.emplace_back(i, j);
    }
  }
  return Graph::from_edges(static_cast<int>(n), es);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n, m;
  if (!(in >> n >> m)) throw Graph6Error("edge list: missing \"n m\" header");
  std::vector<Edge> es;
  for (int t = 0; t < m; ++t) {
    int u, v;
    if (!(in >> u >> v)) throw Graph6Error("edge list: truncated at edge " + std::to_string(t));
    es.emplace_back(u, v);
  }
  try {
    return Graph::from_edges(n, es);
  } catch (const std::invalid_argument& e) {
    throw Graph6Error(std::string("edge list: ") + e.what());
  }
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace mhc
