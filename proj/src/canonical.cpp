#include "mhc/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "mhc/graph6.hpp"

namespace mhc {

namespace {

// Iterated neighborhood color refinement (1-WL). Colors are assigned by
// sorting the invariant keys, so equal colors mean equal refinement history
// across isomorphic graphs.
std::vector<int> refine_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, 0);
  int classes = 1;
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> keys(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> key{color[v]};
      std::uint64_t nb = g.neighbors(v);
      std::vector<int> nbc;
      while (nb) {
        nbc.push_back(color[std::countr_zero(nb)]);
        nb &= nb - 1;
      }
      std::sort(nbc.begin(), nbc.end());
      key.insert(key.end(), nbc.begin(), nbc.end());
      keys[v] = {std::move(key), v};
    }
    std::map<std::vector<int>, int> ids;
    for (auto& [key, v] : keys) ids.emplace(key, 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (auto& [key, v] : keys) color[v] = ids[key];
    if (next == classes) break;
    classes = next;
  }
  return color;
}

// Branch-and-bound minimization over cell-respecting orderings. The search
// only ever walks prefixes equal to the incumbent best: improving a column
// rewrites best[p] and resets everything deeper to a sentinel, so every
// comparison is against the current minimum.
struct MinSearch {
  static constexpr std::uint64_t kUnset = ~std::uint64_t{0};

  const Graph& g;
  int n;
  std::vector<std::vector<int>> cells;  // vertices grouped by color, color order
  std::vector<int> cell_of_pos;         // which cell supplies each position
  std::vector<std::uint64_t> best;      // best[p] = adjacency column of position p
  std::vector<int> placed;              // placed[p] = original vertex
  std::vector<bool> used;

  explicit MinSearch(const Graph& graph) : g(graph), n(graph.order()) {
    auto color = refine_colors(g);
    int classes = *std::max_element(color.begin(), color.end()) + 1;
    cells.resize(classes);
    for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
    for (int c = 0; c < classes; ++c)
      for (std::size_t t = 0; t < cells[c].size(); ++t) cell_of_pos.push_back(c);
    best.assign(n, kUnset);
    placed.assign(n, -1);
    used.assign(n, false);
  }

  void descend(int p) {
    if (p == n) return;  // best[0..n-1] already holds this minimal prefix
    for (int v : cells[cell_of_pos[p]]) {
      if (used[v]) continue;
      std::uint64_t col = 0;
      for (int q = 0; q < p; ++q)
        col |= static_cast<std::uint64_t>(g.has_edge(placed[q], v)) << (p - 1 - q);
      if (col > best[p]) continue;
      if (col < best[p]) {
        best[p] = col;
        std::fill(best.begin() + p + 1, best.end(), kUnset);
      }
      used[v] = true;
      placed[p] = v;
      descend(p + 1);
      used[v] = false;
    }
  }
};

}  // namespace

Graph canonical_graph(const Graph& g) {
  const int n = g.order();
  if (n > kCanonicalMaxOrder)
    throw std::invalid_argument("canonical_form supports order <= " +
                                std::to_string(kCanonicalMaxOrder));
  if (n == 1) return g;
  MinSearch search(g);
  search.descend(0);
  std::vector<Edge> es;
  for (int p = 1; p < n; ++p)
    for (int q = 0; q < p; ++q)
      if ((search.best[p] >> (p - 1 - q)) & 1) es.emplace_back(q, p);
  return Graph::from_edges(n, es);
}

std::string canonical_form(const Graph& g) { return emit_graph6(canonical_graph(g)); }

}  // namespace mhc
