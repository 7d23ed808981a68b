#include "oracles.hpp"

namespace oracles {

namespace {

// Same sentinel-based branch-and-bound idea as the library canonicalizer,
// but over degree groups only, with string rows; every comparison runs
// against the current incumbent.
struct RefSearch {
  const mhc::Graph& g;
  int n;
  std::vector<std::vector<int>> groups;  // vertices by degree, ascending
  std::vector<int> group_of_pos;
  std::vector<int> placed;
  std::vector<bool> used;
  std::vector<std::string> best;  // best[p] = row of position p, "~" = unset

  explicit RefSearch(const mhc::Graph& graph) : g(graph), n(graph.order()) {
    std::vector<std::pair<int, int>> by_degree;
    for (int v = 0; v < n; ++v) by_degree.emplace_back(g.degree(v), v);
    std::sort(by_degree.begin(), by_degree.end());
    int last_degree = -1;
    for (auto [d, v] : by_degree) {
      if (d != last_degree) {
        groups.emplace_back();
        last_degree = d;
      }
      groups.back().push_back(v);
    }
    for (std::size_t gi = 0; gi < groups.size(); ++gi)
      for (std::size_t t = 0; t < groups[gi].size(); ++t)
        group_of_pos.push_back(static_cast<int>(gi));
    placed.assign(n, -1);
    used.assign(n, false);
    best.assign(n, "~");  // '~' sorts above '0'/'1'
  }

  void descend(int p) {
    if (p == n) return;
    for (int v : groups[group_of_pos[p]]) {
      if (used[v]) continue;
      std::string row(static_cast<std::size_t>(p), '0');
      for (int q = 0; q < p; ++q)
        if (g.has_edge(placed[q], v)) row[static_cast<std::size_t>(q)] = '1';
      if (row > best[p]) continue;
      if (row < best[p]) {
        best[p] = row;
        std::fill(best.begin() + p + 1, best.end(), "~");
      }
      used[v] = true;
      placed[p] = v;
      descend(p + 1);
      used[v] = false;
    }
  }
};

}  // namespace

std::string reference_canonical_form(const mhc::Graph& g) {
  RefSearch search(g);
  search.descend(0);
  std::string out = std::to_string(g.order()) + "|";
  for (const auto& row : search.best) out += row + "/";
  return out;
}

}  // namespace oracles
