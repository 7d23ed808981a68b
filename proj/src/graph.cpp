#include "mhc/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mhc {

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range for order " + std::to_string(n_));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 1 || n > kMaxOrder)
    throw std::invalid_argument("order must be in [1," +
                                std::to_string(kMaxOrder) + "]");
  Graph g(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    g.adj_[u] |= std::uint64_t{1} << v;
    g.adj_[v] |= std::uint64_t{1} << u;
  }
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::empty(int n) { return from_edges(n, {}); }

Graph Graph::complete(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return from_edges(n, es);
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs order >= 3");
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u) es.emplace_back(u, (u + 1) % n);
  return from_edges(n, es);
}

Graph Graph::path(int n) {
  std::vector<Edge> es;
  for (int u = 0; u + 1 < n; ++u) es.emplace_back(u, u + 1);
  return from_edges(n, es);
}

int Graph::size() const {
  int total = 0;
  for (auto row : adj_) total += std::popcount(row);
  return total / 2;
}

std::uint64_t Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1;
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

Graph Graph::add_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop edge");
  Graph g = *this;
  g.adj_[u] |= std::uint64_t{1} << v;
  g.adj_[v] |= std::uint64_t{1} << u;
  return g;
}

Graph Graph::remove_edge(int u, int v) const {
  if (!has_edge(u, v))
    throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ") not present");
  Graph g = *this;
  g.adj_[u] &= ~(std::uint64_t{1} << v);
  g.adj_[v] &= ~(std::uint64_t{1} << u);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> es;
  for (int u = 0; u < n_; ++u) {
    std::uint64_t higher = adj_[u] >> (u + 1);
    while (higher) {
      int v = u + 1 + std::countr_zero(higher);
      es.emplace_back(u, v);
      higher &= higher - 1;
    }
  }
  return es;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) p.degrees.push_back(g.degree(v));
  std::sort(p.degrees.begin(), p.degrees.end(), std::greater<>());
  p.max_degree = p.degrees.front();
  p.min_degree = p.degrees.back();
  return p;
}

bool is_connected_within(const Graph& g, std::uint64_t keep) {
  if (keep == 0) return true;
  std::uint64_t start = keep & (~keep + 1);
  std::uint64_t seen = start;
  std::uint64_t frontier = start;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.neighbors(v) & keep;
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == keep;
}

bool is_connected(const Graph& g) { return is_connected_within(g, g.full_mask()); }

namespace {

// Smallest cut size in [0, limit), or -1 if none exists below the limit.
int find_cut_below(const Graph& g, int limit) {
  const int n = g.order();
  const std::uint64_t full = g.full_mask();
  for (int k = 0; k < limit; ++k) {
    if (k > n - 2) break;
    if (k == 0) {
      if (!is_connected(g)) return 0;
      continue;
    }
    // Gosper's hack over all k-subsets of n bits.
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    const std::uint64_t end = std::uint64_t{1} << n;
    while (s < end) {
      if (!is_connected_within(g, full & ~s)) return k;
      std::uint64_t c = s & (~s + 1);
      std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return -1;
}

}  // namespace

int vertex_connectivity_capped(const Graph& g, int cap) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("connectivity needs order >= 2");
  int best = std::min(cap, n - 1);
  int cut = find_cut_below(g, best);
  return cut >= 0 ? cut : best;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("connectivity needs order >= 2");
  if (n > 12) {
    // kappa <= delta, so enumeration never looks past delta-sized subsets.
    int delta = degree_profile(g).min_degree;
    double work = 0, binom = 1;
    for (int t = 1; t <= std::min(delta, n - 2); ++t) {
      binom = binom * (n - t + 1) / t;
      work += binom;
    }
    if (work > 4e6)
      throw std::invalid_argument(
          "vertex_connectivity: exact cut enumeration too large at order " +
          std::to_string(n) + " with min degree " + std::to_string(delta));
  }
  int cut = find_cut_below(g, n - 1);
  return cut >= 0 ? cut : n - 1;
}

}  // namespace mhc
