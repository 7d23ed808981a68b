#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mhc {

// Hard cap so adjacency rows and solver subset masks fit one machine word.
inline constexpr int kMaxOrder = 64;

using Edge = std::pair<int, int>;

// Immutable simple graph on vertices 0..n-1, adjacency as per-vertex bit masks.
// All operations are pure; "mutators" return a fresh value.
class Graph {
 public:
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges);
  static Graph empty(int n);
  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);

  int order() const { return n_; }
  int size() const;

  std::uint64_t neighbors(int v) const;
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  std::uint64_t full_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  Graph add_edge(int u, int v) const;
  Graph remove_edge(int u, int v) const;  // throws if (u,v) is not an edge

  // Edges as (u,v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {}
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

struct DegreeProfile {
  std::vector<int> degrees;  // non-increasing
  int min_degree = 0;
  int max_degree = 0;
};

DegreeProfile degree_profile(const Graph& g);

bool is_connected(const Graph& g);

// True iff the vertices of `keep` induce a connected subgraph. Empty -> true.
bool is_connected_within(const Graph& g, std::uint64_t keep);

// Exact vertex connectivity: the minimum number of vertices whose deletion
// disconnects g or reduces it to one vertex; kappa(K_n) = n-1.
// Cut enumeration runs by increasing size; since kappa <= delta the work is
// bounded by sum_{t<=delta} C(n,t), which is checked against a fixed budget
// up front and rejected if too large (n <= 12 is always accepted).
int vertex_connectivity(const Graph& g);

// min(kappa(g), cap); enumerates only cuts smaller than cap, so it stays
// polynomial for fixed cap and works for any order up to kMaxOrder.
int vertex_connectivity_capped(const Graph& g, int cap);

}  // namespace mhc
