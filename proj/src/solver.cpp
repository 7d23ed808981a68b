#include "mhc/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mhc {

std::string prune_reason_name(PruneReason r) {
  return r == PruneReason::MinDegree ? "MinDegree" : "Connectivity";
}

bool verify_path(const Graph& g, const HamiltonPath& p) {
  const int n = g.order();
  if (static_cast<int>(p.vertices.size()) != n) return false;
  if (p.vertices.front() != p.u || p.vertices.back() != p.v) return false;
  std::uint64_t seen = 0;
  for (int v : p.vertices) {
    if (v < 0 || v >= n) return false;
    std::uint64_t bit = std::uint64_t{1} << v;
    if (seen & bit) return false;
    seen |= bit;
  }
  for (std::size_t t = 0; t + 1 < p.vertices.size(); ++t)
    if (!g.has_edge(p.vertices[t], p.vertices[t + 1])) return false;
  return true;
}

namespace {

void check_solver_bounds(const Graph& g, int u, int v) {
  if (g.order() > kSolverMaxOrder)
    throw std::invalid_argument("solver supports order <= " +
                                std::to_string(kSolverMaxOrder));
  if (u == v) throw std::invalid_argument("endpoints must differ");
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
    throw std::invalid_argument("endpoint out of range");
}

// reach[mask] = endpoint set of paths from u that visit exactly `mask`.
std::vector<std::uint32_t> sweep(const Graph& g, int u) {
  const int n = g.order();
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[v] = static_cast<std::uint32_t>(g.neighbors(v));
  const std::uint32_t full = static_cast<std::uint32_t>(g.full_mask());
  std::vector<std::uint32_t> reach(static_cast<std::size_t>(full) + 1, 0);
  reach[std::uint32_t{1} << u] = std::uint32_t{1} << u;
  for (std::uint32_t mask = std::uint32_t{1} << u; mask <= full; ++mask) {
    std::uint32_t ends = reach[mask];
    if (!ends) continue;
    while (ends) {
      int e = std::countr_zero(ends);
      ends &= ends - 1;
      std::uint32_t next = adj[e] & ~mask;
      while (next) {
        int b = std::countr_zero(next);
        next &= next - 1;
        reach[mask | (std::uint32_t{1} << b)] |= std::uint32_t{1} << b;
      }
    }
  }
  return reach;
}

}  // namespace

bool hamilton_path_exists(const Graph& g, int u, int v) {
  check_solver_bounds(g, u, v);
  auto reach = sweep(g, u);
  return (reach.back() >> v) & 1;
}

std::optional<HamiltonPath> find_hamilton_path(const Graph& g, int u, int v) {
  check_solver_bounds(g, u, v);
  const int n = g.order();
  auto reach = sweep(g, u);
  std::uint32_t full = static_cast<std::uint32_t>(g.full_mask());
  if (!((reach[full] >> v) & 1)) return std::nullopt;

  std::vector<int> rev{v};
  std::uint32_t mask = full;
  int cur = v;
  while (std::popcount(mask) > 1) {
    std::uint32_t prev_mask = mask ^ (std::uint32_t{1} << cur);
    std::uint32_t cands =
        reach[prev_mask] & static_cast<std::uint32_t>(g.neighbors(cur));
    cur = std::countr_zero(cands);  // lowest index for determinism
    rev.push_back(cur);
    mask = prev_mask;
  }
  std::reverse(rev.begin(), rev.end());
  HamiltonPath p{std::move(rev), u, v, std::nullopt, false};
  p.verified = verify_path(g, p);
  if (!p.verified) throw std::logic_error("DP reconstruction produced a non-path");
  return p;
}

HcResult is_hamiltonian_connected(const Graph& g, const SolverOptions& opts) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("hamiltonian connectivity needs order >= 2");
  if (n > kSolverMaxOrder)
    throw std::invalid_argument("solver supports order <= " +
                                std::to_string(kSolverMaxOrder));
  HcResult res;
  if (opts.structural_pruning && n >= 4) {
    if (degree_profile(g).min_degree < 3) {
      res.pruned_by = PruneReason::MinDegree;
      return res;
    }
    if (vertex_connectivity_capped(g, 3) < 3) {
      res.pruned_by = PruneReason::Connectivity;
      return res;
    }
  }
  for (int u = 0; u < n; ++u) {
    std::uint32_t endpoints = sweep(g, u).back();
    for (int v = u + 1; v < n; ++v) {
      if (!((endpoints >> v) & 1)) {
        res.failing_pair = {u, v};
        return res;
      }
      ++res.pairs_checked;
    }
  }
  res.is_hc = true;
  return res;
}

}  // namespace mhc
