#pragma once

#include <optional>
#include <utility>

#include "mhc/graph.hpp"
#include "mhc/hamilton_path.hpp"

namespace mhc {

// Subset-DP bitmask bound: the (visited set, endpoint) table must fit.
inline constexpr int kSolverMaxOrder = 24;

enum class PruneReason { MinDegree, Connectivity };
std::string prune_reason_name(PruneReason r);

struct HcResult {
  bool is_hc = false;
  long pairs_checked = 0;
  std::optional<std::pair<int, int>> failing_pair;
  std::optional<PruneReason> pruned_by;
};

struct SolverOptions {
  // Refuse before any DP run when order >= 4 and min degree < 3 or
  // connectivity < 3 (hamiltonian-connected graphs of order >= 4 are
  // 3-connected).
  bool structural_pruning = true;
};

// Exact fixed-endpoint Hamilton path existence via DP over
// (visited-set, endpoint) states seeded at u.
bool hamilton_path_exists(const Graph& g, int u, int v);

// Certificate extraction by parent reconstruction from the DP table.
std::optional<HamiltonPath> find_hamilton_path(const Graph& g, int u, int v);

// Decides all C(n,2) pairs with one DP sweep per source vertex. The failing
// pair, if any, is the lexicographically first.
HcResult is_hamiltonian_connected(const Graph& g, const SolverOptions& opts = {});

}  // namespace mhc
