#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mhc/constructions.hpp"
#include "mhc/graph.hpp"
#include "mhc/solver.hpp"

namespace mhc {

// How an edge deletion was refuted. DegreeDrop and ConnectivityDrop are
// sound without a DP run for order >= 4: the deleted edge leaves a vertex
// of degree 2, or drops the connectivity below 3, and hamiltonian-connected
// graphs of order >= 4 are 3-connected with min degree >= 3.
enum class EdgeReason { DegreeDrop, ConnectivityDrop, DpRefuted };
std::string edge_reason_name(EdgeReason r);

struct EdgeEvidence {
  Edge edge;
  EdgeReason reason = EdgeReason::DpRefuted;
  bool still_hc = false;
  std::optional<std::pair<int, int>> refuting_pair;  // set for DP refutations
};

struct MhcVerdict {
  bool is_hc = false;
  bool is_minimal = false;
  std::vector<EdgeEvidence> edge_evidence;  // lexicographic edge order
  bool fast_path_used = false;              // any structural per-edge reason fired
};

struct MinimalityOptions {
  bool degree_shortcut = true;
  bool connectivity_shortcut = true;
  // When false, stop scanning edges at the first deletion that stays HC
  // (the verdict is already decided); evidence then covers a prefix.
  bool exhaustive_evidence = true;
  // Solver pruning passed through to the per-edge HC checks.
  bool solver_pruning = true;
};

// Full minimality decision: HC, plus for every edge e whether G-e is still
// hamiltonian-connected, with per-edge reasons.
MhcVerdict is_minimally_hc(const Graph& g, const MinimalityOptions& opts = {});

// The structural minimality argument: returns true when the graph is HC and
// every edge either has a degree-3 endpoint, or is the even-family's x-z_1
// edge whose removal drops the connectivity to 2. Returns false when the
// graph is not HC at all, and nullopt when the argument's hypotheses fail.
std::optional<bool> fast_minimality_argument(const LabeledGraph& lg);
std::optional<bool> fast_minimality_argument(const Graph& g);

}  // namespace mhc
