#pragma once

#include <string>
#include <vector>

#include "mhc/constructions.hpp"
#include "mhc/hamilton_path.hpp"

namespace mhc {

// Case selection for a vertex pair: the case id plus the orientation the
// case imposes on the pair (the emitted path runs from `from` to `to`).
struct DispatchResult {
  CaseId id;
  int from = -1;
  int to = -1;
};

// Picks the unique case whose role/index guard matches the unordered pair
// {u, v}. Only CaseOdd/CaseEven graphs have dispatch tables.
DispatchResult dispatch(const LabeledGraph& lg, int u, int v);

// The case template's explicitly named vertices for this pair, in template
// order, after the degenerate-range conventions are applied. The emitted
// path contains this list as a subsequence.
std::vector<int> case_anchors(const LabeledGraph& lg, const DispatchResult& d);

// Expands the case template into a concrete Hamilton path: anchors appear
// in template order, every other vertex is woven in by a deterministic
// search over the graph's edges, and the result is verified. Throws if the
// expansion cannot complete (a transcription bug, never swallowed).
HamiltonPath emit_path(const LabeledGraph& lg, const DispatchResult& d);
HamiltonPath emit_path(const LabeledGraph& lg, int u, int v);

struct PairReport {
  int u = -1;
  int v = -1;
  CaseId case_id;
  bool verified = false;
  bool anchors_in_order = false;
};

struct FormulaReport {
  Family family = Family::CaseOdd;
  int n = 0;
  int delta = 0;
  std::vector<PairReport> pairs;
  long verified_count = 0;
  bool all_verified = false;
};

// Dispatch + emit + verify for all C(n,2) pairs; failures are data, not
// exceptions.
FormulaReport verify_all_pairs(const LabeledGraph& lg);

}  // namespace mhc
