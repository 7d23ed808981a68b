#include "mhc/minimality.hpp"

#include <stdexcept>

namespace mhc {

std::string edge_reason_name(EdgeReason r) {
  switch (r) {
    case EdgeReason::DegreeDrop: return "DegreeDrop";
    case EdgeReason::ConnectivityDrop: return "ConnectivityDrop";
    case EdgeReason::DpRefuted: return "DpRefuted";
  }
  return "?";
}

MhcVerdict is_minimally_hc(const Graph& g, const MinimalityOptions& opts) {
  const int n = g.order();
  if (n < 4 || n > kSolverMaxOrder)
    throw std::invalid_argument("minimality decision needs 4 <= n <= " +
                                std::to_string(kSolverMaxOrder));
  SolverOptions solver{opts.solver_pruning};
  MhcVerdict verdict;
  verdict.is_hc = is_hamiltonian_connected(g, solver).is_hc;

  bool any_still_hc = false;
  for (auto [u, v] : g.edges()) {
    EdgeEvidence ev;
    ev.edge = {u, v};
    if (opts.degree_shortcut && (g.degree(u) == 3 || g.degree(v) == 3)) {
      ev.reason = EdgeReason::DegreeDrop;
      ev.still_hc = false;
      verdict.fast_path_used = true;
    } else {
      Graph reduced = g.remove_edge(u, v);
      if (opts.connectivity_shortcut &&
          vertex_connectivity_capped(reduced, 3) < 3) {
        ev.reason = EdgeReason::ConnectivityDrop;
        ev.still_hc = false;
        verdict.fast_path_used = true;
      } else {
        HcResult sub = is_hamiltonian_connected(reduced, solver);
        ev.reason = EdgeReason::DpRefuted;
        ev.still_hc = sub.is_hc;
        ev.refuting_pair = sub.failing_pair;
      }
    }
    any_still_hc = any_still_hc || ev.still_hc;
    verdict.edge_evidence.push_back(ev);
    if (ev.still_hc && !opts.exhaustive_evidence) break;
  }
  verdict.is_minimal = verdict.is_hc && !any_still_hc;
  return verdict;
}

namespace {

std::optional<bool> fast_argument_impl(const Graph& g, const LabeledGraph* lg) {
  if (g.order() < 4) return std::nullopt;
  if (!is_hamiltonian_connected(g).is_hc) return false;

  std::vector<Edge> exceptions;
  for (auto [u, v] : g.edges())
    if (g.degree(u) != 3 && g.degree(v) != 3) exceptions.push_back({u, v});
  if (exceptions.empty()) return true;

  if (lg && lg->family() == Family::CaseEven && exceptions.size() == 1) {
    Edge xz1{lg->vertex('x', -1), lg->vertex('z', 1)};
    Edge got = exceptions.front();
    bool is_xz1 = (got == xz1) || (got == Edge{xz1.second, xz1.first});
    if (is_xz1 &&
        vertex_connectivity_capped(g.remove_edge(got.first, got.second), 3) == 2)
      return true;
  }
  return std::nullopt;
}

}  // namespace

std::optional<bool> fast_minimality_argument(const LabeledGraph& lg) {
  return fast_argument_impl(lg.graph(), &lg);
}

std::optional<bool> fast_minimality_argument(const Graph& g) {
  return fast_argument_impl(g, nullptr);
}

}  // namespace mhc
