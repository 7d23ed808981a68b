#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mhc/graph.hpp"

namespace mhc {

enum class Family { Wheel, CaseOdd, CaseEven };

std::string family_name(Family f);

// Vertex role inside a construction: kind is one of 'h' (hub), 'x', 'y',
// 'z', 'w'. index < 0 means the bare symbol (the single x of CaseEven).
struct Role {
  char kind = '?';
  int index = -1;
  std::string name() const;
  bool operator==(const Role&) const = default;
};

struct Params {
  int n = 0;
  int delta = 0;
  int k = 0;
  int s = 0;
};

// A Graph plus the construction's role labels.
//
// Canonical vertex numbering:
//   CaseOdd : x_1..x_k, y_1..y_s, z_1..z_{s+1}           as indices 0..n-1
//   CaseEven: x, y_1..y_k, z_0..z_s, w_1..w_{s+1}        as indices 0..n-1
//   Wheel   : hub, rim cycle r_1..r_{n-1} labeled w_1..w_{n-1}
class LabeledGraph {
 public:
  LabeledGraph(Graph g, Family family, Params params, std::vector<Role> roles);

  const Graph& graph() const { return graph_; }
  Family family() const { return family_; }
  const Params& params() const { return params_; }
  const std::vector<Role>& roles() const { return roles_; }
  const Role& role(int v) const { return roles_.at(static_cast<std::size_t>(v)); }

  // Vertex carrying the given role; throws if absent.
  int vertex(char kind, int index) const;
  int find_vertex(const std::string& role_name) const;  // -1 if absent

  // Same labels over the graph with one edge removed.
  LabeledGraph drop_edge(int u, int v) const;

 private:
  Graph graph_;
  Family family_;
  Params params_;
  std::vector<Role> roles_;
};

enum class ValidityReason {
  Ok,
  DeltaTooSmall,
  DeltaTooLarge,
  DeltaEqualsNMinus2,
  CubicOddOrder,
};

std::string validity_reason_name(ValidityReason r);

struct ValidityVerdict {
  bool valid = false;
  ValidityReason reason = ValidityReason::Ok;
};

// Parameter check: valid iff 3 <= delta <= n-1, delta != n-2, and delta = 3
// only for even n. Throws for n < 4.
ValidityVerdict validity(int n, int delta);

LabeledGraph build_wheel(int n);

// The family for n-delta odd: max degree at y_1, all other degrees 3.
LabeledGraph build_case_odd(int n, int delta);

// The family for n-delta even: max degree at x, degree 4 at z_1, 3 elsewhere.
LabeledGraph build_case_even(int n, int delta);

// Dispatch on (n, delta): wheel when delta = n-1, otherwise by parity of
// n-delta. Throws for invalid parameters, carrying the ValidityReason name.
LabeledGraph construct(int n, int delta);

struct InvalidParameters : std::invalid_argument {
  InvalidParameters(ValidityReason r, const std::string& msg)
      : std::invalid_argument(msg), reason(r) {}
  ValidityReason reason;
};

// DOT text with role labels as vertex names.
std::string emit_dot(const LabeledGraph& lg);

// All valid (n, delta) pairs for 4 <= n <= max_n, lexicographic.
std::vector<std::pair<int, int>> valid_parameter_pairs(int max_n);

}  // namespace mhc
