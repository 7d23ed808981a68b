#include "mhc/constructions.hpp"

#include <sstream>
#include <stdexcept>

namespace mhc {

std::string family_name(Family f) {
  switch (f) {
    case Family::Wheel: return "wheel";
    case Family::CaseOdd: return "odd";
    case Family::CaseEven: return "even";
  }
  return "?";
}

std::string Role::name() const {
  if (kind == 'h') return "hub";
  if (index < 0) return std::string(1, kind);
  return std::string(1, kind) + std::to_string(index);
}

LabeledGraph::LabeledGraph(Graph g, Family family, Params params,
                           std::vector<Role> roles)
    : graph_(std::move(g)), family_(family), params_(params), roles_(std::move(roles)) {
  if (static_cast<int>(roles_.size()) != graph_.order())
    throw std::invalid_argument("role map must cover every vertex");
}

int LabeledGraph::vertex(char kind, int index) const {
  for (int v = 0; v < graph_.order(); ++v)
    if (roles_[v].kind == kind && roles_[v].index == index) return v;
  throw std::invalid_argument(std::string("no vertex with role ") + kind +
                              std::to_string(index));
}

int LabeledGraph::find_vertex(const std::string& role_name) const {
  for (int v = 0; v < graph_.order(); ++v)
    if (roles_[v].name() == role_name) return v;
  return -1;
}

LabeledGraph LabeledGraph::drop_edge(int u, int v) const {
  return LabeledGraph(graph_.remove_edge(u, v), family_, params_, roles_);
}

std::string validity_reason_name(ValidityReason r) {
  switch (r) {
    case ValidityReason::Ok: return "OK";
    case ValidityReason::DeltaTooSmall: return "DeltaTooSmall";
    case ValidityReason::DeltaTooLarge: return "DeltaTooLarge";
    case ValidityReason::DeltaEqualsNMinus2: return "DeltaEqualsNMinus2";
    case ValidityReason::CubicOddOrder: return "CubicOddOrder";
  }
  return "?";
}

ValidityVerdict validity(int n, int delta) {
  if (n < 4) throw std::invalid_argument("validity requires n >= 4");
  if (delta < 3) return {false, ValidityReason::DeltaTooSmall};
  if (delta > n - 1) return {false, ValidityReason::DeltaTooLarge};
  if (delta == n - 2) return {false, ValidityReason::DeltaEqualsNMinus2};
  if (delta == 3 && n % 2 != 0) return {false, ValidityReason::CubicOddOrder};
  return {true, ValidityReason::Ok};
}

namespace {

void require_valid(int n, int delta) {
  auto v = validity(n, delta);
  if (!v.valid)
    throw InvalidParameters(v.reason, "invalid parameters (n=" + std::to_string(n) +
                                          ", delta=" + std::to_string(delta) +
                                          "): " + validity_reason_name(v.reason));
}

}  // namespace

LabeledGraph build_wheel(int n) {
  if (n < 4) throw std::invalid_argument("wheel requires n >= 4");
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) {
    es.emplace_back(0, v);
    es.emplace_back(v, v == n - 1 ? 1 : v + 1);
  }
  std::vector<Role> roles{{'h', -1}};
  for (int i = 1; i < n; ++i) roles.push_back({'w', i});
  return LabeledGraph(Graph::from_edges(n, es), Family::Wheel,
                      {n, n - 1, 0, 0}, std::move(roles));
}

LabeledGraph build_case_odd(int n, int delta) {
  require_valid(n, delta);
  if (delta > n - 3)
    throw std::invalid_argument("odd-case family requires delta <= n-3");
  if ((n - delta) % 2 == 0)
    throw std::invalid_argument("odd-case family requires n-delta odd");
  const int k = delta - 2;
  const int s = (n - delta + 1) / 2;
  // k >= 1 and s >= 2 follow from 3 <= delta <= n-3 with n-delta odd.
  auto x = [&](int i) { return i - 1; };
  auto y = [&](int i) { return k + i - 1; };
  auto z = [&](int i) { return k + s + i - 1; };

  std::vector<Edge> es;
  for (int i = 1; i < k; ++i) es.emplace_back(x(i), x(i + 1));
  for (int i = 1; i < s; ++i) es.emplace_back(y(i), y(i + 1));
  for (int i = 1; i <= s; ++i) es.emplace_back(z(i), z(i + 1));
  for (int i = 1; i <= k; ++i) es.emplace_back(y(1), x(i));
  for (int i = 1; i <= s; ++i) es.emplace_back(y(i), z(i));
  es.emplace_back(x(1), z(1));
  es.emplace_back(x(k), z(s + 1));
  es.emplace_back(y(s), z(s + 1));

  std::vector<Role> roles;
  for (int i = 1; i <= k; ++i) roles.push_back({'x', i});
  for (int i = 1; i <= s; ++i) roles.push_back({'y', i});
  for (int i = 1; i <= s + 1; ++i) roles.push_back({'z', i});
  return LabeledGraph(Graph::from_edges(n, es), Family::CaseOdd,
                      {n, delta, k, s}, std::move(roles));
}

LabeledGraph build_case_even(int n, int delta) {
  require_valid(n, delta);
  if (delta < 4)
    throw std::invalid_argument("even-case family requires delta >= 4");
  if (delta > n - 3)
    throw std::invalid_argument("even-case family requires delta <= n-3");
  if ((n - delta) % 2 != 0)
    throw std::invalid_argument("even-case family requires n-delta even");
  const int k = delta - 1;
  const int s = (n - delta - 2) / 2;
  // k >= 3 and s >= 1 follow from the parity and range preconditions.
  const int xv = 0;
  auto y = [&](int i) { return i; };
  auto z = [&](int i) { return k + 1 + i; };
  auto w = [&](int i) { return k + s + 1 + i; };

  std::vector<Edge> es;
  for (int i = 1; i < k; ++i) es.emplace_back(y(i), y(i + 1));
  for (int i = 0; i < s; ++i) es.emplace_back(z(i), z(i + 1));
  for (int i = 1; i <= s; ++i) es.emplace_back(w(i), w(i + 1));
  for (int i = 1; i <= k; ++i) es.emplace_back(xv, y(i));
  for (int i = 1; i <= s; ++i) es.emplace_back(z(i), w(i));
  es.emplace_back(xv, z(1));
  es.emplace_back(y(1), z(0));
  es.emplace_back(z(0), w(1));
  es.emplace_back(y(k), w(s + 1));
  es.emplace_back(z(s), w(s + 1));

  std::vector<Role> roles{{'x', -1}};
  for (int i = 1; i <= k; ++i) roles.push_back({'y', i});
  for (int i = 0; i <= s; ++i) roles.push_back({'z', i});
  for (int i = 1; i <= s + 1; ++i) roles.push_back({'w', i});
  return LabeledGraph(Graph::from_edges(n, es), Family::CaseEven,
                      {n, delta, k, s}, std::move(roles));
}

LabeledGraph construct(int n, int delta) {
  require_valid(n, delta);
  if (delta == n - 1) return build_wheel(n);
  if ((n - delta) % 2 != 0) return build_case_odd(n, delta);
  return build_case_even(n, delta);
}

std::string emit_dot(const LabeledGraph& lg) {
  std::ostringstream out;
  const auto& p = lg.params();
  out << "graph \"" << family_name(lg.family()) << "_" << p.n;
  if (lg.family() != Family::Wheel) out << "_" << p.delta;
  out << "\" {\n";
  for (int v = 0; v < lg.graph().order(); ++v)
    out << "  " << lg.role(v).name() << ";\n";
  for (auto [u, v] : lg.graph().edges())
    out << "  " << lg.role(u).name() << " -- " << lg.role(v).name() << ";\n";
  out << "}\n";
  return out.str();
}

std::vector<std::pair<int, int>> valid_parameter_pairs(int max_n) {
  std::vector<std::pair<int, int>> out;
  for (int n = 4; n <= max_n; ++n)
    for (int d = 3; d <= n - 1; ++d)
      if (validity(n, d).valid) out.emplace_back(n, d);
  return out;
}

}  // namespace mhc
