#include "mhc/formulas.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace mhc {

namespace {

// Affine index expression over the pair indices (i, j) and the family
// parameters (k, s).
struct Expr {
  int ci = 0, cj = 0, ck = 0, cs = 0, c = 0;
  int eval(int i, int j, int k, int s) const {
    return ci * i + cj * j + ck * k + cs * s + c;
  }
  friend Expr operator+(Expr e, int d) { e.c += d; return e; }
  friend Expr operator-(Expr e, int d) { e.c -= d; return e; }
};

constexpr Expr I{1, 0, 0, 0, 0};
constexpr Expr J{0, 1, 0, 0, 0};
constexpr Expr K{0, 0, 1, 0, 0};
constexpr Expr S{0, 0, 0, 1, 0};
constexpr Expr C0{0, 0, 0, 0, 0};
constexpr Expr C1{0, 0, 0, 0, 1};
constexpr Expr C2{0, 0, 0, 0, 2};

// Segment of a path template: a single symbol, or a monotone index run
// "a_from, ..., a_to" along one role family.
struct Seg {
  bool is_run = false;
  char fam = '?';
  Expr a;
  Expr b;
  int dir = 0;
};

Seg sym(char fam, Expr e) { return {false, fam, e, {}, 0}; }
Seg run(char fam, Expr from, Expr to, int dir) { return {true, fam, from, to, dir}; }

using Guard = bool (*)(int i, int j, int k, int s);

struct CaseDef {
  int number;
  char fam_u, fam_v;
  Guard guard;
  std::vector<Seg> segs;
};

// Case tables transcribed template-by-template. Degenerate ranges resolve
// through the evaluation rules in eval_anchors: runs that are empty by
// direction vanish, out-of-range symbols drop, and a symbol naming an
// already-placed vertex drops.
const std::vector<CaseDef>& odd_cases() {
  static const std::vector<CaseDef> cases = {
      // 1.1 (x_i, x_j), i < j
      {1, 'x', 'x', [](int i, int j, int, int) { return i < j; },
       {run('x', I, J - 1, +1), sym('y', C1), run('x', I - 1, C1, -1),
        sym('z', C1), sym('z', C2), sym('y', C2), sym('z', S + 1),
        run('x', K, J, -1)}},
      // 1.2 (x_i, y_j)
      {2, 'x', 'y', [](int, int, int, int) { return true; },
       {run('x', I, K, +1), sym('z', S + 1), sym('y', J + 1),
        run('z', J + 1, C1, -1), run('x', C1, I - 1, +1), run('y', C1, J, +1)}},
      // 1.3 (x_i, z_j), j <= s
      {3, 'x', 'z', [](int, int j, int, int s) { return j <= s; },
       {run('x', I, K, +1), run('z', S + 1, J + 1, -1), sym('y', J + 1),
        run('y', J, C1, -1), run('x', I - 1, C1, -1), run('z', C1, J, +1)}},
      // 1.4 (x_i, z_{s+1})
      {4, 'x', 'z', [](int, int j, int, int s) { return j == s + 1; },
       {run('x', I, K, +1), sym('y', C1), run('x', I - 1, C1, -1),
        sym('z', C1), run('z', C2, S + 1, +1)}},
      // 1.5 (y_i, y_j), i < j
      {5, 'y', 'y', [](int i, int j, int, int) { return i < j; },
       {run('y', I, J - 1, +1), run('z', J - 1, I, -1), sym('z', I - 1),
        sym('x', C1), run('x', C2, K, +1), run('z', S + 1, J, -1),
        sym('y', J)}},
      // 1.6 (y_i, z_j), i < j
      {6, 'y', 'z', [](int i, int j, int, int) { return i < j; },
       {run('y', I, J - 1, +1), run('z', J - 1, I, -1), sym('z', I - 1),
        sym('x', C1), run('x', C2, K, +1), sym('z', S + 1), sym('y', J),
        sym('z', J)}},
      // 1.7 (y_i, z_j), j <= i
      {7, 'y', 'z', [](int i, int j, int, int) { return j <= i; },
       {run('y', I, J - 1, -1), sym('z', J - 1), sym('x', C1),
        run('x', C2, K, +1), sym('z', S + 1), sym('y', I + 1),
        run('z', I + 1, J, -1)}},
      // 1.8 (z_i, z_j), i < j
      {8, 'z', 'z', [](int i, int j, int, int) { return i < j; },
       {run('z', I, J - 1, +1), run('y', J - 1, I - 1, -1), sym('z', I - 1),
        sym('x', C1), run('x', C2, K, +1), run('z', S + 1, J, -1)}},
  };
  return cases;
}

const std::vector<CaseDef>& even_cases() {
  static const std::vector<CaseDef> cases = {
      // 2.1 (y_1, y_j), 2 <= j
      {1, 'y', 'y', [](int i, int j, int, int) { return i == 1 && j >= 2; },
       {run('y', C1, J - 1, +1), sym('x', C0), sym('z', C1), sym('z', C0),
        run('w', C1, S + 1, +1), run('y', K, J, -1)}},
      // 2.2 (y_i, y_j), 2 <= i < j
      {2, 'y', 'y', [](int i, int j, int, int) { return i >= 2 && i < j; },
       {run('y', I, J - 1, +1), sym('x', C0), run('y', I - 1, C1, -1),
        sym('z', C0), sym('w', S + 1), run('y', K, J, -1)}},
      // 2.3 (y_1, x)
      {3, 'y', 'x', [](int i, int, int, int) { return i == 1; },
       {sym('y', C1), sym('z', C0), sym('w', S + 1), run('y', K, C2, -1),
        sym('x', C0)}},
      // 2.4 (y_i, x), 2 <= i
      {4, 'y', 'x', [](int i, int, int, int) { return i >= 2; },
       {run('y', I, K, +1), sym('w', S + 1), sym('z', C0),
        run('y', C1, I - 1, +1), sym('x', C0)}},
      // 2.5 (y_i, z_j), i <= k-1
      {5, 'y', 'z', [](int i, int, int k, int) { return i <= k - 1; },
       {run('y', I, C1, -1), sym('x', C0), run('y', I + 1, K, +1),
        sym('w', S + 1), sym('z', J + 1), sym('w', J + 1),
        run('w', J, C1, -1), run('z', C0, J, +1)}},
      // 2.6 (y_k, z_0)
      {6, 'y', 'z', [](int i, int j, int k, int) { return i == k && j == 0; },
       {run('y', K, C1, -1), sym('x', C0), run('z', C1, S, +1),
        run('w', S + 1, C1, -1), sym('z', C0)}},
      // 2.7 (y_k, z_j), 1 <= j
      {7, 'y', 'z', [](int i, int j, int k, int) { return i == k && j >= 1; },
       {run('y', K, C2, -1), sym('x', C0), sym('y', C1), run('z', C0, J - 1, +1),
        sym('w', J - 1), run('w', J, S + 1, +1), run('z', S, J, -1)}},
      // 2.8 (y_1, w_j); at j = 1 the middle string collapses to the lone z_1
      {8, 'y', 'w', [](int i, int, int, int) { return i == 1; },
       {sym('y', C1), sym('z', C0), run('w', C1, J - 1, +1),
        run('z', J - 1, C1, -1), sym('x', C0), run('y', C2, K, +1),
        sym('w', S + 1), sym('w', J)}},
      // 2.9 (y_i, w_j), 2 <= i
      {9, 'y', 'w', [](int i, int, int, int) { return i >= 2; },
       {run('y', I, K, +1), sym('x', C0), run('y', I - 1, C1, -1),
        sym('z', C0), sym('w', J - 1), sym('z', J - 1), run('z', J, S, +1),
        sym('w', S + 1), sym('w', J)}},
      // 2.10 (x, z_j)
      {10, 'x', 'z', [](int, int, int, int) { return true; },
       {sym('x', C0), run('y', C1, K, +1), sym('w', S + 1), sym('z', J + 1),
        sym('w', J + 1), run('w', J, C1, -1), run('z', C0, J, +1)}},
      // 2.11 (x, w_j)
      {11, 'x', 'w', [](int, int, int, int) { return true; },
       {sym('x', C0), run('y', K, C1, -1), sym('z', C0), sym('w', J - 1),
        sym('z', J - 1), run('z', J, S, +1), sym('w', S + 1), sym('w', J)}},
      // 2.12 (z_i, z_j), 0 <= i < j
      {12, 'z', 'z', [](int i, int j, int, int) { return i < j; },
       {sym('z', I), sym('w', I), run('w', I - 1, C1, -1), sym('z', C0),
        sym('y', C1), sym('x', C0), run('y', C2, K, +1), sym('w', S + 1),
        sym('z', J + 1), sym('w', J + 1), run('w', J, I + 1, -1),
        run('z', I + 1, J, +1)}},
      // 2.13 (z_0, w_j); at j = 1 the middle string collapses to the lone z_1
      {13, 'z', 'w', [](int i, int, int, int) { return i == 0; },
       {sym('z', C0), run('w', C1, J - 1, +1), run('z', J - 1, C1, -1),
        sym('x', C0), run('y', C1, K, +1), sym('w', S + 1), sym('w', J)}},
      // 2.14 (z_i, w_j), 1 <= i < j
      {14, 'z', 'w', [](int i, int j, int, int) { return i >= 1 && i < j; },
       {run('z', I, J - 1, +1), run('w', J - 1, I, -1), sym('w', I - 1),
        sym('z', C0), sym('y', C1), sym('x', C0), run('y', C2, K, +1),
        sym('w', S + 1), sym('z', J), sym('w', J)}},
      // 2.15 (z_i, w_j), 1 <= j <= i
      {15, 'z', 'w', [](int i, int j, int, int) { return j >= 1 && j <= i; },
       {run('z', I, J - 1, -1), sym('w', J - 1), sym('z', C0), sym('y', C1),
        sym('x', C0), run('y', C2, K, +1), sym('w', S + 1), sym('z', I + 1),
        sym('w', I + 1), run('w', I, J, -1)}},
      // 2.16 (w_i, w_j), i < j
      {16, 'w', 'w', [](int i, int j, int, int) { return i < j; },
       {run('w', I, J - 1, +1), run('z', J - 1, I, -1), sym('z', I - 1),
        sym('w', I - 1), sym('z', C0), sym('y', C1), sym('x', C0),
        run('y', C2, K, +1), sym('w', S + 1), sym('z', J), sym('w', J)}},
  };
  return cases;
}

struct FamilyRange {
  int lo, hi;
};

// Valid index range per role family, or {0,-1} for families absent.
FamilyRange family_range(const LabeledGraph& lg, char fam) {
  const auto& p = lg.params();
  if (lg.family() == Family::CaseOdd) {
    switch (fam) {
      case 'x': return {1, p.k};
      case 'y': return {1, p.s};
      case 'z': return {1, p.s + 1};
    }
  } else {
    switch (fam) {
      case 'x': return {0, 0};  // the lone x, index slot unused
      case 'y': return {1, p.k};
      case 'z': return {0, p.s};
      case 'w': return {1, p.s + 1};
    }
  }
  return {0, -1};
}

int role_vertex(const LabeledGraph& lg, char fam, int idx) {
  if (lg.family() == Family::CaseEven && fam == 'x') return lg.vertex('x', -1);
  return lg.vertex(fam, idx);
}

const std::vector<CaseDef>& table_for(Family f) {
  if (f == Family::CaseOdd) return odd_cases();
  if (f == Family::CaseEven) return even_cases();
  throw std::invalid_argument("no dispatch table for family " + family_name(f));
}

// Role index of a vertex as the guards see it (x of CaseEven reads as 0).
int guard_index(const LabeledGraph& lg, int v) {
  const Role& r = lg.role(v);
  return r.index < 0 ? 0 : r.index;
}

// Evaluation rules for a template:
//  - a run that is empty by direction vanishes (the "does not appear"
//    conventions for i = 1 all reduce to this);
//  - indices outside the family's range never materialize: a lone symbol
//    drops, a run clips them off its head or tail;
//  - a symbol (or run head) naming an already-placed vertex drops, which
//    resolves templates whose tail revisits an explicit vertex;
//  - a duplicate in a run's interior is a transcription bug and throws.
std::vector<int> eval_anchors(const LabeledGraph& lg, const CaseDef& def,
                              int i, int j) {
  const auto& p = lg.params();
  std::vector<int> anchors;
  std::uint64_t placed = 0;
  for (const Seg& seg : def.segs) {
    const auto range = family_range(lg, seg.fam);
    if (!seg.is_run) {
      int idx = seg.a.eval(i, j, p.k, p.s);
      if (idx < range.lo || idx > range.hi) continue;
      int v = role_vertex(lg, seg.fam, idx);
      if ((placed >> v) & 1) continue;
      anchors.push_back(v);
      placed |= std::uint64_t{1} << v;
      continue;
    }
    int from = seg.a.eval(i, j, p.k, p.s);
    int to = seg.b.eval(i, j, p.k, p.s);
    if (seg.dir > 0 ? from > to : from < to) continue;  // empty by direction
    bool emitted_any = false;
    for (int idx = from; seg.dir > 0 ? idx <= to : idx >= to; idx += seg.dir) {
      if (idx < range.lo || idx > range.hi) {
        if (emitted_any) break;
        continue;
      }
      int v = role_vertex(lg, seg.fam, idx);
      if ((placed >> v) & 1) {
        if (emitted_any)
          throw std::logic_error("case " + std::to_string(def.number) +
                                 ": duplicate interior vertex in template");
        continue;
      }
      anchors.push_back(v);
      placed |= std::uint64_t{1} << v;
      emitted_any = true;
    }
  }
  return anchors;
}

// Deterministic DFS for a Hamilton path that visits the anchors in order;
// non-anchor vertices may be woven in wherever edges allow.
struct WeaveSearch {
  const Graph& g;
  const std::vector<int>& anchors;
  std::vector<int> rank;  // anchor order per vertex, -1 for fillers
  std::vector<int> path;
  std::uint64_t visited = 0;
  long steps = 0;
  static constexpr long kStepCap = 4'000'000;

  WeaveSearch(const Graph& graph, const std::vector<int>& a)
      : g(graph), anchors(a), rank(graph.order(), -1) {
    for (std::size_t t = 0; t < a.size(); ++t) rank[a[t]] = static_cast<int>(t);
  }

  bool extend(int cur, int next_rank) {
    if (++steps > kStepCap)
      throw std::logic_error("template expansion exceeded its step budget");
    if (path.size() == static_cast<std::size_t>(g.order()))
      return cur == anchors.back();
    std::uint64_t nbrs = g.neighbors(cur) & ~visited;
    while (nbrs) {
      int w = std::countr_zero(nbrs);
      nbrs &= nbrs - 1;
      if (rank[w] >= 0) {
        if (rank[w] != next_rank) continue;
        // The final anchor is the path's endpoint: it must come last.
        if (next_rank + 1 == static_cast<int>(anchors.size()) &&
            path.size() + 1 != static_cast<std::size_t>(g.order()))
          continue;
      }
      visited |= std::uint64_t{1} << w;
      path.push_back(w);
      if (extend(w, rank[w] >= 0 ? next_rank + 1 : next_rank)) return true;
      path.pop_back();
      visited &= ~(std::uint64_t{1} << w);
    }
    return false;
  }

  std::vector<int> find() {
    int start = anchors.front();
    visited = std::uint64_t{1} << start;
    path = {start};
    if (!extend(start, 1)) return {};
    return path;
  }
};

bool anchors_in_order(const std::vector<int>& path, const std::vector<int>& anchors) {
  std::size_t t = 0;
  for (int v : path)
    if (t < anchors.size() && v == anchors[t]) ++t;
  return t == anchors.size();
}

const CaseDef& case_def(const LabeledGraph& lg, const CaseId& id) {
  for (const auto& def : table_for(id.family))
    if (def.number == id.number) return def;
  throw std::invalid_argument("unknown case " + id.label());
}

}  // namespace

DispatchResult dispatch(const LabeledGraph& lg, int u, int v) {
  if (u == v) throw std::invalid_argument("dispatch needs distinct vertices");
  const auto& p = lg.params();
  const auto& table = table_for(lg.family());
  std::vector<DispatchResult> matches;
  for (const auto& def : table) {
    for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
      if (lg.role(a).kind != def.fam_u || lg.role(b).kind != def.fam_v) continue;
      int i = guard_index(lg, a), j = guard_index(lg, b);
      if (!def.guard(i, j, p.k, p.s)) continue;
      matches.push_back({{lg.family(), def.number}, a, b});
    }
  }
  if (matches.size() != 1)
    throw std::logic_error("dispatch matched " + std::to_string(matches.size()) +
                           " cases for a vertex pair");
  return matches.front();
}

std::vector<int> case_anchors(const LabeledGraph& lg, const DispatchResult& d) {
  const CaseDef& def = case_def(lg, d.id);
  auto anchors =
      eval_anchors(lg, def, guard_index(lg, d.from), guard_index(lg, d.to));
  if (anchors.empty() || anchors.front() != d.from || anchors.back() != d.to)
    throw std::logic_error("case " + d.id.label() +
                           ": template endpoints disagree with the pair");
  return anchors;
}

HamiltonPath emit_path(const LabeledGraph& lg, const DispatchResult& d) {
  auto anchors = case_anchors(lg, d);
  WeaveSearch search(lg.graph(), anchors);
  auto seq = search.find();
  if (seq.empty())
    throw std::logic_error("case " + d.id.label() +
                           ": template expansion found no Hamilton path");
  HamiltonPath path{std::move(seq), d.from, d.to, d.id, false};
  path.verified =
      verify_path(lg.graph(), path) && anchors_in_order(path.vertices, anchors);
  if (!path.verified)
    throw std::logic_error("case " + d.id.label() +
                           ": expansion produced a non-path");
  return path;
}

HamiltonPath emit_path(const LabeledGraph& lg, int u, int v) {
  return emit_path(lg, dispatch(lg, u, v));
}

FormulaReport verify_all_pairs(const LabeledGraph& lg) {
  FormulaReport report;
  report.family = lg.family();
  report.n = lg.params().n;
  report.delta = lg.params().delta;
  const int n = lg.graph().order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      PairReport pr;
      pr.u = u;
      pr.v = v;
      try {
        auto d = dispatch(lg, u, v);
        pr.case_id = d.id;
        auto anchors = case_anchors(lg, d);
        auto path = emit_path(lg, d);
        pr.verified = verify_path(lg.graph(), path);
        pr.anchors_in_order = anchors_in_order(path.vertices, anchors);
      } catch (const std::exception&) {
        pr.verified = false;
        pr.anchors_in_order = false;
      }
      if (pr.verified && pr.anchors_in_order) ++report.verified_count;
      report.pairs.push_back(pr);
    }
  }
  report.all_verified =
      report.verified_count == static_cast<long>(report.pairs.size());
  return report;
}

}  // namespace mhc
