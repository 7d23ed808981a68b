#include <doctest.h>

#include <algorithm>
#include <set>

#include "mhc/canonical.hpp"
#include "mhc/constructions.hpp"
#include "mhc/graph.hpp"

using mhc::Family;
using mhc::Graph;
using mhc::ValidityReason;

TEST_CASE("validity table") {
  CHECK(mhc::validity(6, 3).valid);
  CHECK(mhc::validity(5, 4).valid);
  CHECK(mhc::validity(4, 3).valid);
  CHECK(mhc::validity(16, 5).valid);

  CHECK(mhc::validity(7, 5).reason == ValidityReason::DeltaEqualsNMinus2);
  CHECK(mhc::validity(6, 4).reason == ValidityReason::DeltaEqualsNMinus2);
  CHECK(mhc::validity(7, 3).reason == ValidityReason::CubicOddOrder);
  // at (5,3) both exclusions apply; the delta = n-2 reason wins
  CHECK(mhc::validity(5, 3).reason == ValidityReason::DeltaEqualsNMinus2);
  CHECK(mhc::validity(6, 2).reason == ValidityReason::DeltaTooSmall);
  CHECK(mhc::validity(6, 6).reason == ValidityReason::DeltaTooLarge);
  CHECK_FALSE(mhc::validity(7, 5).valid);
  CHECK_THROWS_AS(mhc::validity(3, 2), std::invalid_argument);
}

TEST_CASE("wheels") {
  auto w4 = mhc::build_wheel(4);
  CHECK(mhc::canonical_form(w4.graph()) == mhc::canonical_form(Graph::complete(4)));

  auto w6 = mhc::build_wheel(6);
  CHECK(w6.graph().size() == 10);
  CHECK(mhc::degree_profile(w6.graph()).degrees ==
        std::vector<int>{5, 3, 3, 3, 3, 3});
  CHECK(w6.family() == Family::Wheel);
  CHECK(w6.role(0).name() == "hub");
  CHECK_THROWS_AS(mhc::build_wheel(3), std::invalid_argument);
}

TEST_CASE("odd-case family instances") {
  auto g16 = mhc::build_case_odd(16, 5);
  CHECK(g16.params().k == 3);
  CHECK(g16.params().s == 6);
  CHECK(g16.graph().order() == 16);
  CHECK(g16.graph().size() == 25);
  auto profile = mhc::degree_profile(g16.graph());
  CHECK(profile.degrees.front() == 5);
  CHECK(std::count(profile.degrees.begin(), profile.degrees.end(), 3) == 15);
  // the maximum degree sits at y_1
  CHECK(g16.graph().degree(g16.vertex('y', 1)) == 5);

  auto g85 = mhc::build_case_odd(8, 5);
  CHECK(g85.params().k == 3);
  CHECK(g85.params().s == 2);
  CHECK(g85.graph().size() == 13);
  CHECK(mhc::degree_profile(g85.graph()).degrees ==
        std::vector<int>{5, 3, 3, 3, 3, 3, 3, 3});

  // G(6,3) is the triangular prism K_3 x K_2
  auto g63 = mhc::build_case_odd(6, 3);
  CHECK(g63.graph().size() == 9);
  Graph prism = Graph::from_edges(
      6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(mhc::canonical_form(g63.graph()) == mhc::canonical_form(prism));

  CHECK_THROWS_AS(mhc::build_case_odd(16, 6), std::invalid_argument);  // parity
  CHECK_THROWS_AS(mhc::build_case_odd(8, 7), std::invalid_argument);   // delta > n-3
}

TEST_CASE("even-case family instances") {
  auto h17 = mhc::build_case_even(17, 5);
  CHECK(h17.params().k == 4);
  CHECK(h17.params().s == 5);
  CHECK(h17.graph().order() == 17);
  CHECK(h17.graph().size() == 27);
  auto profile = mhc::degree_profile(h17.graph());
  CHECK(profile.degrees[0] == 5);
  CHECK(profile.degrees[1] == 4);
  CHECK(std::count(profile.degrees.begin(), profile.degrees.end(), 3) == 15);
  CHECK(h17.graph().degree(h17.vertex('x', -1)) == 5);
  CHECK(h17.graph().degree(h17.vertex('z', 1)) == 4);

  auto h84 = mhc::build_case_even(8, 4);
  CHECK(h84.params().k == 3);
  CHECK(h84.params().s == 1);
  CHECK(h84.graph().size() == 13);
  CHECK(mhc::degree_profile(h84.graph()).degrees ==
        std::vector<int>{4, 4, 3, 3, 3, 3, 3, 3});

  CHECK_THROWS_AS(mhc::build_case_even(9, 4), std::invalid_argument);  // parity
}

TEST_CASE("construct dispatch") {
  CHECK(mhc::construct(10, 9).family() == Family::Wheel);
  CHECK(mhc::construct(16, 5).family() == Family::CaseOdd);
  CHECK(mhc::construct(16, 6).family() == Family::CaseEven);
  CHECK_THROWS_AS(mhc::construct(7, 5), mhc::InvalidParameters);
  try {
    mhc::construct(7, 3);
    CHECK(false);
  } catch (const mhc::InvalidParameters& e) {
    CHECK(e.reason == ValidityReason::CubicOddOrder);
  }
}

TEST_CASE("degree multiset, size, and structure across all valid parameters") {
  for (auto [n, d] : mhc::valid_parameter_pairs(20)) {
    auto lg = mhc::construct(n, d);
    const Graph& g = lg.graph();
    CHECK(g.order() == n);
    auto profile = mhc::degree_profile(g);
    CHECK(profile.max_degree == d);

    std::vector<int> expected;
    if (lg.family() == Family::Wheel) {
      expected.assign(static_cast<std::size_t>(n), 3);
      expected[0] = n - 1;
    } else if (lg.family() == Family::CaseOdd) {
      expected.assign(static_cast<std::size_t>(n), 3);
      expected[0] = d;
      CHECK(g.size() == (d + 3 * (n - 1)) / 2);
      CHECK((d + 3 * (n - 1)) % 2 == 0);
    } else {
      expected.assign(static_cast<std::size_t>(n), 3);
      expected[0] = d;
      expected[1] = 4;
      std::sort(expected.begin(), expected.end(), std::greater<>());
      CHECK(g.size() == (d + 3 * n - 2) / 2);
      CHECK((d + 3 * n - 2) % 2 == 0);
    }
    std::sort(expected.begin(), expected.end(), std::greater<>());
    CHECK(profile.degrees == expected);

    // roles are a bijection onto the vertex set
    std::set<std::string> names;
    for (int v = 0; v < n; ++v) names.insert(lg.role(v).name());
    CHECK(static_cast<int>(names.size()) == n);
  }
}

TEST_CASE("minimality-argument structure of the families") {
  for (auto [n, d] : mhc::valid_parameter_pairs(14)) {
    if (d > n - 3) continue;
    auto lg = mhc::construct(n, d);
    const Graph& g = lg.graph();
    if (lg.family() == Family::CaseOdd) {
      for (auto [u, v] : g.edges())
        CHECK((g.degree(u) == 3 || g.degree(v) == 3));
    } else {
      int x = lg.vertex('x', -1), z1 = lg.vertex('z', 1);
      for (auto [u, v] : g.edges()) {
        bool is_xz1 = (u == std::min(x, z1) && v == std::max(x, z1));
        if (!is_xz1)
          CHECK((g.degree(u) == 3 || g.degree(v) == 3));
      }
      CHECK(mhc::vertex_connectivity_capped(g.remove_edge(x, z1), 3) == 2);
    }
    CHECK(mhc::vertex_connectivity_capped(g, 4) == 3);
  }
}

TEST_CASE("DOT output carries role names") {
  auto g16 = mhc::build_case_odd(16, 5);
  std::string dot = mhc::emit_dot(g16);
  for (const char* name : {"x1", "x3", "y1", "y6", "z1", "z7"})
    CHECK(dot.find(name) != std::string::npos);

  auto h17 = mhc::build_case_even(17, 5);
  std::string hdot = mhc::emit_dot(h17);
  for (const char* name : {" x;", "y1", "y4", "z0", "z5", "w1", "w6"})
    CHECK(hdot.find(name) != std::string::npos);

  auto w4 = mhc::build_wheel(4);
  std::string wdot = mhc::emit_dot(w4);
  CHECK(std::count(wdot.begin(), wdot.end(), ';') == 4 + 6);  // 4 nodes, 6 edges
}
