#include <doctest.h>

#include <random>

#include "mhc/constructions.hpp"
#include "mhc/graph.hpp"
#include "oracles.hpp"

using mhc::Graph;

TEST_CASE("from_edges builds the named small graphs") {
  Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(k4.size() == 6);
  CHECK(k4 == Graph::complete(4));

  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  auto profile = mhc::degree_profile(p3);
  CHECK(profile.degrees == std::vector<int>{2, 1, 1});

  Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(c5 == Graph::cycle(5));
  for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
}

TEST_CASE("from_edges collapses duplicates and rejects bad input") {
  Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(g.size() == 1);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(65, {}), std::invalid_argument);
  CHECK_NOTHROW(Graph::from_edges(64, {{0, 63}}));
}

TEST_CASE("remove_edge returns a fresh value") {
  Graph k4 = Graph::complete(4);
  Graph reduced = k4.remove_edge(0, 1);
  CHECK(k4.size() == 6);
  CHECK(reduced.size() == 5);
  auto profile = mhc::degree_profile(reduced);
  CHECK(profile.degrees == std::vector<int>{3, 3, 2, 2});

  Graph c5 = Graph::cycle(5);
  Graph p5 = c5.remove_edge(4, 0);
  CHECK(p5 == Graph::path(5));

  CHECK_THROWS_AS(p5.remove_edge(4, 0), std::invalid_argument);

  // a wheel loses a rim edge: one vertex of degree 2 appears
  auto w5 = mhc::build_wheel(5);
  Graph cut = w5.graph().remove_edge(1, 2);
  CHECK(mhc::degree_profile(cut).min_degree == 2);
}

TEST_CASE("degree_profile on wheels") {
  auto w6 = mhc::build_wheel(6);
  auto profile = mhc::degree_profile(w6.graph());
  CHECK(profile.degrees == std::vector<int>{5, 3, 3, 3, 3, 3});
  CHECK(w6.graph().size() == 10);
  CHECK(mhc::degree_profile(Graph::complete(4)).degrees == std::vector<int>{3, 3, 3, 3});
}

TEST_CASE("connectivity basics") {
  CHECK(mhc::is_connected(Graph::complete(4)));
  CHECK(mhc::is_connected(Graph::cycle(7)));
  CHECK_FALSE(mhc::is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));

  CHECK(mhc::vertex_connectivity(Graph::complete(4)) == 3);
  CHECK(mhc::vertex_connectivity(Graph::cycle(5)) == 2);
  CHECK(mhc::vertex_connectivity(Graph::path(5)) == 1);
  CHECK(mhc::vertex_connectivity(Graph::from_edges(4, {{0, 1}, {2, 3}})) == 0);
  CHECK(mhc::vertex_connectivity(Graph::complete(12)) == 11);

  CHECK(mhc::vertex_connectivity_capped(Graph::complete(10), 3) == 3);
  CHECK(mhc::vertex_connectivity_capped(Graph::cycle(20), 3) == 2);
}

TEST_CASE("connectivity of the even family with the x-z1 edge removed") {
  auto h = mhc::build_case_even(17, 5);
  auto cut = h.graph().remove_edge(h.vertex('x', -1), h.vertex('z', 1));
  CHECK(mhc::vertex_connectivity(cut) == 2);
}

TEST_CASE("exact connectivity refuses oversized dense graphs") {
  CHECK(mhc::vertex_connectivity(Graph::complete(20)) == 19);  // within budget
  CHECK_THROWS_AS(mhc::vertex_connectivity(Graph::complete(30)),
                  std::invalid_argument);
  CHECK_THROWS_AS(mhc::vertex_connectivity(Graph::complete(1)),
                  std::invalid_argument);
}

TEST_CASE("degree sum and Whitney inequality on random graphs") {
  std::mt19937_64 rng(20260809);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    Graph g = oracles::random_graph(n, 0.4, rng);
    auto profile = mhc::degree_profile(g);
    long sum = 0;
    for (int d : profile.degrees) sum += d;
    CHECK(sum == 2L * g.size());
    CHECK(mhc::vertex_connectivity(g) <= profile.min_degree);
  }
}
