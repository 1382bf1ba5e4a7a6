#include "doctest.h"

#include <random>

#include "nestcyc/error.hpp"
#include "nestcyc/generators.hpp"
#include "nestcyc/graph.hpp"
#include "support/oracles.hpp"

using namespace nestcyc;

namespace {

Graph path4() { return build_graph(4, {{0, 1}, {1, 2}, {2, 3}}); }

Graph petersen() {
  return build_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
                          {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

}  // namespace

TEST_CASE("build_graph") {
  Graph t = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(t.edge_count() == 3);
  CHECK(average_degree(t) == Rational::make(2, 1));

  Graph d = build_graph(4, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(d.edge_count() == 1);
  CHECK(d.vertex_count() == 4);

  CHECK_THROWS_AS(build_graph(2, {{0, 2}}), InputError);
  CHECK_THROWS_AS(build_graph(2, {{1, 1}}), InputError);
  CHECK_THROWS_AS(build_graph(2, {{-1, 0}}), InputError);
}

TEST_CASE("degree stats") {
  auto t = degree_stats(build_graph(3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK(t.average == Rational::make(2, 1));
  CHECK(t.minimum == 2);
  CHECK(t.maximum == 2);

  auto star = degree_stats(build_graph(4, {{0, 1}, {0, 2}, {0, 3}}));
  CHECK(star.average == Rational::make(3, 2));
  CHECK(star.minimum == 1);
  CHECK(star.maximum == 3);

  auto c8 = degree_stats(cycle_graph(8));
  CHECK(c8.average == Rational::make(2, 1));
  CHECK(c8.minimum == 2);
  CHECK(c8.maximum == 2);

  CHECK_THROWS_AS(degree_stats(Graph{}), InputError);
}

TEST_CASE("rational ordering is exact") {
  CHECK(Rational::make(1, 3) < Rational::make(334, 1000));
  CHECK(Rational::make(2, 4) == Rational::make(1, 2));
  CHECK(Rational::make(7, 2).half() == Rational::make(7, 4));
}

TEST_CASE("cycle canonical form") {
  CHECK(Cycle({3, 1, 2}).vertices() == std::vector<Vertex>{1, 2, 3});
  CHECK(Cycle({2, 0, 3, 1}).vertices() == std::vector<Vertex>{0, 2, 1, 3});
  CHECK(Cycle({5, 4, 9}) == Cycle({9, 4, 5}));
  CHECK_THROWS_AS(Cycle({1, 2}), InputError);
  CHECK_THROWS_AS(Cycle({1, 2, 1}), InputError);
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    std::vector<Vertex> v(3 + rng() % 7);
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
    CHECK(Cycle(v).vertices() == oracle::canonical(v));
  }
}

TEST_CASE("spheres and balls") {
  Graph p = path4();
  CHECK(sphere(p, {0}, 2) == VertexSet{2});
  CHECK(sphere(p, {0}, 2, {1}).empty());
  CHECK(sphere(cycle_graph(6), {0}, 3) == VertexSet{3});
  CHECK(ball(p, {0}, 2) == VertexSet{0, 1, 2});
  CHECK(ball(p, {1, 3}, 0) == VertexSet{1, 3});
  CHECK(ball(cycle_graph(6), {0}, 3).size() == 6);
  CHECK_THROWS_AS(ball(p, {0}, 1, {0}), InputError);
  CHECK_THROWS_AS(ball(p, {0}, -1), InputError);
  CHECK(neighborhood(p, {1, 2}) == VertexSet{0, 3});
}

TEST_CASE("ball matches set expansion on random graphs") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    Graph g = gnp(12, 0.25, rng());
    std::set<Vertex> x{static_cast<Vertex>(rng() % 12)};
    std::set<Vertex> avoid;
    for (int a = 0; a < 3; ++a) {
      Vertex v = static_cast<Vertex>(rng() % 12);
      if (!x.count(v)) avoid.insert(v);
    }
    const int r = static_cast<int>(rng() % 5);
    auto expect = oracle::ball(g, x, r, avoid);
    auto got = ball(g, VertexSet(std::vector<Vertex>(x.begin(), x.end())), r,
                    VertexSet(std::vector<Vertex>(avoid.begin(), avoid.end())));
    CHECK(std::vector<Vertex>(expect.begin(), expect.end()) == got.members());
  }
}

TEST_CASE("shortest cycle") {
  CHECK_FALSE(shortest_cycle(path4()).has_value());
  CHECK_FALSE(girth(path4()).has_value());
  CHECK(shortest_cycle(complete_graph(4))->vertices() == std::vector<Vertex>{0, 1, 2});
  auto pc = shortest_cycle(petersen());
  REQUIRE(pc);
  CHECK(pc->length() == 5);
  CHECK(pc->vertices() == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(oracle::girth(petersen()) == 5);
}

TEST_CASE("shortest cycle agrees with brute force") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 60; ++t) {
    Graph g = gnp(8, 0.3, rng());
    const std::size_t gg = oracle::girth(g);
    auto c = shortest_cycle(g);
    if (gg == 0) {
      CHECK_FALSE(c.has_value());
      continue;
    }
    REQUIRE(c);
    CHECK(c->length() == gg);
    CHECK(is_cycle_in(g, c->vertices()));
    std::vector<Vertex> least;
    for (const auto& cyc : oracle::all_cycles(g)) {
      if (cyc.size() == gg) {
        least = cyc;
        break;
      }
    }
    CHECK(c->vertices() == least);
  }
}

TEST_CASE("shortest path between sets") {
  Graph c6 = cycle_graph(6);
  auto p = shortest_path_between_sets(c6, VertexSet{0}, VertexSet{3});
  REQUIRE(p);
  CHECK(p->length() == 3);
  CHECK(p->vertices == std::vector<Vertex>{0, 1, 2, 3});
  auto q = shortest_path_between_sets(c6, VertexSet{0}, VertexSet{3}, VertexSet{1, 2});
  REQUIRE(q);
  CHECK(q->vertices == std::vector<Vertex>{0, 5, 4, 3});
  auto z = shortest_path_between_sets(c6, VertexSet{1, 5}, VertexSet{5, 2});
  REQUIRE(z);
  CHECK(z->length() == 0);
  CHECK(z->vertices == std::vector<Vertex>{5});
  CHECK_FALSE(shortest_path_between_sets(c6, VertexSet{0}, VertexSet{3}, VertexSet{1, 4}));
}

TEST_CASE("induced subgraph and diameter") {
  Graph k5 = complete_graph(5);
  auto h = induced_subgraph(k5, VertexSet{1, 3, 4});
  CHECK(h.graph.vertex_count() == 3);
  CHECK(h.graph.edge_count() == 3);
  CHECK(h.lift(VertexSet{0, 2}) == VertexSet{1, 4});
  CHECK(induced_diameter(cycle_graph(6), VertexSet{0, 1, 2, 3}) == 3);
  CHECK_FALSE(induced_diameter(cycle_graph(6), VertexSet{0, 3}).has_value());
}
