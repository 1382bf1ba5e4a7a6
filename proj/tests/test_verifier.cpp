#include "doctest.h"

#include <algorithm>
#include <random>

#include "nestcyc/generators.hpp"
#include "nestcyc/pipeline.hpp"
#include "nestcyc/verifier.hpp"
#include "support/oracles.hpp"

using namespace nestcyc;

namespace {

Graph octagon_with(std::vector<Edge> chords) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 8; ++i) e.push_back({i, static_cast<Vertex>((i + 1) % 8)});
  e.insert(e.end(), chords.begin(), chords.end());
  return build_graph(8, e);
}

const std::vector<Vertex> kOctagon{0, 1, 2, 3, 4, 5, 6, 7};

}  // namespace

TEST_CASE("chord crossing examples") {
  CHECK(chords_cross({8, 0, 2, 1, 3}));
  CHECK_FALSE(chords_cross({8, 0, 2, 2, 4}));
  CHECK_FALSE(chords_cross({8, 0, 2, 4, 6}));
  CHECK(chords_cross({8, 2, 6, 1, 3}));
  CHECK(chords_cross({8, 7, 3, 0, 5}));
  CHECK_THROWS(chords_cross({8, 0, 8, 1, 3}));
}

TEST_CASE("crossing agrees with the linear pattern on every small chord pair") {
  for (std::size_t l = 3; l <= 10; ++l) {
    for (std::size_t a = 0; a < l; ++a)
      for (std::size_t b = 0; b < l; ++b)
        for (std::size_t c = 0; c < l; ++c)
          for (std::size_t d = 0; d < l; ++d) {
            if (a == b || c == d) continue;
            CHECK(chords_cross({l, a, b, c, d}) == oracle::linear_cross(a, b, c, d));
          }
  }
}

TEST_CASE("crossing is symmetric and invariant under rotation and reflection") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20000; ++t) {
    const std::size_t l = 4 + rng() % 30;
    std::size_t v[4];
    for (auto& x : v) x = rng() % l;
    if (v[0] == v[1] || v[2] == v[3]) continue;
    const bool base = chords_cross({l, v[0], v[1], v[2], v[3]});
    CHECK(chords_cross({l, v[2], v[3], v[0], v[1]}) == base);
    CHECK(chords_cross({l, v[1], v[0], v[3], v[2]}) == base);
    const std::size_t r = rng() % l;
    auto rot = [&](std::size_t x) { return (x + r) % l; };
    auto ref = [&](std::size_t x) { return (l - x) % l; };
    CHECK(chords_cross({l, rot(v[0]), rot(v[1]), rot(v[2]), rot(v[3])}) == base);
    CHECK(chords_cross({l, ref(v[0]), ref(v[1]), ref(v[2]), ref(v[3])}) == base);
  }
}

TEST_CASE("nested square inside an octagon") {
  Graph g = octagon_with({{0, 2}, {2, 4}, {4, 6}, {6, 0}});
  const std::vector<Vertex> inner{0, 2, 4, 6};
  auto v = verify_nested_no_crossings(g, kOctagon, inner);
  CHECK(v.pass);
  CHECK(v.issues.empty());
  CHECK(oracle::nested_pair(g, kOctagon, inner));
}

TEST_CASE("crossing pentagon inside an octagon") {
  Graph g = octagon_with({{0, 2}, {2, 6}, {6, 1}, {1, 3}, {3, 0}});
  const std::vector<Vertex> inner{0, 2, 6, 1, 3};
  auto v = verify_nested_no_crossings(g, kOctagon, inner);
  CHECK_FALSE(v.pass);
  CHECK(v.has_clause('d'));
  CHECK_FALSE(v.has_clause('a'));
  CHECK_FALSE(v.has_clause('c'));
  for (const auto& i : v.issues)
    if (i.clause == 'd') CHECK(i.witness.size() == 4);
  CHECK_FALSE(oracle::nested_pair(g, kOctagon, inner));
}

TEST_CASE("other failing clauses") {
  Graph g = octagon_with({{0, 2}, {2, 4}, {4, 0}});
  SUBCASE("shared edge") {
    auto v = verify_nested_no_crossings(g, kOctagon, std::vector<Vertex>{0, 1, 2});
    CHECK(v.has_clause('c'));
  }
  SUBCASE("not a cycle") {
    auto v = verify_nested_no_crossings(g, kOctagon, std::vector<Vertex>{0, 3, 5});
    CHECK(v.has_clause('a'));
  }
  SUBCASE("inner leaves outer") {
    Graph h = build_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 8}, {8, 9}, {9, 0}});
    auto v = verify_nested_no_crossings(h, std::vector<Vertex>{0, 1, 2, 3}, std::vector<Vertex>{0, 8, 9});
    CHECK(v.has_clause('b'));
  }
  SUBCASE("repeated vertex") {
    auto v = verify_nested_no_crossings(g, std::vector<Vertex>{0, 1, 2, 1}, std::vector<Vertex>{0, 2, 4});
    CHECK(v.has_clause('a'));
  }
}

TEST_CASE("a passing pair passes in supergraphs") {
  std::mt19937_64 rng(12);
  Graph g = octagon_with({{0, 2}, {2, 4}, {4, 6}, {6, 0}});
  for (int t = 0; t < 50; ++t) {
    auto e = g.edges();
    for (int x = 0; x < 4; ++x) {
      Vertex a = rng() % 8, b = rng() % 8;
      if (a != b && !g.has_edge(a, b)) e.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    Graph h = build_graph(8, e);
    CHECK(verify_nested_no_crossings(h, kOctagon, std::vector<Vertex>{0, 2, 4, 6}).pass);
  }
}

TEST_CASE("cycle enumeration") {
  CHECK(enumerate_cycles(complete_graph(4)).cycles.size() == 7);
  CHECK(enumerate_cycles(cycle_graph(6)).cycles.size() == 1);
  CHECK(enumerate_cycles(build_graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}})).cycles.empty());
  CHECK(enumerate_cycles(complete_graph(7)).cycles.size() == oracle::ncr_cycles_complete(7));

  auto capped = enumerate_cycles(complete_graph(7), {10, 0, 0});
  CHECK(capped.truncated);
  CHECK(capped.cycles.size() <= 10);
  auto short_only = enumerate_cycles(complete_graph(5), {1000, 3, 0});
  CHECK(short_only.cycles.size() == 10);
  CHECK_FALSE(short_only.truncated);
}

TEST_CASE("enumeration matches brute force on random small graphs") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 4 + rng() % 5;
    Graph g = gnp(n, 0.55, rng());
    auto got = enumerate_cycles(g);
    auto want = oracle::all_cycles(g);
    REQUIRE(got.cycles.size() == want.size());
    for (std::size_t i = 0; i < got.cycles.size(); ++i) {
      CHECK(want.count(got.cycles[i].vertices()) == 1);
      if (i > 0) {
        const auto& a = got.cycles[i - 1];
        const auto& b = got.cycles[i];
        CHECK((a.length() < b.length() || (a.length() == b.length() && a.vertices() < b.vertices())));
      }
    }
  }
}

TEST_CASE("oracle on complete graphs") {
  auto k4 = oracle_find_nested_pair(complete_graph(4));
  CHECK_FALSE(k4.found());
  CHECK(k4.exhaustive);
  auto k5 = oracle_find_nested_pair(complete_graph(5));
  CHECK_FALSE(k5.found());
  CHECK(k5.exhaustive);
  auto k6 = oracle_find_nested_pair(complete_graph(6));
  REQUIRE(k6.found());
  CHECK(k6.outer->length() == 6);
  CHECK(k6.inner->length() == 3);
  CHECK(verify_nested_no_crossings(complete_graph(6), k6.outer->vertices(), k6.inner->vertices()).pass);
  CHECK(oracle::nested_pair(complete_graph(6), k6.outer->vertices(), k6.inner->vertices()));
}

TEST_CASE("oracle agrees with brute force on random small graphs") {
  std::mt19937_64 rng(41);
  int positives = 0;
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 5 + rng() % 3;
    Graph g = gnp(n, 0.5 + 0.4 * static_cast<double>(rng() % 100) / 100.0, rng());
    auto r = oracle_find_nested_pair(g);
    REQUIRE(r.exhaustive);
    const bool truth = oracle::has_nested_pair(g);
    CHECK(r.found() == truth);
    if (r.found()) {
      ++positives;
      CHECK(oracle::nested_pair(g, r.outer->vertices(), r.inner->vertices()));
    }
  }
  CHECK(positives > 0);
}

TEST_CASE("oracle caps mark the result non-exhaustive") {
  auto r = oracle_find_nested_pair(complete_graph(5), {3, 0, 0});
  CHECK_FALSE(r.found());
  CHECK_FALSE(r.exhaustive);
}

TEST_CASE("oracle finds a pair whenever the pipeline certifies a small graph") {
  for (std::size_t n : {12}) {
    PipelineResult p = run_pipeline(complete_graph(n));
    REQUIRE(p.ok());
    CHECK(oracle_find_nested_pair(complete_graph(n)).found());
  }
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    Graph g = gnp(12, 0.8, rng());
    if (!run_pipeline(g).ok()) continue;
    CHECK(oracle_find_nested_pair(g).found());
  }
}

TEST_CASE("extremal scans") {
  SearchCaps caps;
  auto full = extremal_scan(6, 15, 15, 3, caps, 1);
  REQUIRE(full.rows.size() == 1);
  CHECK(full.rows[0].fraction == 1.0);
  CHECK(full.min_m_with_pair == std::size_t{15});

  auto sparse = extremal_scan(6, 6, 6, 20, caps, 2);
  CHECK(sparse.rows[0].fraction == 0.0);
  CHECK(sparse.rows[0].exhaustive);
  CHECK_FALSE(sparse.min_m_with_pair.has_value());

  auto five = extremal_scan(5, 0, 10, 4, caps, 3, 2);
  CHECK(five.rows.size() == 11);
  for (const auto& row : five.rows) CHECK(row.fraction == 0.0);

  auto a = scan_csv(extremal_scan(7, 10, 14, 5, caps, 9, 1));
  auto b = scan_csv(extremal_scan(7, 10, 14, 5, caps, 9, 4));
  CHECK(a == b);
  CHECK(a.rfind("n,m,samples,fraction,exhaustive\n", 0) == 0);
}
