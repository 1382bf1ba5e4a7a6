#include "doctest.h"

#include <cmath>
#include <random>

#include "nestcyc/error.hpp"
#include "nestcyc/expander.hpp"
#include "nestcyc/generators.hpp"

using namespace nestcyc;

namespace {

VertexSet range_set(Vertex lo, Vertex hi) {
  std::vector<Vertex> v;
  for (Vertex x = lo; x < hi; ++x) v.push_back(x);
  return VertexSet(v);
}

// Two cliques on [0, s) and [s, 2s) joined by the edge (s-1, s).
Graph two_cliques(std::size_t s) {
  std::vector<Edge> e;
  for (std::size_t base : {std::size_t{0}, s}) {
    for (std::size_t u = 0; u < s; ++u) {
      for (std::size_t v = u + 1; v < s; ++v) {
        e.push_back({static_cast<Vertex>(base + u), static_cast<Vertex>(base + v)});
      }
    }
  }
  e.push_back({static_cast<Vertex>(s - 1), static_cast<Vertex>(s)});
  return build_graph(2 * s, e);
}

}  // namespace

TEST_CASE("epsilon values") {
  ExpanderParams p{0.3, 12.0};
  CHECK(epsilon(p.k / 6, p) == 0.0);
  ExpanderParams one{0.999999999999, 10.0};
  CHECK(epsilon(2.0, one) == doctest::Approx(1.0 / std::pow(std::log(3.0), 2)).epsilon(1e-9));
  CHECK(1.0 / std::pow(std::log(3.0), 2) == doctest::Approx(0.8286).epsilon(1e-4));
  ExpanderParams q{0.5, 10.0};
  CHECK(epsilon(100.0, q) == doctest::Approx(0.01992).epsilon(1e-3));
  CHECK_THROWS_AS((ExpanderParams{1.5, 1.0}.validate()), InputError);
  CHECK_THROWS_AS((ExpanderParams{0.5, 0.0}.validate()), InputError);
}

TEST_CASE("expansion witness") {
  Graph c100 = cycle_graph(100);
  const VertexSet arc = range_set(0, 50);
  auto fail = expansion_witness_check(c100, {0.5, 100.0}, arc);
  CHECK(fail.verdict == Verdict::Fail);
  CHECK(fail.neighborhood_size == 2);
  // at eps1 = 0.1, k = 4 the requirement is below 2, so the arc expands enough
  auto weak = expansion_witness_check(c100, {0.1, 4.0}, arc);
  CHECK(weak.verdict == Verdict::Pass);
  CHECK(weak.required < 2.0);

  Graph k20 = complete_graph(20);
  auto pass = expansion_witness_check(k20, {0.1, 4.0}, range_set(0, 10));
  CHECK(pass.verdict == Verdict::Pass);
  CHECK(pass.neighborhood_size == 10);

  auto small = expansion_witness_check(k20, {0.1, 8.0}, range_set(0, 3));
  CHECK(small.verdict == Verdict::NotApplicable);

  std::vector<Edge> not_in_c100{{0, 2}};
  CHECK_THROWS_AS(expansion_witness_check(c100, {0.1, 4.0}, arc, not_in_c100), InputError);

  // deleting the arc's two boundary edges leaves no neighbours, but that many
  // deleted edges is only allowed when d * eps(|X|) * |X| >= 2
  std::vector<Edge> cut{{49, 50}, {0, 99}};
  auto cut_check = expansion_witness_check(c100, {0.5, 100.0}, arc, cut);
  CHECK(cut_check.removed_edges == 2);
  CHECK(cut_check.verdict == Verdict::Fail);
  CHECK(cut_check.neighborhood_size == 0);
}

TEST_CASE("violating sets") {
  CHECK_FALSE(find_violating_set(complete_graph(20), {0.1, 4.0}).has_value());

  auto arc = find_violating_set(cycle_graph(100), {0.5, 100.0});
  REQUIRE(arc);
  CHECK(arc->size() == 50);
  CHECK(*arc == range_set(0, 50));

  auto side = find_violating_set(two_cliques(10), {0.5, 20.0});
  REQUIRE(side);
  CHECK(*side == range_set(0, 10));
  CHECK(expansion_witness_check(two_cliques(10), {0.5, 20.0}, *side).verdict == Verdict::Fail);
}

TEST_CASE("extraction") {
  Graph k20 = complete_graph(20);
  auto e = extract_expander_subgraph(k20, {0.1, 1.9});
  REQUIRE(e.subgraph);
  CHECK(e.subgraph->graph.vertex_count() == 20);
  CHECK(e.report.trace.empty());

  auto split = extract_expander_subgraph(two_cliques(20), {0.5, 40.0});
  REQUIRE(split.subgraph);
  CHECK(split.subgraph->to_original == range_set(0, 20).members());
  CHECK(split.report.trace.size() == 1);

  std::vector<Edge> star;
  for (Vertex v = 1; v <= 50; ++v) star.push_back({0, v});
  auto s = extract_expander_subgraph(build_graph(51, star), {0.1, 0.2});
  CHECK((!s.subgraph || s.report.degenerate));

  auto none = extract_expander_subgraph(build_graph(4, {}), {0.1, 1.0});
  CHECK_FALSE(none.subgraph);
  CHECK(none.report.failure == "graph has no edges");
}

TEST_CASE("extraction inequalities on random graphs") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    Graph g = t % 2 ? gnp(60, 0.12, rng()) : random_regular(40, 6, rng());
    if (g.edge_count() == 0) continue;
    const Rational d = average_degree(g);
    auto e = extract_expander_subgraph(g, ExpanderParams::for_degree(0.1, d.to_double()));
    REQUIRE(e.subgraph);
    const auto st = degree_stats(e.subgraph->graph);
    CHECK(st.average >= d.half());
    CHECK(Rational::make(static_cast<std::int64_t>(st.minimum), 1) >= st.average.half());
  }
}

TEST_CASE("peeling raises the average") {
  std::vector<Edge> e;
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = u + 1; v < 5; ++v) e.push_back({u, v});
  e.push_back({0, 5});
  Graph g = build_graph(6, e);
  auto kept = peel_to_half_average(g, range_set(0, 6));
  CHECK(kept == range_set(0, 5));
  auto flat = peel_to_half_average(cycle_graph(7), range_set(0, 7));
  CHECK(flat == range_set(0, 7));
}

TEST_CASE("thinness") {
  Graph p = build_graph(3, {{0, 1}, {1, 2}});
  CHECK(is_thin_around(p, {}, {0}, {10.0, 2, 3}).pass);
  auto ok = is_thin_around(p, {1}, {0}, {10.0, 2, 1});
  CHECK(ok.pass);
  CHECK(ok.contacts_by_radius.at(0) == 1);

  Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  auto bad = is_thin_around(star, {0}, {1}, {0.5, 1, 2});
  CHECK_FALSE(bad.pass);
  CHECK(bad.violating_radius == 1);
  CHECK(bad.contacts == 1);
  CHECK(bad.bound == doctest::Approx(0.5));
  CHECK_THROWS_AS(is_thin_around(star, {0}, {0}, {1.0, 1, 1}), InputError);
}

TEST_CASE("robust growth") {
  Graph c = cycle_graph(12);
  auto r0 = grow_ball_robust(c, {3}, {}, {}, 0, {0.1, 1.0}, {});
  CHECK(r0.ball == VertexSet{3});
  CHECK(r0.trace.sizes == std::vector<std::size_t>{1});

  auto r3 = grow_ball_robust(c, {0}, {}, {}, 3, {0.1, 1.0}, {});
  CHECK(r3.ball == ball(c, {0}, 3));
  CHECK(r3.trace.sizes == std::vector<std::size_t>{1, 3, 5, 7});

  Graph reg = random_regular(4096, 8, 77);
  auto big = grow_ball_robust(reg, {0}, {}, {}, 9, {0.1, 0.8}, {});
  CHECK(big.conclusion_holds);
  CHECK(big.trace.sizes.back() >= 1000);
  CHECK_FALSE(big.radius_in_range);  // ln 4096 < 9

  auto blocked = grow_ball_robust(c, {0}, {1}, {11}, 3, {0.1, 1.0}, {10.0, 2, 3});
  CHECK(blocked.ball == VertexSet{0});
}

TEST_CASE("linking sets") {
  Graph c6 = cycle_graph(6);
  auto zero = link_sets(c6, {1, 2}, {2, 4}, {}, 5);
  REQUIRE(zero);
  CHECK(zero->length() == 0);
  CHECK_FALSE(link_sets(c6, {0}, {3}, {}, 2).has_value());
  auto ok = link_sets(complete_graph(20), {0}, {19}, {1, 2, 3, 4, 5}, 2);
  REQUIRE(ok);
  CHECK(ok->length() <= 2);
}

TEST_CASE("large ball avoiding W") {
  ExpanderParams p{0.1, 1.0};
  auto all = find_large_ball_avoiding(cycle_graph(9), {}, p);
  REQUIRE(all);
  CHECK(all->members.size() == 9);

  auto k = find_large_ball_avoiding(complete_graph(20), {0, 1, 2, 3, 4}, p);
  REQUIRE(k);
  CHECK(k->members == range_set(5, 20));
  CHECK(k->radius == 1);

  auto broken = find_large_ball_avoiding(cycle_graph(100), {0}, p);
  REQUIRE(broken);
  CHECK(broken->members.size() == 99);
  CHECK(broken->radius == 98);
  CHECK(broken->size_ok);

  CHECK_FALSE(find_large_ball_avoiding(complete_graph(3), {0, 1, 2}, p).has_value());
}
