#include "doctest.h"

#include <random>

#include "nestcyc/error.hpp"
#include "nestcyc/generators.hpp"
#include "nestcyc/kraken.hpp"
#include "support/oracles.hpp"

using namespace nestcyc;

namespace {

// Triangle 0,1,2. Arm (i,j) is the edge v_i - (3+2i+j); its blob adds the
// pendant 9+2i+j. Vertices 15..29 form a separate path.
std::vector<Edge> hand_edges() {
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
  for (Vertex i = 0; i < 3; ++i) {
    for (Vertex j = 0; j < 2; ++j) {
      const Vertex a = 3 + 2 * i + j;
      e.push_back({i, a});
      e.push_back({a, static_cast<Vertex>(a + 6)});
    }
  }
  for (Vertex v = 15; v < 29; ++v) e.push_back({v, static_cast<Vertex>(v + 1)});
  return e;
}

Kraken hand_kraken() {
  Kraken kr;
  kr.cycle = Cycle({0, 1, 2});
  for (Vertex i = 0; i < 3; ++i) {
    std::array<Vertex, 2> anchors{};
    std::array<VertexSet, 2> blobs;
    std::array<Path, 2> arms;
    for (int j = 0; j < 2; ++j) {
      const Vertex a = 3 + 2 * i + j;
      anchors[j] = a;
      blobs[j] = VertexSet{a, static_cast<Vertex>(a + 6)};
      arms[j] = Path{{i, a}};
    }
    kr.anchors.push_back(anchors);
    kr.blobs.push_back(blobs);
    kr.arms.push_back(arms);
    kr.hub_anchor.push_back({false, false});
  }
  kr.case_tag = CaseTag::Blobs;
  return kr;
}

KrakenParams hand_params() {
  KrakenParams p;
  p.k = 3;
  p.s = 2;
  p.m = 3;
  return p;
}

bool has_issue(const KrakenVerdict& v, const std::string& needle) {
  for (const auto& i : v.issues)
    if (i.clause.find(needle) != std::string::npos) return true;
  return false;
}

int oracle_set_distance(const Graph& g, const VertexSet& a, const VertexSet& b) {
  auto adj = oracle::adjacency(g);
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<Vertex> q;
  for (Vertex x : a.members()) {
    dist[x] = 0;
    q.push_back(x);
  }
  for (std::size_t h = 0; h < q.size(); ++h) {
    const Vertex x = q[h];
    if (b.contains(x)) return dist[x];
    for (Vertex y = 0; y < static_cast<Vertex>(adj.size()); ++y) {
      if (adj[x][y] && dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push_back(y);
      }
    }
  }
  return -1;
}

}  // namespace

TEST_CASE("hand-built kraken validates") {
  Graph g = build_graph(30, hand_edges());
  auto v = validate_kraken(g, hand_kraken(), hand_params());
  CHECK(v.pass);
  CHECK(v.issues.empty());
}

TEST_CASE("overlapping blobs are rejected") {
  auto e = hand_edges();
  e.push_back({5, 9});
  Graph g = build_graph(30, e);
  Kraken kr = hand_kraken();
  kr.blobs[1][0] = VertexSet{5, 9};
  auto v = validate_kraken(g, kr, hand_params());
  CHECK_FALSE(v.pass);
  CHECK(has_issue(v, "overlaps"));
  bool tied = false;
  for (const auto& i : v.issues) tied = tied || (i.i == 1 && i.j == 0);
  CHECK(tied);
}

TEST_CASE("an arm over the cap is rejected") {
  auto e = hand_edges();
  e.push_back({0, 15});
  e.push_back({15, 3});
  Graph g = build_graph(30, e);
  Kraken kr = hand_kraken();
  kr.arms[0][0] = Path{{0, 15, 3}};
  KrakenParams p = hand_params();
  CHECK(validate_kraken(g, kr, p).pass);
  p.max_arm_len = 1;
  auto v = validate_kraken(g, kr, p);
  CHECK_FALSE(v.pass);
  CHECK(has_issue(v, "arm longer"));
}

TEST_CASE("other broken krakens") {
  Graph g = build_graph(30, hand_edges());
  SUBCASE("anchor outside its blob") {
    Kraken kr = hand_kraken();
    kr.anchors[2][1] = 20;
    CHECK(has_issue(validate_kraken(g, kr, hand_params()), "anchor outside"));
  }
  SUBCASE("blob on the cycle") {
    Kraken kr = hand_kraken();
    kr.blobs[0][0] = VertexSet{3, 0};
    CHECK(has_issue(validate_kraken(g, kr, hand_params()), "meets V(C)"));
  }
  SUBCASE("wrong size") {
    KrakenParams p = hand_params();
    p.s = 3;
    CHECK(has_issue(validate_kraken(g, hand_kraken(), p), "size differs"));
  }
  SUBCASE("not a cycle") {
    Kraken kr = hand_kraken();
    kr.cycle = Cycle({0, 1, 15});
    CHECK(has_issue(validate_kraken(g, kr, hand_params()), "not a cycle"));
  }
}

TEST_CASE("far-apart blobs on a torus") {
  Graph g = torus_grid(40, 40);
  Cycle face({0, 1, 41, 40});
  REQUIRE(is_cycle_in(g, face.vertices()));
  KrakenParams p;
  p.separation = 6;
  p.blob_target_size = 9;
  p.s = 9;
  p.m = 4;
  BlobFamily fam = find_far_apart_blobs(g, {}, face, p, {0.1, 0.4}, 8);
  REQUIRE(fam.blobs.size() == 8);
  for (std::size_t a = 0; a < 8; ++a) {
    CHECK(fam.blobs[a].size() == 9);
    auto d = induced_diameter(g, fam.blobs[a]);
    REQUIRE(d);
    CHECK(*d <= 4);
    CHECK(oracle_set_distance(g, fam.blobs[a], face.vertex_set()) >= 6);
    for (std::size_t b = a + 1; b < 8; ++b) CHECK(oracle_set_distance(g, fam.blobs[a], fam.blobs[b]) >= 6);
  }
}

TEST_CASE("complete graphs leave room for at most one blob") {
  Graph g = complete_graph(15);
  KrakenParams p;
  p.separation = 2;
  BlobFamily fam = find_far_apart_blobs(g, {}, Cycle({0, 1, 2}), p, {0.1, 1.0}, 5);
  CHECK(fam.blobs.size() <= 1);
  // with separation 1 blobs only need to be disjoint
  fam = find_far_apart_blobs(g, VertexSet{3, 4}, Cycle({0, 1, 2}), KrakenParams{}, {0.1, 1.0}, 5);
  CHECK(fam.blobs.size() == 5);
  for (const auto& b : fam.blobs) {
    CHECK_FALSE(b.contains(3));
    CHECK_FALSE(b.contains(0));
  }
}

TEST_CASE("K20 with many hubs is a hub kraken") {
  Graph g = complete_graph(20);
  KrakenParams p;
  p.hub_threshold = 10;
  p.s = 2;
  p.m = 3;
  KrakenBuild b = build_kraken(g, {0.1, 1.9}, p);
  REQUIRE(b.kraken);
  CHECK(b.kraken->case_tag == CaseTag::Hubs);
  CHECK(b.kraken->cycle.length() == 3);
  KrakenParams used = b.report.params;
  CHECK(validate_kraken(g, *b.kraken, used).pass);
  for (const auto& pair : b.kraken->hub_anchor) {
    CHECK(pair[0]);
    CHECK(pair[1]);
  }
}

TEST_CASE("a sparse graph without hubs goes through blobs") {
  Graph g = random_regular(5000, 3, 2024);
  KrakenParams p = KrakenParams::desk_defaults(g);
  p.hub_threshold = 20;
  KrakenBuild b = build_kraken(g, {0.1, 0.3}, p);
  CHECK(b.report.hubs == 0);
  if (b.kraken) {
    CHECK(b.kraken->case_tag == CaseTag::Blobs);
    CHECK(validate_kraken(g, *b.kraken, b.report.params).pass);
  } else {
    // a cycle vertex of degree 3 has one neighbour off the cycle, so at most one arm
    CHECK(b.report.failure != KrakenFailure::None);
    CHECK_FALSE(b.report.message.empty());
  }
}

TEST_CASE("random dense graphs give valid krakens") {
  std::mt19937_64 rng(99);
  int built = 0;
  for (int t = 0; t < 20; ++t) {
    Graph g = gnp(120, 0.1, rng());
    KrakenParams p = KrakenParams::desk_defaults(g);
    p.s = 1;
    p.separation = 2;
    KrakenBuild b = build_kraken(g, {0.1, 1.0}, p);
    if (!b.kraken) continue;
    ++built;
    CHECK(validate_kraken(g, *b.kraken, b.report.params).pass);
  }
  CHECK(built > 0);
}

TEST_CASE("forests have no kraken") {
  Graph g = build_graph(6, {{0, 1}, {1, 2}, {1, 3}, {4, 5}});
  KrakenBuild b = build_kraken(g, {0.1, 1.0}, KrakenParams{});
  CHECK_FALSE(b.kraken);
  CHECK(b.report.failure == KrakenFailure::NoCycle);
}

TEST_CASE("parameter validation") {
  KrakenParams p;
  p.k = 2;
  CHECK_THROWS_AS(p.validate(), InputError);
  p = KrakenParams{};
  p.s = 0;
  CHECK_THROWS_AS(p.validate(), InputError);
  CHECK(KrakenParams{}.arm_cap() == 30);
}
