#include "nestcyc/kraken.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "nestcyc/error.hpp"

namespace nestcyc {

void KrakenParams::validate() const {
  if (k < 3) throw InputError("kraken cycle length must be at least 3");
  if (s < 1) throw InputError("blob size must be at least 1");
  if (m < 1) throw InputError("m must be at least 1");
  if (separation < 1) throw InputError("separation must be at least 1");
  if (hub_threshold < 0) throw InputError("hub threshold must be non-negative");
}

KrakenParams KrakenParams::desk_defaults(const Graph& g) {
  const double n = static_cast<double>(std::max<std::size_t>(g.vertex_count(), 3));
  const double ln = std::log(n);
  KrakenParams p;
  p.m = std::max<std::size_t>(3, static_cast<std::size_t>(std::ceil(ln)));
  p.s = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(ln)));
  p.hub_threshold = g.vertex_count() == 0 ? 0.0 : std::ceil(average_degree(g).to_double());
  p.separation = static_cast<int>(std::ceil(4.0 * std::sqrt(ln)));
  p.blob_target_size =
      std::max(p.s, static_cast<std::size_t>(std::ceil(std::pow(n, 0.125))));
  return p;
}

std::string_view to_string(CaseTag c) { return c == CaseTag::Hubs ? "hubs" : "blobs"; }

std::string_view to_string(KrakenFailure f) {
  switch (f) {
    case KrakenFailure::None: return "none";
    case KrakenFailure::NoCycle: return "no-cycle";
    case KrakenFailure::CycleTooLong: return "cycle-too-long";
    case KrakenFailure::AugmentationShortfall: return "augmentation-shortfall";
    case KrakenFailure::BlobShortage: return "blob-shortage";
  }
  return "unknown";
}

KrakenVerdict validate_kraken(const Graph& g, const Kraken& kr, const KrakenParams& p) {
  KrakenVerdict out;
  auto fail = [&](int i, int j, std::string clause) {
    out.pass = false;
    out.issues.push_back({i, j, std::move(clause)});
  };
  const auto& cv = kr.cycle.vertices();
  const std::size_t k = cv.size();
  if (!is_cycle_in(g, cv)) fail(-1, -1, "C is not a cycle of G");
  if (k != p.k) fail(-1, -1, "cycle length differs from k");
  if (kr.anchors.size() != k || kr.blobs.size() != k || kr.arms.size() != k) {
    fail(-1, -1, "anchors, blobs and arms must have one entry per cycle vertex");
    return out;
  }
  const std::size_t n = g.vertex_count();
  std::vector<char> on_cycle(n, 0);
  for (Vertex v : cv) {
    if (g.has_vertex(v)) on_cycle[v] = 1;
  }
  // owner[v] = 2i+j of the blob holding v
  std::vector<int> owner(n, -1);
  for (std::size_t i = 0; i < k; ++i) {
    for (int j = 0; j < 2; ++j) {
      const int id = static_cast<int>(2 * i) + j;
      const VertexSet& a = kr.blobs[i][j];
      if (a.size() != p.s) fail(static_cast<int>(i), j, "blob size differs from s");
      if (!a.contains(kr.anchors[i][j])) fail(static_cast<int>(i), j, "anchor outside its blob");
      bool in_range = true;
      for (Vertex v : a) {
        if (!g.has_vertex(v)) {
          in_range = false;
          continue;
        }
        if (on_cycle[v]) fail(static_cast<int>(i), j, "blob meets V(C)");
        if (owner[v] >= 0) {
          fail(static_cast<int>(i), j,
               "blob overlaps blob (" + std::to_string(owner[v] / 2) + "," +
                   std::to_string(owner[v] % 2) + ") at " + std::to_string(v));
        } else {
          owner[v] = id;
        }
      }
      if (!in_range) {
        fail(static_cast<int>(i), j, "blob vertex out of range");
        continue;
      }
      auto diam = induced_diameter(g, a);
      if (!diam || static_cast<std::size_t>(*diam) > p.m) {
        fail(static_cast<int>(i), j, "blob diameter exceeds m");
      }
    }
  }
  std::vector<int> interior_owner(n, -1);
  for (std::size_t i = 0; i < k; ++i) {
    for (int j = 0; j < 2; ++j) {
      const int id = static_cast<int>(2 * i) + j;
      const Path& r = kr.arms[i][j];
      if (r.vertices.size() < 2 || !is_path_in(g, r)) {
        fail(static_cast<int>(i), j, "arm is not a path of G");
        continue;
      }
      if (r.front() != cv[i]) fail(static_cast<int>(i), j, "arm does not start at v_i");
      if (r.back() != kr.anchors[i][j]) fail(static_cast<int>(i), j, "arm does not end at its anchor");
      if (r.length() > p.arm_cap()) fail(static_cast<int>(i), j, "arm longer than 10m");
      for (std::size_t t = 1; t + 1 < r.vertices.size(); ++t) {
        const Vertex v = r.vertices[t];
        if (on_cycle[v]) fail(static_cast<int>(i), j, "arm interior meets V(C)");
        if (owner[v] >= 0 && owner[v] != id) fail(static_cast<int>(i), j, "arm interior meets another blob");
        if (interior_owner[v] >= 0) {
          fail(static_cast<int>(i), j,
               "arm interior meets arm (" + std::to_string(interior_owner[v] / 2) + "," +
                   std::to_string(interior_owner[v] % 2) + ")");
        } else {
          interior_owner[v] = id;
        }
      }
    }
  }
  return out;
}

namespace {

// BFS order from `root` in g - blocked, smallest label first within a layer.
std::vector<Vertex> bfs_prefix(const Graph& g, Vertex root, const std::vector<char>& blocked,
                               std::size_t limit) {
  std::vector<Vertex> order{root};
  std::vector<char> seen(g.vertex_count(), 0);
  seen[root] = 1;
  for (std::size_t head = 0; head < order.size() && order.size() < limit; ++head) {
    for (Vertex u : g.neighbors(order[head])) {
      if (blocked[u] || seen[u]) continue;
      seen[u] = 1;
      order.push_back(u);
      if (order.size() >= limit) break;
    }
  }
  return order;
}

void block_ball(const Graph& g, const VertexSet& around, int radius,
                const std::vector<char>& forbidden, std::vector<char>& w) {
  if (around.empty() || radius < 0) return;
  auto dist = bfs_distances(g, around, forbidden, radius);
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v] != kUnreached) w[v] = 1;
  }
}

VertexSet mask_to_set(const std::vector<char>& mask) {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) out.push_back(static_cast<Vertex>(v));
  }
  return VertexSet(std::move(out));
}

}  // namespace

BlobFamily find_far_apart_blobs(const Graph& g, const VertexSet& forbidden, const Cycle& c,
                                const KrakenParams& p, const ExpanderParams& ep,
                                std::size_t count_target) {
  BlobFamily fam;
  fam.separation = p.separation;
  fam.diameter_bound = p.m;
  const std::size_t n = g.vertex_count();
  const std::vector<char> forb = mask_of(n, forbidden);
  for (std::size_t v = 0; v < n; ++v) {
    if (forb[v]) continue;
    std::size_t d = 0;
    for (Vertex u : g.neighbors(static_cast<Vertex>(v))) d += forb[u] ? 0 : 1;
    fam.max_degree = std::max(fam.max_degree, d);
  }
  const std::size_t size = std::max<std::size_t>(1, std::max(p.blob_target_size, p.s));
  std::vector<char> w = forb;
  std::vector<Vertex> cycle_free;
  for (Vertex v : c.vertices()) {
    if (g.has_vertex(v) && !forb[v]) cycle_free.push_back(v);
  }
  block_ball(g, VertexSet(cycle_free), p.separation - 1, forb, w);
  for (Vertex v : c.vertices()) {
    if (g.has_vertex(v)) w[v] = 1;
  }

  while (fam.blobs.size() < count_target) {
    auto big = find_large_ball_avoiding(g, mask_to_set(w), ep);
    if (!big) break;
    std::vector<Vertex> order = bfs_prefix(g, big->center, w, size);
    VertexSet blob(order);
    auto diam = induced_diameter(g, blob);
    while (order.size() > 1 && (!diam || static_cast<std::size_t>(*diam) > p.m)) {
      order.pop_back();
      blob = VertexSet(order);
      diam = induced_diameter(g, blob);
    }
    if (order.size() < p.s) {
      // too small to host a sub-blob; retire the whole component
      for (Vertex v : big->members) w[v] = 1;
      continue;
    }
    block_ball(g, blob, p.separation - 1, forb, w);
    for (Vertex v : blob) w[v] = 1;
    fam.blobs.push_back(std::move(blob));
  }
  return fam;
}

namespace {

struct ArmRecord {
  Path path;
  bool hub = false;
  VertexSet blob;  // for blob arms: the sub-blob B'
};

// Smallest-label completion of {u} to s vertices inside N(u), skipping taken.
std::optional<VertexSet> hub_blob(const Graph& g, Vertex u, std::size_t s,
                                  std::vector<char>& taken) {
  std::vector<Vertex> members{u};
  for (Vertex w : g.neighbors(u)) {
    if (members.size() >= s) break;
    if (!taken[w]) members.push_back(w);
  }
  if (members.size() < s) return std::nullopt;
  for (Vertex v : members) taken[v] = 1;
  return VertexSet(std::move(members));
}

}  // namespace

KrakenBuild build_kraken(const Graph& g, const ExpanderParams& ep, const KrakenParams& params) {
  KrakenBuild out;
  KrakenReport& rep = out.report;
  KrakenParams p = params;
  rep.params = p;
  const std::size_t n = g.vertex_count();

  auto cyc = shortest_cycle(g);
  if (!cyc) {
    rep.failure = KrakenFailure::NoCycle;
    rep.message = "graph is a forest";
    return out;
  }
  const Cycle& c = *cyc;
  const std::size_t k = c.length();
  rep.cycle_length = k;
  if (p.k_cap != 0 && k > p.k_cap) {
    rep.failure = KrakenFailure::CycleTooLong;
    rep.message = "girth " + std::to_string(k) + " exceeds the cap";
    return out;
  }
  p.k = k;
  p.validate();
  rep.params = p;

  std::vector<Vertex> hubs;
  for (std::size_t v = 0; v < n; ++v) {
    if (static_cast<double>(g.degree(static_cast<Vertex>(v))) + kTolerance >= p.hub_threshold) {
      hubs.push_back(static_cast<Vertex>(v));
    }
  }
  const VertexSet hub_set(hubs);
  rep.hubs = hubs.size();

  PathSystemSetup first;
  first.kind = TargetKind::Hubs;
  first.max_len = p.arm_cap();
  first.growth_radius = p.growth_radius;
  for (Vertex h : hubs) {
    if (!c.contains(h)) first.targets.push_back(VertexSet{h});
  }
  MinimalSystem level1 = build_minimal_path_system(g, c, std::move(first), ep);
  rep.first_level = level1.report;
  rep.hub_paths = level1.system.paths.size();
  const std::vector<int> hub_use = level1.system.usage();

  std::vector<Vertex> unsaturated;
  for (std::size_t i = 0; i < k; ++i) {
    if (hub_use[i] < 2) unsaturated.push_back(c[i]);
  }

  std::vector<std::vector<ArmRecord>> arms_at(k);
  for (const auto& lp : level1.system.paths) {
    arms_at[level1.system.position_of(lp.path.front())].push_back({lp.path, true, {}});
  }

  if (unsaturated.empty()) {
    rep.case_tag = CaseTag::Hubs;
  } else {
    rep.case_tag = CaseTag::Blobs;
    const VertexSet v_prime(unsaturated);
    const VertexSet forbidden = level1.system.path_vertices()
                                    .united(c.vertex_set())
                                    .united(hub_set)
                                    .minus(v_prime);
    std::size_t needed = 0;
    for (std::size_t i = 0; i < k; ++i) needed += static_cast<std::size_t>(2 - hub_use[i]);
    const std::size_t wanted = std::max<std::size_t>(
        static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(n), 0.125))), 4 * needed);
    rep.blobs_wanted = wanted;
    BlobFamily fam = find_far_apart_blobs(g, forbidden, c, p, ep, wanted);
    rep.blobs_found = fam.blobs.size();
    if (fam.blobs.size() < needed) {
      rep.failure = KrakenFailure::BlobShortage;
      rep.message = "found " + std::to_string(fam.blobs.size()) + " blobs, need at least " +
                    std::to_string(needed);
      return out;
    }
    PathSystemSetup second;
    second.kind = TargetKind::Blobs;
    second.max_len = p.arm_cap();
    second.growth_radius = p.growth_radius;
    second.forbidden = forbidden;
    second.capacity.resize(k);
    for (std::size_t i = 0; i < k; ++i) second.capacity[i] = 2 - hub_use[i];
    for (const VertexSet& b : fam.blobs) {
      std::vector<char> outside(n, 1);
      for (Vertex v : b) outside[v] = 0;
      std::vector<Vertex> sub = bfs_prefix(g, b.front(), outside, p.s);
      if (sub.size() == p.s) second.targets.push_back(VertexSet(std::move(sub)));
    }
    MinimalSystem level2 =
        build_minimal_path_system(g, c, std::move(second), ep, &level1.system);
    rep.second_level = level2.report;
    rep.blob_paths = level2.system.paths.size();
    for (const auto& lp : level2.system.paths) {
      arms_at[level2.system.position_of(lp.path.front())].push_back(
          {lp.path, false, level2.system.targets[lp.target]});
    }
  }

  for (std::size_t i = 0; i < k; ++i) {
    if (arms_at[i].size() < 2) {
      rep.failure = KrakenFailure::AugmentationShortfall;
      rep.message = "cycle vertex " + std::to_string(c[i]) + " has " +
                    std::to_string(arms_at[i].size()) + " arms";
      return out;
    }
  }

  Kraken kr;
  kr.cycle = c;
  kr.case_tag = *rep.case_tag;
  kr.anchors.resize(k);
  kr.blobs.resize(k);
  kr.arms.resize(k);
  kr.hub_anchor.resize(k);
  std::vector<char> taken(n, 0);
  for (Vertex v : c.vertices()) taken[v] = 1;
  for (std::size_t i = 0; i < k; ++i) {
    for (const ArmRecord& a : arms_at[i]) {
      for (Vertex v : a.path.vertices) taken[v] = 1;
      for (Vertex v : a.blob) taken[v] = 1;
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (int j = 0; j < 2; ++j) {
      const ArmRecord& a = arms_at[i][j];
      kr.arms[i][j] = a.path;
      kr.anchors[i][j] = a.path.back();
      kr.hub_anchor[i][j] = a.hub;
      if (a.hub) {
        auto blob = hub_blob(g, a.path.back(), p.s, taken);
        if (!blob) {
          rep.failure = KrakenFailure::BlobShortage;
          rep.message = "hub anchor " + std::to_string(a.path.back()) + " lacks " +
                        std::to_string(p.s - 1) + " free neighbours";
          return out;
        }
        kr.blobs[i][j] = std::move(*blob);
      } else {
        kr.blobs[i][j] = a.blob;
      }
    }
  }

  SideConditions& side = rep.side;
  side.all_anchors_hubs = true;
  std::vector<Vertex> plain;
  for (std::size_t i = 0; i < k; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (!hub_set.contains(kr.anchors[i][j])) {
        side.all_anchors_hubs = false;
        plain.push_back(kr.anchors[i][j]);
      }
    }
  }
  side.few_hubs = hubs.size() <= 2 * k;
  if (plain.size() >= 2) {
    const std::vector<char> no_hubs = mask_of(n, hub_set);
    int best = -1;
    for (std::size_t a = 0; a < plain.size(); ++a) {
      auto dist = bfs_distances(g, VertexSet{plain[a]}, no_hubs);
      for (std::size_t b = a + 1; b < plain.size(); ++b) {
        const int d = dist[plain[b]];
        if (d == kUnreached) continue;
        if (best < 0 || d < best) best = d;
      }
    }
    side.min_anchor_distance = best;
    side.anchors_separated = best < 0 || best >= p.separation;
  } else {
    side.anchors_separated = true;
  }

  KrakenVerdict verdict = validate_kraken(g, kr, p);
  if (!verdict.pass) {
    const auto& issue = verdict.issues.front();
    throw InvariantError("constructed kraken fails validation at (" + std::to_string(issue.i) +
                         "," + std::to_string(issue.j) + "): " + issue.clause);
  }
  out.kraken = std::move(kr);
  return out;
}

}  // namespace nestcyc
