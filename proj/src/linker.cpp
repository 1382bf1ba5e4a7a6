#include "nestcyc/linker.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nestcyc/error.hpp"

namespace nestcyc {

std::string_view to_string(TargetKind k) { return k == TargetKind::Hubs ? "hubs" : "blobs"; }

int PathSystem::position_of(Vertex v) const {
  const auto& cv = base_cycle.vertices();
  auto it = std::find(cv.begin(), cv.end(), v);
  return it == cv.end() ? -1 : static_cast<int>(it - cv.begin());
}

std::vector<int> PathSystem::usage() const {
  std::vector<int> u(base_cycle.length(), 0);
  for (const auto& lp : paths) {
    const int pos = position_of(lp.path.front());
    if (pos >= 0) ++u[pos];
  }
  return u;
}

std::size_t PathSystem::total_length() const {
  std::size_t total = 0;
  for (const auto& lp : paths) total += lp.path.length();
  return total;
}

VertexSet PathSystem::path_vertices() const {
  std::vector<Vertex> all;
  for (const auto& lp : paths) all.insert(all.end(), lp.path.vertices.begin(), lp.path.vertices.end());
  return VertexSet(std::move(all));
}

std::vector<char> PathSystem::used_targets() const {
  std::vector<char> used(targets.size(), 0);
  for (const auto& lp : paths) {
    if (lp.target < used.size()) used[lp.target] = 1;
  }
  return used;
}

int default_growth_radius(std::size_t n) {
  const double nn = static_cast<double>(std::max<std::size_t>(n, 3));
  const double ll = std::log(std::log(nn));
  const double r = ll > 0 ? std::ceil(std::pow(ll, 10.0)) : 1.0;
  return static_cast<int>(std::clamp(r, 1.0, static_cast<double>(std::max<std::size_t>(n, 1))));
}

PathSystem make_path_system(const Graph& g, const Cycle& c, PathSystemSetup setup) {
  if (!is_cycle_in(g, c.vertices())) throw InputError("base cycle is not a cycle of the graph");
  PathSystem s;
  s.base_cycle = c;
  s.kind = setup.kind;
  s.max_len = setup.max_len;
  s.forbidden = std::move(setup.forbidden);
  s.capacity = setup.capacity.empty() ? std::vector<int>(c.length(), 2) : std::move(setup.capacity);
  if (s.capacity.size() != c.length()) throw InputError("capacity must list every cycle vertex");
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex v : c.vertices()) seen[v] = 2;
  for (const VertexSet& t : setup.targets) {
    if (t.empty()) throw InputError("empty target");
    for (Vertex v : t) {
      if (!g.has_vertex(v)) throw InputError("target vertex out of range");
      if (seen[v] == 2) throw InputError("targets must be disjoint from the base cycle");
      if (seen[v] == 1) throw InputError("targets must be pairwise disjoint");
      seen[v] = 1;
    }
  }
  s.targets = std::move(setup.targets);
  return s;
}

std::vector<std::string> check_path_system(const Graph& g, const PathSystem& s) {
  std::vector<std::string> bad;
  const std::size_t n = g.vertex_count();
  std::vector<int> target_of(n, -1);
  for (std::size_t t = 0; t < s.targets.size(); ++t) {
    for (Vertex v : s.targets[t]) {
      if (g.has_vertex(v)) target_of[v] = static_cast<int>(t);
    }
  }
  std::vector<char> on_cycle = mask_of(n, s.base_cycle.vertex_set());
  std::vector<char> forbidden = mask_of(n, s.forbidden);
  std::vector<int> owner(n, -1);
  std::vector<int> target_users(s.targets.size(), 0);
  std::vector<int> use(s.base_cycle.length(), 0);

  for (std::size_t i = 0; i < s.paths.size(); ++i) {
    const auto& lp = s.paths[i];
    const auto& vs = lp.path.vertices;
    const std::string tag = "path " + std::to_string(i) + ": ";
    if (vs.size() < 2 || !is_path_in(g, lp.path)) {
      bad.push_back(tag + "not a path of length >= 1 in G");
      continue;
    }
    if (lp.path.length() > s.max_len) bad.push_back(tag + "longer than the cap");
    const int pos = s.position_of(vs.front());
    if (pos < 0) {
      bad.push_back(tag + "does not start on the base cycle");
    } else {
      ++use[pos];
    }
    if (forbidden[vs.front()]) bad.push_back(tag + "starts at a forbidden vertex");
    if (lp.target >= s.targets.size() || target_of[vs.back()] != static_cast<int>(lp.target)) {
      bad.push_back(tag + "does not end in its target");
    } else {
      ++target_users[lp.target];
    }
    for (std::size_t j = 1; j < vs.size(); ++j) {
      const Vertex v = vs[j];
      if (forbidden[v]) bad.push_back(tag + "uses forbidden vertex " + std::to_string(v));
      if (j + 1 < vs.size()) {
        if (on_cycle[v]) bad.push_back(tag + "internal vertex on the cycle");
        if (target_of[v] >= 0) bad.push_back(tag + "internal vertex inside a target");
      }
      if (on_cycle[v]) continue;
      if (owner[v] >= 0) {
        bad.push_back(tag + "meets path " + std::to_string(owner[v]) + " at " + std::to_string(v));
      }
      owner[v] = static_cast<int>(i);
    }
  }
  for (std::size_t pos = 0; pos < use.size(); ++pos) {
    if (use[pos] > s.capacity[pos]) {
      bad.push_back("cycle vertex " + std::to_string(s.base_cycle[pos]) + " over capacity");
    }
  }
  for (std::size_t t = 0; t < target_users.size(); ++t) {
    if (target_users[t] > 1) bad.push_back("target " + std::to_string(t) + " used twice");
  }
  return bad;
}

namespace {

void require_valid(const Graph& g, const PathSystem& s, const char* after) {
  auto bad = check_path_system(g, s);
  if (!bad.empty()) {
    throw InvariantError(std::string("path system invalid after ") + after + ": " + bad.front());
  }
}

// Vertices no new path may pass through: the cycle, every used path vertex,
// forbidden vertices and every target vertex. `exempt` is left open.
std::vector<char> blocked_for(const Graph& g, const PathSystem& s, Vertex exempt,
                              const PathSystem* also = nullptr) {
  std::vector<char> b(g.vertex_count(), 0);
  for (Vertex v : s.base_cycle.vertices()) b[v] = 1;
  for (const auto& lp : s.paths) {
    for (Vertex v : lp.path.vertices) b[v] = 1;
  }
  if (also != nullptr) {
    for (const auto& lp : also->paths) {
      for (Vertex v : lp.path.vertices) b[v] = 1;
    }
  }
  for (Vertex v : s.forbidden) b[v] = 1;
  for (const auto& t : s.targets) {
    for (Vertex v : t) b[v] = 1;
  }
  if (exempt >= 0) b[exempt] = 0;
  return b;
}

VertexSet set_of_mask(const std::vector<char>& mask) {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) out.push_back(static_cast<Vertex>(v));
  }
  return VertexSet(std::move(out));
}

Path concat(Path head, const Path& tail) {
  // tail.front() == head.back()
  head.vertices.insert(head.vertices.end(), tail.vertices.begin() + 1, tail.vertices.end());
  return head;
}

}  // namespace

bool augment_at(const Graph& g, PathSystem& s, Vertex v, const ExpanderParams& p,
                int growth_radius) {
  const int pos = s.position_of(v);
  if (pos < 0 || s.forbidden.contains(v)) return false;
  if (s.usage()[pos] >= s.capacity[pos]) return false;

  const std::size_t n = g.vertex_count();
  std::vector<char> blocked = blocked_for(g, s, v);
  const std::vector<char> used = s.used_targets();
  std::vector<int> target_of(n, -1);
  for (std::size_t t = 0; t < s.targets.size(); ++t) {
    if (used[t]) continue;
    for (Vertex x : s.targets[t]) target_of[x] = static_cast<int>(t);
  }
  std::vector<Vertex> landing;
  for (std::size_t y = 0; y < n; ++y) {
    if (blocked[y]) continue;
    for (Vertex t : g.neighbors(static_cast<Vertex>(y))) {
      if (target_of[t] >= 0) {
        landing.push_back(static_cast<Vertex>(y));
        break;
      }
    }
  }
  if (landing.empty()) return false;
  const VertexSet x2(std::move(landing));
  const VertexSet w = set_of_mask(blocked);

  const int r = growth_radius < 0 ? default_growth_radius(n) : growth_radius;
  GrowthResult grown = grow_ball_robust(g, VertexSet{v}, {}, w, r, p, ThinnessParams{10.0, 2, 1});
  const VertexSet& z = grown.ball;
  auto dist = bfs_distances(g, VertexSet{v}, blocked, r);

  Path full;
  Vertex nearest = -1;
  for (Vertex b : z) {
    if (!x2.contains(b)) continue;
    if (nearest < 0 || dist[b] < dist[nearest]) nearest = b;
  }
  if (nearest >= 0) {
    full = *shortest_path_between_sets(g, VertexSet{v}, VertexSet{nearest}, blocked);
  } else {
    auto q = link_sets(g, z, x2, w, s.max_len);
    if (!q) return false;
    Path prefix = *shortest_path_between_sets(g, VertexSet{v}, VertexSet{q->front()}, blocked);
    full = concat(std::move(prefix), *q);
  }
  Vertex end = -1;
  for (Vertex t : g.neighbors(full.back())) {
    if (target_of[t] >= 0) {
      end = t;
      break;
    }
  }
  full.vertices.push_back(end);
  if (full.length() > s.max_len) return false;
  s.paths.push_back({std::move(full), static_cast<std::size_t>(target_of[end])});
  return true;
}

void saturate(const Graph& g, PathSystem& s, const ExpanderParams& p, int growth_radius) {
  std::vector<Vertex> order = s.base_cycle.vertices();
  std::sort(order.begin(), order.end());
  bool progress = true;
  while (progress) {
    progress = false;
    for (Vertex v : order) {
      if (augment_at(g, s, v, p, growth_radius)) {
        require_valid(g, s, "augmentation");
        progress = true;
        break;
      }
    }
  }
}

PathSystem build_path_system(const Graph& g, const Cycle& c, PathSystemSetup setup,
                             const ExpanderParams& p) {
  const int r = setup.growth_radius;
  PathSystem s = make_path_system(g, c, std::move(setup));
  saturate(g, s, p, r);
  return s;
}

std::optional<LinkedPath> best_replacement(const Graph& g, const PathSystem& s,
                                           std::size_t index) {
  const LinkedPath& current = s.paths.at(index);
  const Vertex c = current.path.front();
  PathSystem others = s;
  others.paths.erase(others.paths.begin() + static_cast<std::ptrdiff_t>(index));
  std::vector<char> blocked = blocked_for(g, others, c);
  const std::vector<char> used = others.used_targets();
  auto dist = bfs_distances(g, VertexSet{c}, blocked);

  std::size_t best_len = current.path.length();
  Vertex best_end = -1;
  std::size_t best_target = 0;
  for (std::size_t t = 0; t < s.targets.size(); ++t) {
    if (used[t]) continue;
    for (Vertex end : s.targets[t]) {
      for (Vertex y : g.neighbors(end)) {
        if (dist[y] == kUnreached) continue;
        const std::size_t len = static_cast<std::size_t>(dist[y]) + 1;
        if (len < best_len || (len == best_len && best_end >= 0 && end < best_end)) {
          best_len = len;
          best_end = end;
          best_target = t;
        }
      }
    }
  }
  if (best_end < 0) return std::nullopt;
  std::vector<Vertex> approach;
  for (Vertex y : g.neighbors(best_end)) {
    if (dist[y] != kUnreached && static_cast<std::size_t>(dist[y]) + 1 == best_len) {
      approach.push_back(y);
    }
  }
  Path prefix = *shortest_path_between_sets(g, VertexSet{c}, VertexSet(approach), blocked);
  prefix.vertices.push_back(best_end);
  return LinkedPath{std::move(prefix), best_target};
}

PathSystem shorten_path_system(const Graph& g, PathSystem s) {
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 0; i < s.paths.size(); ++i) {
      auto repl = best_replacement(g, s, i);
      if (!repl || repl->path.length() >= s.paths[i].path.length()) continue;
      s.paths[i] = std::move(*repl);
      require_valid(g, s, "shortening");
      improved = true;
    }
  }
  return s;
}

// -------------------------------------------------------------------- audit

bool AuditReport::paths_pass() const {
  for (const auto& pa : paths) {
    if (pa.contact.verdict == Verdict::Fail || pa.far.verdict == Verdict::Fail) return false;
  }
  return true;
}

bool AuditReport::pass() const {
  if (!applicable) return true;
  if (cycle_contact.verdict == Verdict::Fail || thinness.verdict == Verdict::Fail) return false;
  if (combined && combined->verdict == Verdict::Fail) return false;
  return paths_pass();
}

namespace {

void record(InequalityCheck& chk, int radius, std::size_t lhs, double rhs) {
  if (chk.verdict == Verdict::Fail) return;
  if (static_cast<double>(lhs) > rhs + kTolerance) {
    chk.verdict = Verdict::Fail;
    chk.radius = radius;
    chk.lhs = lhs;
    chk.rhs = rhs;
  }
}

int cycle_distance(int a, int b, int k) {
  const int d = std::abs(a - b);
  return std::min(d, k - d);
}

}  // namespace

AuditReport audit_path_system(const Graph& g, const PathSystem& s, Vertex v,
                              const PathSystem* first_level, int horizon) {
  AuditReport rep;
  rep.center = v;
  const int pos = s.position_of(v);
  if (pos < 0) return rep;
  int in_paths = s.usage()[pos];
  if (first_level != nullptr) {
    const int fpos = first_level->position_of(v);
    if (fpos >= 0) in_paths += first_level->usage()[fpos];
  }
  if (in_paths >= 2) return rep;
  rep.applicable = true;

  const int k = static_cast<int>(s.base_cycle.length());
  rep.horizon = horizon < 0 ? k : horizon;
  const std::size_t n = g.vertex_count();

  // Ball in G - (V(C) \ {v}) and its contacts with V(C).
  {
    std::vector<char> on_cycle = mask_of(n, s.base_cycle.vertex_set());
    on_cycle[v] = 0;
    ThinnessVerdict tv = is_thin_around(g, s.base_cycle.vertex_set().minus(VertexSet{v}),
                                        VertexSet{v}, ThinnessParams{2.0, 1, rep.horizon});
    for (int i = 1; i <= rep.horizon; ++i) {
      record(rep.cycle_contact, i, tv.contacts_by_radius[i - 1], 2.0 * i);
    }
  }

  // U = V(C) u V(S) (u V(first)), W = U \ {v}.
  std::vector<char> in_w = mask_of(n, s.base_cycle.vertex_set());
  for (const auto& lp : s.paths) {
    for (Vertex x : lp.path.vertices) in_w[x] = 1;
  }
  if (first_level != nullptr) {
    for (const auto& lp : first_level->paths) {
      for (Vertex x : lp.path.vertices) in_w[x] = 1;
    }
  }
  in_w[v] = 0;
  // Per-path contacts skip the cycle endpoint, which the cycle count covers.
  std::vector<std::vector<int>> paths_at(n);
  for (std::size_t i = 0; i < s.paths.size(); ++i) {
    for (Vertex x : s.paths[i].path.vertices) {
      if (!s.base_cycle.contains(x)) paths_at[x].push_back(static_cast<int>(i));
    }
  }
  std::vector<std::size_t> path_contacts(s.paths.size(), 0);
  std::vector<int> start_pos(s.paths.size());
  for (std::size_t i = 0; i < s.paths.size(); ++i) start_pos[i] = s.position_of(s.paths[i].path.front());
  rep.paths.resize(s.paths.size());
  for (std::size_t i = 0; i < s.paths.size(); ++i) rep.paths[i].path_index = i;

  std::vector<char> in_ball(n, 0);
  std::vector<char> touched(n, 0);
  std::vector<Vertex> frontier{v};
  in_ball[v] = 1;
  std::size_t w_contacts = 0;
  const double lambda = first_level != nullptr ? 18.0 : 10.0;
  InequalityCheck aggregate;
  for (int i = 1; i <= rep.horizon; ++i) {
    std::vector<Vertex> next;
    for (Vertex x : frontier) {
      for (Vertex y : g.neighbors(x)) {
        if (in_ball[y]) continue;
        if (in_w[y]) {
          if (!touched[y]) {
            touched[y] = 1;
            ++w_contacts;
            for (int pi : paths_at[y]) ++path_contacts[pi];
          }
          continue;
        }
        in_ball[y] = 1;
        next.push_back(y);
      }
    }
    frontier = std::move(next);
    for (std::size_t pi = 0; pi < s.paths.size(); ++pi) {
      record(rep.paths[pi].contact, i, path_contacts[pi], static_cast<double>(i));
      if (start_pos[pi] >= 0 && cycle_distance(start_pos[pi], pos, k) > 4 * i) {
        record(rep.paths[pi].far, i, path_contacts[pi], 0.0);
      }
    }
    record(aggregate, i, w_contacts, lambda * i * i);
  }

  if (first_level == nullptr) {
    rep.thinness = aggregate;
  } else {
    rep.combined = aggregate;
    VertexSet u2 = s.base_cycle.vertex_set().united(first_level->path_vertices()).minus(VertexSet{v});
    ThinnessVerdict tv = is_thin_around(g, u2, VertexSet{v}, ThinnessParams{10.0, 2, rep.horizon});
    if (!tv.pass) {
      rep.thinness = {Verdict::Fail, tv.violating_radius, tv.contacts, tv.bound};
    }
  }
  return rep;
}

bool repair_from_audit(const Graph& g, PathSystem& s, Vertex v, const AuditReport& audit,
                       const PathSystem* first_level) {
  if (!audit.applicable || audit.paths_pass()) return false;
  const int pos = s.position_of(v);
  if (pos < 0 || s.usage()[pos] >= s.capacity[pos]) return false;
  std::vector<char> blocked = blocked_for(g, s, v, first_level);
  auto dist = bfs_distances(g, VertexSet{v}, blocked);

  for (const auto& pa : audit.paths) {
    if (pa.contact.verdict != Verdict::Fail && pa.far.verdict != Verdict::Fail) continue;
    const LinkedPath& lp = s.paths[pa.path_index];
    const auto& vs = lp.path.vertices;
    std::size_t best_len = lp.path.length();
    std::size_t best_pos = 0;
    Vertex best_via = -1;
    for (std::size_t at = 1; at < vs.size(); ++at) {
      for (Vertex x : g.neighbors(vs[at])) {
        if (dist[x] == kUnreached) continue;
        const std::size_t len = static_cast<std::size_t>(dist[x]) + 1 + (vs.size() - 1 - at);
        if (len < best_len) {
          best_len = len;
          best_pos = at;
          best_via = x;
        }
      }
    }
    if (best_via < 0) continue;
    Path prefix = *shortest_path_between_sets(g, VertexSet{v}, VertexSet{best_via}, blocked);
    prefix.vertices.insert(prefix.vertices.end(), vs.begin() + static_cast<std::ptrdiff_t>(best_pos),
                           vs.end());
    s.paths[pa.path_index].path = std::move(prefix);
    require_valid(g, s, "audit repair");
    return true;
  }
  return false;
}

MinimalSystem build_minimal_path_system(const Graph& g, const Cycle& c, PathSystemSetup setup,
                                        const ExpanderParams& p, const PathSystem* first_level,
                                        std::size_t max_rounds) {
  const int r = setup.growth_radius;
  MinimalSystem out;
  out.system = make_path_system(g, c, std::move(setup));
  PathSystem& s = out.system;
  MinimalSystemReport& rep = out.report;
  saturate(g, s, p, r);

  std::vector<Vertex> order = c.vertices();
  std::sort(order.begin(), order.end());
  while (true) {
    if (rep.rounds >= max_rounds) {
      rep.note = "repair round cap reached";
      rep.audits_clean = false;
      break;
    }
    ++rep.rounds;
    s = shorten_path_system(g, std::move(s));
    std::vector<AuditReport> audits;
    for (Vertex v : order) {
      AuditReport a = audit_path_system(g, s, v, first_level);
      if (a.applicable) audits.push_back(std::move(a));
    }
    bool repaired = false;
    bool any_path_failure = false;
    for (const auto& a : audits) {
      if (a.paths_pass()) continue;
      any_path_failure = true;
      if (repair_from_audit(g, s, a.center, a, first_level)) {
        repaired = true;
        break;
      }
    }
    if (repaired) {
      ++rep.repairs;
      saturate(g, s, p, r);
      continue;
    }
    rep.audits_clean = std::all_of(audits.begin(), audits.end(),
                                   [](const AuditReport& a) { return a.pass(); });
    if (any_path_failure) rep.note = "audit failure without an improving reroute";
    rep.final_audits = std::move(audits);
    break;
  }
  return out;
}

}  // namespace nestcyc
