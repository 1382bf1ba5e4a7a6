#include "nestcyc/assembler.hpp"

#include <algorithm>
#include <string>

#include "nestcyc/error.hpp"

namespace nestcyc {

namespace {

std::string tag(std::size_t i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Component of `root` in g[keep].
std::vector<Vertex> component_in(const Graph& g, Vertex root, const std::vector<char>& keep) {
  std::vector<char> blocked(keep.size());
  for (std::size_t v = 0; v < keep.size(); ++v) blocked[v] = keep[v] ? 0 : 1;
  auto dist = bfs_distances(g, VertexSet{root}, blocked);
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v] != kUnreached) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

}  // namespace

ExpandedBlobs expand_anchor_blobs(const Graph& g, const Kraken& kr, const VertexSet& hubs, int r,
                                  std::size_t hub_extra) {
  if (r < 0) throw InputError("expansion radius must be non-negative");
  const std::size_t n = g.vertex_count();
  const std::size_t k = kr.cycle.length();
  ExpandedBlobs ex;
  ex.sets.resize(k);
  ex.radius.assign(k, {r, r});

  std::vector<char> y_all(n, 0);
  for (Vertex v : kr.cycle.vertices()) y_all[v] = 1;
  for (const auto& pair : kr.arms) {
    for (const Path& arm : pair) {
      for (Vertex v : arm.vertices) y_all[v] = 1;
    }
  }
  std::vector<int> blob_owner(n, -1);
  for (std::size_t i = 0; i < k; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (Vertex v : kr.blobs[i][j]) blob_owner[v] = static_cast<int>(2 * i) + j;
    }
  }
  const std::vector<char> is_hub = mask_of(n, hubs);

  auto grow = [&](std::size_t i, int j) {
    const Vertex u = kr.anchors[i][j];
    const int id = static_cast<int>(2 * i) + j;
    std::vector<char> keep(n, 0);
    for (Vertex v : kr.blobs[i][j]) keep[v] = y_all[v] ? 0 : 1;
    keep[u] = 1;
    const std::vector<Vertex> base = component_in(g, u, keep);
    std::vector<char> blocked(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      blocked[v] = (y_all[v] || is_hub[v] || (blob_owner[v] >= 0 && blob_owner[v] != id)) ? 1 : 0;
    }
    for (Vertex v : base) blocked[v] = 0;
    auto dist = bfs_distances(g, VertexSet(base), blocked, ex.radius[i][j]);
    std::vector<Vertex> members;
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] != kUnreached) members.push_back(static_cast<Vertex>(v));
    }
    ex.sets[i][j] = VertexSet(std::move(members));
  };

  std::vector<std::pair<std::size_t, int>> plain;
  for (std::size_t i = 0; i < k; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (kr.hub_anchor[i][j]) {
        ex.radius[i][j] = -1;
      } else {
        plain.emplace_back(i, j);
      }
    }
  }
  for (auto [i, j] : plain) grow(i, j);
  while (true) {
    std::vector<char> shrink(plain.size(), 0);
    bool any = false;
    for (std::size_t a = 0; a < plain.size(); ++a) {
      for (std::size_t b = a + 1; b < plain.size(); ++b) {
        const auto& sa = ex.sets[plain[a].first][plain[a].second];
        const auto& sb = ex.sets[plain[b].first][plain[b].second];
        if (!sa.intersects(sb)) continue;
        shrink[a] = shrink[b] = 1;
        any = true;
      }
    }
    if (!any) break;
    bool moved = false;
    for (std::size_t a = 0; a < plain.size(); ++a) {
      if (!shrink[a]) continue;
      int& rad = ex.radius[plain[a].first][plain[a].second];
      if (rad > 0) {
        --rad;
        moved = true;
        grow(plain[a].first, plain[a].second);
      }
    }
    if (!moved) throw AssemblyError("expanded blobs overlap at radius 0");
  }

  std::vector<char> taken = y_all;
  for (std::size_t v = 0; v < n; ++v) {
    if (blob_owner[v] >= 0) taken[v] = 1;
  }
  for (auto [i, j] : plain) {
    for (Vertex v : ex.sets[i][j]) taken[v] = 1;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (!kr.hub_anchor[i][j]) continue;
      std::vector<Vertex> members(kr.blobs[i][j].begin(), kr.blobs[i][j].end());
      std::size_t extra = 0;
      for (Vertex w : g.neighbors(kr.anchors[i][j])) {
        if (extra >= hub_extra) break;
        if (taken[w]) continue;
        taken[w] = 1;
        members.push_back(w);
        ++extra;
      }
      ex.sets[i][j] = VertexSet(std::move(members));
    }
  }

  std::vector<int> owner(n, -1);
  for (std::size_t i = 0; i < k; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (!ex.sets[i][j].contains(kr.anchors[i][j])) {
        throw AssemblyError("expanded blob " + tag(i, j) + " lost its anchor");
      }
      for (Vertex v : ex.sets[i][j]) {
        if (owner[v] >= 0) {
          throw AssemblyError("expanded blobs " + tag(i, j) + " and " +
                              tag(owner[v] / 2, owner[v] % 2) + " overlap");
        }
        owner[v] = static_cast<int>(2 * i) + j;
      }
    }
  }
  return ex;
}

std::vector<Link> link_arms(const Graph& g, const Kraken& kr, const ExpandedBlobs& ex,
                            const LinkCaps& caps) {
  const std::size_t n = g.vertex_count();
  const std::size_t k = kr.cycle.length();
  std::vector<char> base(n, 0);
  for (Vertex v : kr.cycle.vertices()) base[v] = 1;
  for (const auto& pair : kr.arms) {
    for (const Path& arm : pair) {
      for (Vertex v : arm.vertices) base[v] = 1;
    }
  }
  for (const auto& pair : ex.sets) {
    for (const VertexSet& s : pair) {
      for (Vertex v : s) base[v] = 1;
    }
  }

  std::vector<Link> links;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t next = (i + 1) % k;
    const VertexSet& from = ex.sets[i][1];
    const VertexSet& to = ex.sets[next][0];
    std::vector<char> blocked = base;
    for (Vertex v : from) blocked[v] = 0;
    for (Vertex v : to) blocked[v] = 0;
    auto q = shortest_path_between_sets(g, from, to, blocked);
    if (!q) throw AssemblyError("link " + std::to_string(i) + ": blobs not connected");
    if (q->length() > caps.q_len) {
      throw AssemblyError("link " + std::to_string(i) + ": shortest link has length " +
                          std::to_string(q->length()));
    }
    std::vector<char> outside_from(n, 1);
    for (Vertex v : from) outside_from[v] = 0;
    std::vector<char> outside_to(n, 1);
    for (Vertex v : to) outside_to[v] = 0;
    auto head = shortest_path_between_sets(g, VertexSet{kr.anchors[i][1]}, VertexSet{q->front()},
                                           outside_from);
    auto tail = shortest_path_between_sets(g, VertexSet{q->back()}, VertexSet{kr.anchors[next][0]},
                                           outside_to);
    if (!head || !tail) {
      throw AssemblyError("link " + std::to_string(i) + ": expanded blob is disconnected");
    }
    Link link;
    link.lead = head->length();
    link.trail = tail->length();
    link.p = *head;
    link.p.vertices.insert(link.p.vertices.end(), q->vertices.begin() + 1, q->vertices.end());
    link.p.vertices.insert(link.p.vertices.end(), tail->vertices.begin() + 1, tail->vertices.end());
    if (link.p.length() > caps.p_len) {
      throw AssemblyError("link " + std::to_string(i) + ": path of length " +
                          std::to_string(link.p.length()) + " exceeds the cap");
    }
    for (Vertex v : link.p.vertices) base[v] = 1;
    links.push_back(std::move(link));
  }
  return links;
}

std::vector<std::string> certificate_issues(const Graph& g, const NestedCertificate& c) {
  std::vector<std::string> bad;
  const auto& outer = c.outer.vertices();
  const auto& inner = c.inner.vertices();
  if (!is_cycle_in(g, outer)) bad.push_back("outer is not a cycle of G");
  if (!is_cycle_in(g, inner)) bad.push_back("inner is not a cycle of G");
  if (!bad.empty()) return bad;
  const auto outer_edges = c.outer.edges();
  for (const Edge& e : c.inner.edges()) {
    if (std::binary_search(outer_edges.begin(), outer_edges.end(), e)) {
      bad.push_back("shared edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
  }
  std::vector<int> pos(g.vertex_count(), -1);
  for (std::size_t i = 0; i < outer.size(); ++i) pos[outer[i]] = static_cast<int>(i);
  std::size_t descents = 0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    const int a = pos[inner[i]];
    const int b = pos[inner[(i + 1) % inner.size()]];
    if (a < 0) {
      bad.push_back("inner vertex " + std::to_string(inner[i]) + " missing from outer");
      return bad;
    }
    if (b < a) ++descents;
  }
  if (descents != 1 && descents != inner.size() - 1) {
    bad.push_back("inner vertices out of cyclic order along outer");
  }
  if (c.inner_positions.size() != inner.size()) {
    bad.push_back("inner_positions has the wrong size");
  } else {
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (static_cast<int>(c.inner_positions[i]) != pos[inner[i]]) {
        bad.push_back("inner_positions disagrees with outer");
        break;
      }
    }
  }
  return bad;
}

NestedCertificate assemble(const Graph& g, const Kraken& kr, const std::vector<Link>& links) {
  const std::size_t k = kr.cycle.length();
  if (links.size() != k) throw InvariantError("assemble needs one link per cycle vertex");
  NestedCertificate cert;
  cert.case_tag = kr.case_tag;
  std::vector<Vertex> seq;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t next = (i + 1) % k;
    const Path& out_arm = kr.arms[i][1];
    const Path& in_arm = kr.arms[next][0];
    const Link& link = links[i];
    if (link.p.front() != out_arm.back() || link.p.back() != in_arm.back()) {
      throw InvariantError("link " + std::to_string(i) + " does not join its anchors");
    }
    seq.push_back(kr.cycle[i]);
    seq.insert(seq.end(), out_arm.vertices.begin() + 1, out_arm.vertices.end());
    seq.insert(seq.end(), link.p.vertices.begin() + 1, link.p.vertices.end() - 1);
    const Path back = in_arm.reversed();
    seq.insert(seq.end(), back.vertices.begin(), back.vertices.end() - 1);

    const auto& lv = link.p.vertices;
    cert.segments.push_back({"arm", static_cast<int>(i), 1, out_arm.vertices});
    cert.segments.push_back({"blob", static_cast<int>(i), 1,
                             {lv.begin(), lv.begin() + static_cast<std::ptrdiff_t>(link.lead) + 1}});
    cert.segments.push_back(
        {"link", static_cast<int>(i), -1,
         {lv.begin() + static_cast<std::ptrdiff_t>(link.lead),
          lv.end() - static_cast<std::ptrdiff_t>(link.trail)}});
    cert.segments.push_back({"blob", static_cast<int>(next), 0,
                             {lv.end() - static_cast<std::ptrdiff_t>(link.trail) - 1, lv.end()}});
    cert.segments.push_back({"arm", static_cast<int>(next), 0, back.vertices});
  }
  try {
    cert.outer = Cycle(seq);
  } catch (const InputError& e) {
    throw InvariantError(std::string("assembled outer walk is not a cycle: ") + e.what());
  }
  cert.inner = kr.cycle;
  const auto& outer = cert.outer.vertices();
  for (Vertex v : cert.inner.vertices()) {
    cert.inner_positions.push_back(
        static_cast<std::size_t>(std::find(outer.begin(), outer.end(), v) - outer.begin()));
  }
  auto bad = certificate_issues(g, cert);
  if (!bad.empty()) throw InvariantError("assembled certificate invalid: " + bad.front());
  return cert;
}

}  // namespace nestcyc
