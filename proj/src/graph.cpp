#include "nestcyc/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "nestcyc/error.hpp"

namespace nestcyc {

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::initializer_list<Vertex> init) : VertexSet(std::vector<Vertex>(init)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::united(const VertexSet& other) const {
  std::vector<Vertex> out;
  out.reserve(size() + other.size());
  std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  VertexSet r;
  r.members_ = std::move(out);
  return r;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  VertexSet r;
  r.members_ = std::move(out);
  return r;
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto a = begin();
  auto b = other.begin();
  while (a != end() && b != other.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

Path Path::reversed() const {
  Path p{vertices};
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

// -------------------------------------------------------------------- Cycle

std::vector<Vertex> Cycle::canonical(std::vector<Vertex> seq) {
  if (seq.empty()) return seq;
  auto min_it = std::min_element(seq.begin(), seq.end());
  std::rotate(seq.begin(), min_it, seq.end());
  if (seq.size() > 2 && seq[1] > seq.back()) std::reverse(seq.begin() + 1, seq.end());
  return seq;
}

Cycle::Cycle(std::vector<Vertex> vertices) {
  if (vertices.size() < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Vertex> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("cycle repeats a vertex");
  }
  vertices_ = canonical(std::move(vertices));
}

std::vector<Edge> Cycle::edges() const {
  std::vector<Edge> out;
  out.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    Vertex a = vertices_[i];
    Vertex b = vertices_[(i + 1) % vertices_.size()];
    out.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }
  return out;
}

bool Cycle::contains(Vertex v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

// -------------------------------------------------------------------- Graph

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph build_graph(std::size_t n, std::span<const Edge> edge_list) {
  if (n > static_cast<std::size_t>(std::numeric_limits<Vertex>::max())) {
    throw InputError("too many vertices");
  }
  Graph g;
  g.edges_.reserve(edge_list.size());
  for (const Edge& e : edge_list) {
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n ||
        static_cast<std::size_t>(e.v) >= n) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") references a vertex outside 0.." + std::to_string(n) + "-1");
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : g.edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.targets_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : g.edges_) {
    g.targets_[fill[e.u]++] = e.v;
    g.targets_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  return g;
}

Graph build_graph(std::size_t n, std::initializer_list<Edge> edge_list) {
  return build_graph(n, std::span<const Edge>(edge_list.begin(), edge_list.size()));
}

Rational average_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw InputError("average degree of the empty graph");
  return Rational::make(2 * static_cast<std::int64_t>(g.edge_count()),
                        static_cast<std::int64_t>(g.vertex_count()));
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  s.average = average_degree(g);
  s.minimum = std::numeric_limits<std::size_t>::max();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    s.minimum = std::min(s.minimum, g.degree(static_cast<Vertex>(v)));
    s.maximum = std::max(s.maximum, g.degree(static_cast<Vertex>(v)));
  }
  return s;
}

VertexSet InducedSubgraph::lift(const VertexSet& s) const {
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(to_original[v]);
  return VertexSet(std::move(out));
}

std::vector<Vertex> InducedSubgraph::lift(const std::vector<Vertex>& seq) const {
  std::vector<Vertex> out;
  out.reserve(seq.size());
  for (Vertex v : seq) out.push_back(to_original[v]);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedSubgraph sub;
  std::vector<Vertex> relabel(g.vertex_count(), -1);
  for (Vertex v : keep) {
    if (!g.has_vertex(v)) throw InputError("induced subgraph vertex out of range");
    relabel[v] = static_cast<Vertex>(sub.to_original.size());
    sub.to_original.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (relabel[e.u] >= 0 && relabel[e.v] >= 0) edges.push_back({relabel[e.u], relabel[e.v]});
  }
  sub.graph = build_graph(sub.to_original.size(), edges);
  return sub;
}

std::vector<char> mask_of(std::size_t n, const VertexSet& s) {
  std::vector<char> m(n, 0);
  for (Vertex v : s) {
    if (v >= 0 && static_cast<std::size_t>(v) < n) m[v] = 1;
  }
  return m;
}

// ---------------------------------------------------------------------- BFS

std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources,
                               const std::vector<char>& blocked, int max_radius) {
  const std::size_t n = g.vertex_count();
  std::vector<int> dist(n, kUnreached);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s : sources) {
    if (!g.has_vertex(s)) throw InputError("source vertex out of range");
    if (!blocked.empty() && blocked[s]) continue;
    dist[s] = 0;
    queue.push_back(s);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    if (max_radius >= 0 && dist[u] >= max_radius) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] != kUnreached || (!blocked.empty() && blocked[w])) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

namespace {

void require_disjoint(const VertexSet& x, const VertexSet& avoid, const char* what) {
  if (x.intersects(avoid)) throw InputError(std::string(what) + ": source set meets the avoided set");
}

void require_in_range(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (!g.has_vertex(v)) throw InputError("vertex " + std::to_string(v) + " out of range");
  }
}

}  // namespace

VertexSet sphere(const Graph& g, const VertexSet& x, int radius, const VertexSet& avoid) {
  require_in_range(g, x);
  require_disjoint(x, avoid, "sphere");
  if (radius < 0) throw InputError("negative radius");
  auto dist = bfs_distances(g, x, mask_of(g.vertex_count(), avoid), radius);
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v] == radius) out.push_back(static_cast<Vertex>(v));
  }
  return VertexSet(std::move(out));
}

VertexSet ball(const Graph& g, const VertexSet& x, int radius, const VertexSet& avoid) {
  require_in_range(g, x);
  require_disjoint(x, avoid, "ball");
  if (radius < 0) throw InputError("negative radius");
  auto dist = bfs_distances(g, x, mask_of(g.vertex_count(), avoid), radius);
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v] != kUnreached) out.push_back(static_cast<Vertex>(v));
  }
  return VertexSet(std::move(out));
}

VertexSet neighborhood(const Graph& g, const VertexSet& x) {
  std::vector<char> in_x = mask_of(g.vertex_count(), x);
  std::vector<Vertex> out;
  for (Vertex v : x) {
    for (Vertex w : g.neighbors(v)) {
      if (!in_x[w]) out.push_back(w);
    }
  }
  return VertexSet(std::move(out));
}

// -------------------------------------------------------------- shortest cycle

std::optional<std::size_t> girth(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<int> dist(n, kUnreached);
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (g.degree(static_cast<Vertex>(r)) < 2) continue;
    queue.clear();
    queue.push_back(static_cast<Vertex>(r));
    dist[r] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      if (2 * static_cast<std::size_t>(dist[u]) + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, static_cast<std::size_t>(dist[u] + dist[w] + 1));
        }
      }
    }
    for (Vertex v : queue) {
      dist[v] = kUnreached;
      parent[v] = -1;
    }
    if (best == 3) break;
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

namespace {

// Depth-first search for the lexicographically first cycle of exactly
// `target` vertices whose minimum vertex is path[0]. `back_dist` holds
// distances to path[0] in the subgraph induced on labels >= path[0].
bool lex_first_cycle(const Graph& g, std::size_t target, const std::vector<int>& back_dist,
                     std::vector<Vertex>& path, std::vector<char>& on_path) {
  const Vertex s = path.front();
  const Vertex x = path.back();
  if (path.size() == target) return g.has_edge(x, s);
  const int remaining = static_cast<int>(target - path.size());
  for (Vertex y : g.neighbors(x)) {
    if (y <= s || on_path[y]) continue;
    if (back_dist[y] == kUnreached || back_dist[y] > remaining) continue;
    path.push_back(y);
    on_path[y] = 1;
    if (lex_first_cycle(g, target, back_dist, path, on_path)) return true;
    on_path[y] = 0;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<Cycle> shortest_cycle(const Graph& g) {
  const auto len = girth(g);
  if (!len) return std::nullopt;
  const std::size_t n = g.vertex_count();
  std::vector<char> below(n, 0);
  std::vector<char> on_path(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (s > 0) below[s - 1] = 1;
    if (g.degree(static_cast<Vertex>(s)) < 2) continue;
    auto back_dist = bfs_distances(g, VertexSet{static_cast<Vertex>(s)}, below,
                                   static_cast<int>(*len));
    std::vector<Vertex> path{static_cast<Vertex>(s)};
    on_path[s] = 1;
    const bool found = lex_first_cycle(g, *len, back_dist, path, on_path);
    for (Vertex v : path) on_path[v] = 0;
    if (found) return Cycle(std::move(path));
  }
  throw InvariantError("girth found but no cycle of that length recovered");
}

// ---------------------------------------------------------- set-to-set paths

std::optional<Path> shortest_path_between_sets(const Graph& g, const VertexSet& x1,
                                               const VertexSet& x2,
                                               const std::vector<char>& blocked) {
  if (x1.empty() || x2.empty()) throw InputError("path endpoints sets must be nonempty");
  auto d2 = bfs_distances(g, x2, blocked);
  Vertex start = -1;
  for (Vertex x : x1) {
    if (!blocked.empty() && blocked[x]) continue;
    if (d2[x] == kUnreached) continue;
    if (start < 0 || d2[x] < d2[start]) start = x;
  }
  if (start < 0) return std::nullopt;
  Path p{{start}};
  Vertex cur = start;
  while (d2[cur] > 0) {
    for (Vertex y : g.neighbors(cur)) {
      if (d2[y] == d2[cur] - 1) {
        cur = y;
        break;
      }
    }
    p.vertices.push_back(cur);
  }
  return p;
}

std::optional<Path> shortest_path_between_sets(const Graph& g, const VertexSet& x1,
                                               const VertexSet& x2, const VertexSet& avoid) {
  require_in_range(g, x1);
  require_in_range(g, x2);
  require_disjoint(x1, avoid, "shortest_path_between_sets");
  require_disjoint(x2, avoid, "shortest_path_between_sets");
  return shortest_path_between_sets(g, x1, x2, mask_of(g.vertex_count(), avoid));
}

bool is_path_in(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return false;
  std::vector<Vertex> sorted = p.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (Vertex v : p.vertices) {
    if (!g.has_vertex(v)) return false;
  }
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    if (!g.has_edge(p.vertices[i], p.vertices[i + 1])) return false;
  }
  return true;
}

bool is_cycle_in(const Graph& g, std::span<const Vertex> seq) {
  if (seq.size() < 3) return false;
  Path as_path{std::vector<Vertex>(seq.begin(), seq.end())};
  return is_path_in(g, as_path) && g.has_edge(seq.back(), seq.front());
}

std::optional<int> induced_diameter(const Graph& g, const VertexSet& s) {
  if (s.empty()) return std::nullopt;
  std::vector<char> blocked(g.vertex_count(), 1);
  for (Vertex v : s) blocked[v] = 0;
  int diameter = 0;
  for (Vertex v : s) {
    auto dist = bfs_distances(g, VertexSet{v}, blocked);
    for (Vertex w : s) {
      if (dist[w] == kUnreached) return std::nullopt;
      diameter = std::max(diameter, dist[w]);
    }
  }
  return diameter;
}

}  // namespace nestcyc
