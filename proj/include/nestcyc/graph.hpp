#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace nestcyc {

using Vertex = std::int32_t;

struct Edge {
  Vertex u;
  Vertex v;
  auto operator<=>(const Edge&) const = default;
};

/// Exact non-negative fraction, kept reduced. Used for average degrees so
/// that threshold comparisons never go through floating point.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <=> static_cast<__int128>(b.num) * a.den;
  }
  Rational half() const { return make(num, den * 2); }
};

/// Sorted sequence of distinct vertex labels.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> init);
  explicit VertexSet(std::vector<Vertex> members);

  const std::vector<Vertex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex front() const { return members_.front(); }

  VertexSet united(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.members_ <=> b.members_; }

 private:
  std::vector<Vertex> members_;
};

/// A walk with pairwise distinct vertices; length is the number of edges.
struct Path {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  Path reversed() const;
  friend bool operator==(const Path&, const Path&) = default;
};

/// Cycle stored in canonical form: rotated so the minimum vertex comes first,
/// oriented so the second vertex is smaller than the last.
class Cycle {
 public:
  /// Throws InputError unless the sequence has >= 3 distinct vertices.
  explicit Cycle(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t length() const { return vertices_.size(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  std::vector<Edge> edges() const;
  bool contains(Vertex v) const;
  VertexSet vertex_set() const { return VertexSet(vertices_); }

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle& a, const Cycle& b) {
    if (a.length() != b.length()) return a.length() <=> b.length();
    return a.vertices_ <=> b.vertices_;
  }

  static std::vector<Vertex> canonical(std::vector<Vertex> seq);

 private:
  std::vector<Vertex> vertices_;
};

/// Undirected simple graph on vertices 0..n-1 with CSR adjacency.
/// Immutable once built.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;
  bool has_vertex(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < vertex_count(); }
  /// Edges with u < v, sorted.
  const std::vector<Edge>& edges() const { return edges_; }

  friend Graph build_graph(std::size_t n, std::span<const Edge> edge_list);

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<Edge> edges_;
};

/// Deduplicates; rejects self-loops and out-of-range labels with InputError.
Graph build_graph(std::size_t n, std::span<const Edge> edge_list);
Graph build_graph(std::size_t n, std::initializer_list<Edge> edge_list);

struct DegreeStats {
  Rational average;
  std::size_t minimum = 0;
  std::size_t maximum = 0;
};

DegreeStats degree_stats(const Graph& g);
Rational average_degree(const Graph& g);

/// Subgraph induced on a vertex subset, relabelled densely; to_original maps
/// each new label back to the ambient graph.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;

  VertexSet lift(const VertexSet& s) const;
  std::vector<Vertex> lift(const std::vector<Vertex>& seq) const;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Membership mask over 0..n-1.
std::vector<char> mask_of(std::size_t n, const VertexSet& s);

inline constexpr int kUnreached = -1;

/// Multi-source BFS distances from `sources` in g minus the vertices flagged in
/// `blocked` (may be empty), exploring at most `max_radius` layers.
std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources,
                               const std::vector<char>& blocked,
                               int max_radius = -1);

/// N^i_{G-avoid}(X).
VertexSet sphere(const Graph& g, const VertexSet& x, int radius, const VertexSet& avoid = {});
/// B^i_{G-avoid}(X).
VertexSet ball(const Graph& g, const VertexSet& x, int radius, const VertexSet& avoid = {});
/// N_G(X): vertices outside X with a neighbour in X.
VertexSet neighborhood(const Graph& g, const VertexSet& x);

std::optional<std::size_t> girth(const Graph& g);

/// A cycle of length equal to the girth; among those, the one with the
/// lexicographically smallest canonical vertex sequence. Empty for forests.
std::optional<Cycle> shortest_cycle(const Graph& g);

/// Lexicographically smallest among the shortest X1-X2 paths in g - avoid.
std::optional<Path> shortest_path_between_sets(const Graph& g, const VertexSet& x1,
                                               const VertexSet& x2,
                                               const VertexSet& avoid = {});
/// Same, with `blocked` given as a mask.
std::optional<Path> shortest_path_between_sets(const Graph& g, const VertexSet& x1,
                                               const VertexSet& x2,
                                               const std::vector<char>& blocked);

bool is_path_in(const Graph& g, const Path& p);
bool is_cycle_in(const Graph& g, std::span<const Vertex> cyclic_sequence);

/// Diameter of g[s]; nullopt when g[s] is disconnected or s is empty.
std::optional<int> induced_diameter(const Graph& g, const VertexSet& s);

}  // namespace nestcyc
