#include "nestcyc/expander.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "nestcyc/error.hpp"

namespace nestcyc {

void ExpanderParams::validate() const {
  if (!(eps1 > 0.0 && eps1 < 1.0)) throw InputError("eps1 must lie in (0,1)");
  if (!(k > 0.0)) throw InputError("k must be positive");
}

ExpanderParams ExpanderParams::for_degree(double eps1, double average_degree) {
  ExpanderParams p{eps1, eps1 * average_degree};
  if (p.k <= 0.0) p.k = eps1;
  return p;
}

double epsilon(double x, const ExpanderParams& p) {
  if (x < p.k / 5.0) return 0.0;
  const double l = std::log(15.0 * x / p.k);
  return p.eps1 / (l * l);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::NotApplicable:
      return "NOT_APPLICABLE";
  }
  return "?";
}

namespace {

bool in_expansion_range(std::size_t size, std::size_t n, const ExpanderParams& p) {
  const double s = static_cast<double>(size);
  return s + kTolerance >= p.k / 2.0 && 2 * size <= n;
}

bool violates(std::size_t size, std::size_t boundary, const ExpanderParams& p) {
  const double s = static_cast<double>(size);
  return static_cast<double>(boundary) < epsilon(s, p) * s - kTolerance;
}

}  // namespace

ExpansionWitness expansion_witness_check(const Graph& g, const ExpanderParams& p,
                                         const VertexSet& x, std::span<const Edge> f) {
  p.validate();
  for (Vertex v : x) {
    if (!g.has_vertex(v)) throw InputError("X contains a vertex outside the graph");
  }
  std::vector<Edge> removed;
  removed.reserve(f.size());
  for (Edge e : f) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!g.has_edge(e.u, e.v)) {
      throw InputError("F contains (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") which is not an edge of G");
    }
    removed.push_back(e);
  }
  std::sort(removed.begin(), removed.end());
  removed.erase(std::unique(removed.begin(), removed.end()), removed.end());

  ExpansionWitness w;
  w.set_size = x.size();
  w.removed_edges = removed.size();
  const double s = static_cast<double>(x.size());
  w.required = epsilon(s, p) * s;
  w.edge_allowance = g.vertex_count() == 0 ? 0.0 : average_degree(g).to_double() * w.required;

  if (!in_expansion_range(x.size(), g.vertex_count(), p)) {
    w.reason = "|X| outside [k/2, n/2]";
    return w;
  }
  if (static_cast<double>(removed.size()) > w.edge_allowance + kTolerance) {
    w.reason = "e(F) exceeds d(G) eps(|X|) |X|";
    return w;
  }

  std::vector<char> in_x = mask_of(g.vertex_count(), x);
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex v : x) {
    for (Vertex u : g.neighbors(v)) {
      if (in_x[u] || seen[u]) continue;
      Edge e = v < u ? Edge{v, u} : Edge{u, v};
      if (std::binary_search(removed.begin(), removed.end(), e)) continue;
      seen[u] = 1;
      ++w.neighborhood_size;
    }
  }
  w.verdict = violates(x.size(), w.neighborhood_size, p) ? Verdict::Fail : Verdict::Pass;
  return w;
}

// ------------------------------------------------------------ violator search

namespace {

class ViolatorSearch {
 public:
  ViolatorSearch(const Graph& g, const ExpanderParams& p, const ViolatorSearchOptions& o)
      : g_(g), p_(p), opts_(o), n_(g.vertex_count()) {}

  std::optional<VertexSet> run() {
    if (n_ < 2) return std::nullopt;
    search_balls();
    search_peeling();
    if (n_ <= opts_.exhaustive_threshold && n_ <= 62) search_exhaustive();
    return best_;
  }

 private:
  bool spend(std::uint64_t visits) {
    visits_ += visits;
    return visits_ <= opts_.visit_budget;
  }

  void offer(std::vector<Vertex> members) {
    VertexSet candidate(std::move(members));
    if (!best_ || candidate < *best_) best_ = std::move(candidate);
  }

  void search_balls() {
    std::vector<int> dist(n_, kUnreached);
    std::vector<Vertex> order;
    order.reserve(n_);
    for (std::size_t root = 0; root < n_; ++root) {
      order.clear();
      order.push_back(static_cast<Vertex>(root));
      dist[root] = 0;
      std::size_t layer_begin = 0;
      int radius = 0;
      bool within_budget = true;
      while (layer_begin < order.size()) {
        const std::size_t layer_end = order.size();
        for (std::size_t i = layer_begin; i < layer_end; ++i) {
          const Vertex u = order[i];
          within_budget = spend(g_.degree(u) + 1) && within_budget;
          for (Vertex w : g_.neighbors(u)) {
            if (dist[w] != kUnreached) continue;
            dist[w] = radius + 1;
            order.push_back(w);
          }
        }
        // order[0, layer_end) is the ball of `radius`; the new layer is its boundary.
        const std::size_t ball_size = layer_end;
        const std::size_t boundary = order.size() - layer_end;
        if (2 * ball_size > n_) break;
        if (in_expansion_range(ball_size, n_, p_) && violates(ball_size, boundary, p_)) {
          offer({order.begin(), order.begin() + static_cast<std::ptrdiff_t>(ball_size)});
        }
        if (!within_budget) break;
        layer_begin = layer_end;
        ++radius;
      }
      for (Vertex v : order) dist[v] = kUnreached;
      if (!within_budget) return;
    }
  }

  void search_peeling() {
    // Degeneracy order with smallest-label tie-break; check every prefix.
    std::vector<std::size_t> deg(n_);
    std::size_t max_deg = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      deg[v] = g_.degree(static_cast<Vertex>(v));
      max_deg = std::max(max_deg, deg[v]);
    }
    std::vector<std::vector<Vertex>> buckets(max_deg + 1);
    for (std::size_t v = 0; v < n_; ++v) buckets[deg[v]].push_back(static_cast<Vertex>(v));
    for (auto& b : buckets) std::sort(b.begin(), b.end(), std::greater<>());
    std::vector<char> removed(n_, 0);
    std::vector<std::size_t> x_neighbors(n_, 0);
    std::vector<Vertex> prefix;
    std::size_t boundary = 0;
    std::size_t low = 0;
    while (prefix.size() * 2 < n_) {
      // Lazy bucket queue: stale entries are skipped.
      Vertex v = -1;
      while (v < 0) {
        while (low <= max_deg && buckets[low].empty()) ++low;
        if (low > max_deg) return;
        Vertex cand = buckets[low].back();
        buckets[low].pop_back();
        if (!removed[cand] && deg[cand] == low) v = cand;
      }
      if (!spend(g_.degree(v) + 1)) return;
      removed[v] = 1;
      prefix.push_back(v);
      if (x_neighbors[v] > 0) --boundary;
      for (Vertex w : g_.neighbors(v)) {
        if (removed[w]) continue;
        if (x_neighbors[w]++ == 0) ++boundary;
        --deg[w];
        auto& b = buckets[deg[w]];
        // keep each bucket ordered so back() is the smallest label
        b.insert(std::upper_bound(b.begin(), b.end(), w, std::greater<>()), w);
        low = std::min(low, deg[w]);
      }
      if (in_expansion_range(prefix.size(), n_, p_) && violates(prefix.size(), boundary, p_)) {
        offer(prefix);
      }
    }
  }

  void search_exhaustive() {
    std::vector<std::uint64_t> adj(n_, 0);
    for (std::size_t v = 0; v < n_; ++v) {
      for (Vertex w : g_.neighbors(static_cast<Vertex>(v))) adj[v] |= std::uint64_t{1} << w;
    }
    const std::uint64_t limit = std::uint64_t{1} << n_;
    for (std::uint64_t set = 1; set < limit; ++set) {
      if (!spend(1)) return;
      const std::size_t size = static_cast<std::size_t>(std::popcount(set));
      if (!in_expansion_range(size, n_, p_)) continue;
      std::uint64_t nb = 0;
      for (std::uint64_t rest = set; rest != 0; rest &= rest - 1) {
        nb |= adj[static_cast<std::size_t>(std::countr_zero(rest))];
      }
      nb &= ~set;
      if (!violates(size, static_cast<std::size_t>(std::popcount(nb)), p_)) continue;
      std::vector<Vertex> members;
      for (std::uint64_t rest = set; rest != 0; rest &= rest - 1) {
        members.push_back(static_cast<Vertex>(std::countr_zero(rest)));
      }
      offer(std::move(members));
    }
  }

  const Graph& g_;
  const ExpanderParams& p_;
  const ViolatorSearchOptions& opts_;
  std::size_t n_;
  std::uint64_t visits_ = 0;
  std::optional<VertexSet> best_;
};

}  // namespace

std::optional<VertexSet> find_violating_set(const Graph& g, const ExpanderParams& p,
                                            const ViolatorSearchOptions& opts) {
  p.validate();
  return ViolatorSearch(g, p, opts).run();
}

// ---------------------------------------------------------------- extraction

VertexSet peel_to_half_average(const Graph& g, const VertexSet& keep) {
  const std::size_t n = g.vertex_count();
  std::vector<char> alive = mask_of(n, keep);
  std::vector<std::int64_t> deg(n, 0);
  std::int64_t edges = 0;
  std::int64_t count = static_cast<std::int64_t>(keep.size());
  for (Vertex v : keep) {
    for (Vertex w : g.neighbors(v)) {
      if (alive[w]) ++deg[v];
    }
    edges += deg[v];
  }
  edges /= 2;
  // deg(v) < d/2 = e/|V|  <=>  deg(v) * |V| < e. Removing such a vertex raises
  // e/|V|, so the set of removable vertices only grows and a rescan from the
  // smallest label finds the next one.
  bool changed = true;
  while (changed && count > 0) {
    changed = false;
    for (Vertex v : keep) {
      if (!alive[v] || deg[v] * count >= edges) continue;
      alive[v] = 0;
      --count;
      edges -= deg[v];
      for (Vertex w : g.neighbors(v)) {
        if (alive[w]) --deg[w];
      }
      changed = true;
      break;
    }
  }
  std::vector<Vertex> out;
  for (Vertex v : keep) {
    if (alive[v]) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

namespace {

Rational induced_average(const Graph& g, const VertexSet& s) {
  if (s.empty()) return Rational{0, 1};
  std::vector<char> in = mask_of(g.vertex_count(), s);
  std::int64_t twice_edges = 0;
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) twice_edges += in[w];
  }
  return Rational::make(twice_edges, static_cast<std::int64_t>(s.size()));
}

}  // namespace

Extraction extract_expander_subgraph(const Graph& g, const ExpanderParams& p,
                                     const ExtractionOptions& opts) {
  p.validate();
  Extraction out;
  ExtractionReport& rep = out.report;
  if (g.vertex_count() == 0 || g.edge_count() == 0) {
    rep.failure = "graph has no edges";
    return out;
  }
  const Rational d_g = average_degree(g);
  const Rational floor_avg = d_g.half();
  rep.input_average = d_g;

  std::vector<Vertex> all(g.vertex_count());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<Vertex>(v);
  VertexSet current = peel_to_half_average(g, VertexSet(std::move(all)));
  rep.peeled = g.vertex_count() - current.size();

  while (true) {
    InducedSubgraph h = induced_subgraph(g, current);
    if (rep.rounds >= opts.max_rounds) {
      rep.stop_reason = "round cap reached";
      break;
    }
    auto violator = find_violating_set(h.graph, p, opts.search);
    if (!violator) {
      rep.heuristically_expanding = true;
      rep.stop_reason = "no violator found within budget";
      break;
    }
    const VertexSet x = h.lift(*violator);
    const VertexSet closed = x.united(h.lift(neighborhood(h.graph, *violator)));
    const VertexSet complement = current.minus(x);
    const VertexSet side_a = peel_to_half_average(g, closed);
    const VertexSet side_b = peel_to_half_average(g, complement);
    const Rational avg_a = induced_average(g, side_a);
    const Rational avg_b = induced_average(g, side_b);
    bool take_a = avg_a > avg_b;
    if (avg_a == avg_b) {
      take_a = !side_a.empty() && (side_b.empty() || side_a.front() < side_b.front());
    }
    const VertexSet& chosen = take_a ? side_a : side_b;
    const Rational chosen_avg = take_a ? avg_a : avg_b;
    if (chosen.empty() || chosen_avg < floor_avg) {
      rep.stop_reason = "split would drop below d(G)/2; violator left unresolved";
      break;
    }
    ++rep.rounds;
    rep.trace.push_back({violator->size(), take_a ? "closed-neighborhood" : "complement",
                         chosen.size(), chosen_avg});
    current = chosen;
  }

  InducedSubgraph h = induced_subgraph(g, current);
  const DegreeStats stats = degree_stats(h.graph);
  rep.output_average = stats.average;
  rep.output_min_degree = stats.minimum;
  rep.output_vertices = h.graph.vertex_count();
  rep.degenerate = stats.average < Rational{2, 1};
  const Rational min_deg{static_cast<std::int64_t>(stats.minimum), 1};
  if (stats.average < floor_avg || min_deg < stats.average.half()) {
    throw InvariantError("extracted subgraph violates the degree guarantees");
  }
  out.subgraph = std::move(h);
  return out;
}

// ----------------------------------------------------------------- thinness

ThinnessVerdict is_thin_around_in(const Graph& g, const VertexSet& u, const VertexSet& a,
                                  const ThinnessParams& t, const VertexSet& deleted) {
  if (u.intersects(a)) throw InputError("thin set must be disjoint from its centre");
  if (t.horizon < 1) throw InputError("thinness horizon must be at least 1");
  const std::size_t n = g.vertex_count();
  std::vector<char> gone = mask_of(n, deleted);
  std::vector<char> in_u = mask_of(n, u);
  std::vector<char> in_ball(n, 0);
  std::vector<char> touched(n, 0);
  std::vector<Vertex> frontier;
  for (Vertex v : a) {
    if (!g.has_vertex(v)) throw InputError("vertex out of range");
    if (gone[v]) continue;
    in_ball[v] = 1;
    frontier.push_back(v);
  }
  ThinnessVerdict verdict;
  std::size_t contacts = 0;
  for (int i = 1; i <= t.horizon; ++i) {
    // frontier = sphere i-1 of the ball in G - deleted - U.
    std::vector<Vertex> next;
    for (Vertex v : frontier) {
      for (Vertex w : g.neighbors(v)) {
        if (gone[w] || in_ball[w]) continue;
        if (in_u[w]) {
          if (!touched[w]) {
            touched[w] = 1;
            ++contacts;
          }
          continue;
        }
        in_ball[w] = 1;
        next.push_back(w);
      }
    }
    verdict.contacts_by_radius.push_back(contacts);
    const double bound = t.lambda * std::pow(static_cast<double>(i), t.power);
    if (verdict.pass && static_cast<double>(contacts) > bound + kTolerance) {
      verdict.pass = false;
      verdict.violating_radius = i;
      verdict.contacts = contacts;
      verdict.bound = bound;
    }
    frontier = std::move(next);
  }
  return verdict;
}

ThinnessVerdict is_thin_around(const Graph& g, const VertexSet& u, const VertexSet& a,
                               const ThinnessParams& t) {
  return is_thin_around_in(g, u, a, t, {});
}

// ------------------------------------------------------------ robust growth

GrowthResult grow_ball_robust(const Graph& g, const VertexSet& x, const VertexSet& y,
                              const VertexSet& w, int r, const ExpanderParams& p,
                              const ThinnessParams& thin) {
  if (x.empty()) throw InputError("growth needs a nonempty start set");
  if (x.intersects(y) || x.intersects(w)) throw InputError("start set meets Y or W");
  if (r < 0) throw InputError("negative radius");
  const std::size_t n = g.vertex_count();
  std::vector<char> in_y = mask_of(n, y);
  std::vector<char> in_w = mask_of(n, w);
  std::vector<char> in_ball(n, 0);
  std::vector<char> hit(n, 0);
  std::vector<Vertex> members;
  std::vector<Vertex> frontier;
  std::size_t hits = 0;

  auto absorb = [&](Vertex v) {
    in_ball[v] = 1;
    members.push_back(v);
    for (Vertex u : g.neighbors(v)) {
      if (in_w[u] && !in_y[u] && !hit[u]) {
        hit[u] = 1;
        ++hits;
      }
    }
  };
  for (Vertex v : x) {
    if (!g.has_vertex(v)) throw InputError("vertex out of range");
    absorb(v);
    frontier.push_back(v);
  }

  GrowthResult res;
  res.trace.sizes.push_back(members.size());
  res.trace.boundary_hits.push_back(hits);
  for (int i = 1; i <= r; ++i) {
    std::vector<Vertex> next;
    for (Vertex v : frontier) {
      for (Vertex u : g.neighbors(v)) {
        if (in_ball[u] || in_y[u] || in_w[u]) continue;
        absorb(u);
        next.push_back(u);
      }
    }
    frontier = std::move(next);
    res.trace.sizes.push_back(members.size());
    res.trace.boundary_hits.push_back(hits);
    if (frontier.empty()) {
      // saturated: the remaining radii repeat the final state
      res.trace.sizes.resize(static_cast<std::size_t>(r) + 1, members.size());
      res.trace.boundary_hits.resize(static_cast<std::size_t>(r) + 1, hits);
      break;
    }
  }
  res.ball = VertexSet(std::move(members));

  const double xs = static_cast<double>(x.size());
  res.y_small = static_cast<double>(y.size()) <= 0.25 * epsilon(xs, p) * xs + kTolerance;
  ThinnessParams t = thin;
  t.horizon = std::max(1, r);
  res.w_thin = is_thin_around_in(g, w.minus(y), x, t, y).pass;
  res.conclusion_holds =
      static_cast<double>(res.ball.size()) + kTolerance >= std::exp(std::pow(double(r), 0.25));
  res.radius_in_range = r >= 1 && n > 1 && static_cast<double>(r) <= std::log(double(n)) + kTolerance;
  return res;
}

std::optional<Path> link_sets(const Graph& g, const VertexSet& x1, const VertexSet& x2,
                              const VertexSet& avoid, std::size_t max_len) {
  auto p = shortest_path_between_sets(g, x1, x2, avoid);
  if (!p || p->length() > max_len) return std::nullopt;
  return p;
}

std::optional<LargeBall> find_large_ball_avoiding(const Graph& g, const VertexSet& w,
                                                  const ExpanderParams& p) {
  const std::size_t n = g.vertex_count();
  std::vector<char> blocked = mask_of(n, w);
  std::vector<int> comp(n, -1);
  Vertex best_start = -1;
  std::size_t best_size = 0;
  int next_id = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (blocked[s] || comp[s] >= 0) continue;
    std::vector<Vertex> stack{static_cast<Vertex>(s)};
    comp[s] = next_id;
    std::size_t size = 0;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex u : g.neighbors(v)) {
        if (!blocked[u] && comp[u] < 0) {
          comp[u] = next_id;
          stack.push_back(u);
        }
      }
    }
    if (size > best_size) {
      best_size = size;
      best_start = static_cast<Vertex>(s);
    }
    ++next_id;
  }
  if (best_start < 0) return std::nullopt;
  auto dist = bfs_distances(g, VertexSet{best_start}, blocked);
  LargeBall out;
  out.center = best_start;
  std::vector<Vertex> members;
  for (std::size_t v = 0; v < n; ++v) {
    if (dist[v] == kUnreached) continue;
    members.push_back(static_cast<Vertex>(v));
    out.radius = std::max(out.radius, dist[v]);
  }
  out.members = VertexSet(std::move(members));
  const double nn = static_cast<double>(n);
  out.size_ok = 25.0 * static_cast<double>(out.members.size()) + kTolerance >= nn;
  const double ln = std::log(std::max(nn, 1.0));
  out.radius_ok = static_cast<double>(out.radius) <= 100.0 / p.eps1 * ln * ln * ln + kTolerance;
  return out;
}

}  // namespace nestcyc
