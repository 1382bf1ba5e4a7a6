#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nestcyc/graph.hpp"

namespace nestcyc {

/// Absolute tolerance for every real-valued comparison in the toolkit.
inline constexpr double kTolerance = 1e-12;

/// Parameters (eps1, k) of the sublinear expansion rate. The usual
/// instantiation is k = eps1 * d for a graph of average degree d.
struct ExpanderParams {
  double eps1 = 0.1;
  double k = 1.0;

  /// Throws InputError unless 0 < eps1 < 1 and k > 0.
  void validate() const;
  static ExpanderParams for_degree(double eps1, double average_degree);
};

/// Thinness parameters: a set U is thin around A when the number of U-vertices
/// adjacent to the (i-1)-ball around A in G-U is at most lambda * i^power,
/// for every radius i = 1..horizon.
struct ThinnessParams {
  double lambda = 10.0;
  int power = 2;
  int horizon = 1;
};

/// eps(x) = 0 for x < k/5, eps1 / ln^2(15x/k) otherwise.
double epsilon(double x, const ExpanderParams& p);

enum class Verdict { Pass, Fail, NotApplicable };
std::string_view to_string(Verdict v);

struct ExpansionWitness {
  Verdict verdict = Verdict::NotApplicable;
  std::size_t set_size = 0;
  std::size_t neighborhood_size = 0;
  double required = 0.0;        // eps(|X|) * |X|
  std::size_t removed_edges = 0;
  double edge_allowance = 0.0;  // d(G) * eps(|X|) * |X|
  std::string reason;           // why NotApplicable, if so
};

/// Checks |N_{G\F}(X)| >= eps(|X|)|X| for one pair (X, F). Out-of-range X or
/// an oversized F yields NotApplicable; F must be a subset of E(G).
ExpansionWitness expansion_witness_check(const Graph& g, const ExpanderParams& p,
                                         const VertexSet& x, std::span<const Edge> f = {});

struct ViolatorSearchOptions {
  std::uint64_t visit_budget = 20'000'000;
  std::size_t exhaustive_threshold = 18;
};

/// One-sided refutation search over BFS balls, degeneracy-peeling prefixes and,
/// for small graphs, every subset in range. A returned set always fails
/// expansion_witness_check with F empty; the lexicographically least violator
/// found is returned.
std::optional<VertexSet> find_violating_set(const Graph& g, const ExpanderParams& p,
                                            const ViolatorSearchOptions& opts = {});

struct ExtractionStep {
  std::size_t violator_size = 0;
  std::string chosen;  // "closed-neighborhood" or "complement"
  std::size_t vertices_after = 0;
  Rational average_after;
};

struct ExtractionReport {
  Rational input_average;
  Rational output_average;
  std::size_t output_min_degree = 0;
  std::size_t output_vertices = 0;
  std::size_t peeled = 0;
  std::size_t rounds = 0;
  bool heuristically_expanding = false;
  bool degenerate = false;  // d(H) < 2: no cycle-bearing structure guaranteed
  std::string stop_reason;
  std::string failure;  // nonempty iff no subgraph was produced
  std::vector<ExtractionStep> trace;
};

struct ExtractionOptions {
  ViolatorSearchOptions search;
  std::size_t max_rounds = 64;
};

struct Extraction {
  std::optional<InducedSubgraph> subgraph;
  ExtractionReport report;
};

/// Peel-and-split extraction. Any produced H satisfies d(H) >= d(G)/2 and
/// delta(H) >= d(H)/2 exactly; InvariantError otherwise.
Extraction extract_expander_subgraph(const Graph& g, const ExpanderParams& p,
                                     const ExtractionOptions& opts = {});

/// Repeatedly deletes the smallest-labelled vertex of degree < d/2 from g[keep].
/// Each deletion strictly raises the average degree.
VertexSet peel_to_half_average(const Graph& g, const VertexSet& keep);

struct ThinnessVerdict {
  bool pass = true;
  int violating_radius = 0;  // least failing i, 0 on pass
  std::size_t contacts = 0;  // left side at the failing radius
  double bound = 0.0;        // lambda * i^power at the failing radius
  std::vector<std::size_t> contacts_by_radius;
};

/// Throws InputError when U and A overlap.
ThinnessVerdict is_thin_around(const Graph& g, const VertexSet& u, const VertexSet& a,
                               const ThinnessParams& t);
/// Thinness inside g - deleted.
ThinnessVerdict is_thin_around_in(const Graph& g, const VertexSet& u, const VertexSet& a,
                                  const ThinnessParams& t, const VertexSet& deleted);

struct GrowthTrace {
  std::vector<std::size_t> sizes;          // |Z_0| .. |Z_r|
  std::vector<std::size_t> boundary_hits;  // |N_{G-Y}(Z_i) cap W|, i = 0..r
};

struct GrowthResult {
  VertexSet ball;
  GrowthTrace trace;
  bool y_small = false;           // |Y| <= eps(|X|)|X| / 4
  bool w_thin = false;            // W thin around X in G - Y
  bool conclusion_holds = false;  // |Z_r| >= exp(r^{1/4})
  bool radius_in_range = false;   // 1 <= r <= ln n
};

/// B^r_{G-W-Y}(X) with its per-step trace and the hypothesis/conclusion flags
/// of the robust growth bound. Flags are measured, never enforced.
GrowthResult grow_ball_robust(const Graph& g, const VertexSet& x, const VertexSet& y,
                              const VertexSet& w, int r, const ExpanderParams& p,
                              const ThinnessParams& thin);

/// Shortest X1-X2 path in g - avoid, dropped if longer than max_len.
std::optional<Path> link_sets(const Graph& g, const VertexSet& x1, const VertexSet& x2,
                              const VertexSet& avoid, std::size_t max_len);

struct LargeBall {
  VertexSet members;
  Vertex center = -1;
  int radius = 0;
  bool size_ok = false;    // |B| >= n/25
  bool radius_ok = false;  // radius <= 100 log^3 n / eps1
};

/// Largest BFS ball in g - W over all start vertices (ties: smallest start).
/// Empty only when W covers V(g).
std::optional<LargeBall> find_large_ball_avoiding(const Graph& g, const VertexSet& w,
                                                  const ExpanderParams& p);

}  // namespace nestcyc
