#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nestcyc/expander.hpp"
#include "nestcyc/graph.hpp"

namespace nestcyc {

enum class TargetKind { Hubs, Blobs };
std::string_view to_string(TargetKind k);

struct LinkedPath {
  Path path;               // front() on the base cycle, back() inside the target
  std::size_t target = 0;  // index into PathSystem::targets
};

/// Paths from a base cycle to a family of disjoint targets (hub singletons or
/// blobs). Invariants, checked by check_path_system:
///  - a path starts on the cycle, ends in its target, and has every internal
///    vertex outside V(C), every target, and `forbidden`;
///  - paths are vertex-disjoint outside V(C); each target is used at most once;
///  - cycle position i carries at most capacity[i] paths;
///  - every path has length in [1, max_len].
struct PathSystem {
  Cycle base_cycle{std::vector<Vertex>{0, 1, 2}};
  TargetKind kind = TargetKind::Hubs;
  std::vector<VertexSet> targets;
  std::vector<LinkedPath> paths;
  std::vector<int> capacity;
  VertexSet forbidden;
  std::size_t max_len = 0;

  int position_of(Vertex v) const;
  std::vector<int> usage() const;
  std::size_t total_length() const;
  VertexSet path_vertices() const;
  std::vector<char> used_targets() const;
};

struct PathSystemSetup {
  TargetKind kind = TargetKind::Hubs;
  std::vector<VertexSet> targets;
  std::size_t max_len = 0;
  std::vector<int> capacity;  // empty: 2 per cycle vertex
  VertexSet forbidden;
  int growth_radius = -1;     // -1: ceil((ln ln n)^10), capped at n
};

int default_growth_radius(std::size_t n);

/// Empty system; throws InputError if targets meet the cycle or each other.
PathSystem make_path_system(const Graph& g, const Cycle& c, PathSystemSetup setup);

/// Independent invariant checker; empty result means valid.
std::vector<std::string> check_path_system(const Graph& g, const PathSystem& s);

/// Tries to add one path at cycle vertex v: grow a ball around v past the
/// used vertices, link it to the neighbourhood of an unused target, and
/// extend through the ball and into the target.
bool augment_at(const Graph& g, PathSystem& s, Vertex v, const ExpanderParams& p,
                int growth_radius);

/// Greedy maximal system: repeatedly augment at the smallest-labelled cycle
/// vertex with spare capacity until no augmentation succeeds.
PathSystem build_path_system(const Graph& g, const Cycle& c, PathSystemSetup setup,
                             const ExpanderParams& p);
void saturate(const Graph& g, PathSystem& s, const ExpanderParams& p, int growth_radius);

/// Single-path improvement to a fixpoint: each path is replaced by a strictly
/// shorter one from the same cycle vertex to its own or an unused target.
PathSystem shorten_path_system(const Graph& g, PathSystem s);

/// Shortest admissible replacement for path `index` (same cycle vertex).
std::optional<LinkedPath> best_replacement(const Graph& g, const PathSystem& s,
                                           std::size_t index);

struct InequalityCheck {
  Verdict verdict = Verdict::Pass;
  int radius = 0;        // least failing radius
  std::size_t lhs = 0;
  double rhs = 0.0;
};

struct PathAudit {
  std::size_t path_index = 0;
  InequalityCheck contact;  // |N(B^{i-1}) cap (V(P) \ V(C))| <= i
  InequalityCheck far;      // same set empty when P starts outside B_C^{4i}(v)
};

struct AuditReport {
  bool applicable = false;
  Vertex center = -1;
  int horizon = 0;
  InequalityCheck cycle_contact;  // |N(B^{i-1}_{G-V(C)}(v)) cap V(C)| <= 2i
  std::vector<PathAudit> paths;
  InequalityCheck thinness;       // (10,2) for U \ {v}
  std::optional<InequalityCheck> combined;  // (18,2) for two-level systems

  bool paths_pass() const;
  bool pass() const;
};

/// Audits the contact bounds around cycle vertex v. With `first_level`, s is
/// treated as the second-level system and U' includes both systems.
AuditReport audit_path_system(const Graph& g, const PathSystem& s, Vertex v,
                              const PathSystem* first_level = nullptr, int horizon = -1);

/// Reroutes a path that the audit around v flagged: v takes over the path's
/// tail through the ball. Returns false if no strictly shorter reroute exists.
bool repair_from_audit(const Graph& g, PathSystem& s, Vertex v, const AuditReport& audit,
                       const PathSystem* first_level = nullptr);

struct MinimalSystemReport {
  std::size_t rounds = 0;
  std::size_t repairs = 0;
  bool audits_clean = true;
  std::string note;
  std::vector<AuditReport> final_audits;
};

struct MinimalSystem {
  PathSystem system;
  MinimalSystemReport report;
};

/// build -> shorten -> audit -> repair -> re-augment, capped at max_rounds.
MinimalSystem build_minimal_path_system(const Graph& g, const Cycle& c, PathSystemSetup setup,
                                        const ExpanderParams& p,
                                        const PathSystem* first_level = nullptr,
                                        std::size_t max_rounds = 50);

}  // namespace nestcyc
