#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nestcyc/expander.hpp"
#include "nestcyc/graph.hpp"
#include "nestcyc/linker.hpp"

namespace nestcyc {

struct KrakenParams {
  std::size_t k = 3;  // cycle length; build_kraken fills in the girth
  std::size_t m = 3;
  std::size_t s = 1;
  double hub_threshold = 0.0;
  int separation = 1;
  std::size_t blob_target_size = 1;
  std::size_t max_arm_len = 0;  // 0: 10m
  int growth_radius = -1;       // -1: default_growth_radius(n)
  std::size_t k_cap = 0;        // 0: any girth accepted

  std::size_t arm_cap() const { return max_arm_len == 0 ? 10 * m : max_arm_len; }
  /// Throws InputError unless k >= 3, s >= 1, m >= 1, separation >= 1.
  void validate() const;
  /// m = max(3, ceil ln n), s = ceil ln n, hub threshold = ceil d(G),
  /// separation = ceil(4 sqrt(ln n)), blob target = max(ceil n^(1/8), s).
  static KrakenParams desk_defaults(const Graph& g);
};

enum class CaseTag { Hubs, Blobs };
std::string_view to_string(CaseTag c);

/// Cycle v_0..v_{k-1} with two arms per cycle vertex. Index [i][j] is the
/// j-th arm at v_i; arms[i][j] runs from v_i to anchors[i][j] in blobs[i][j].
struct Kraken {
  Cycle cycle{std::vector<Vertex>{0, 1, 2}};
  std::vector<std::array<Vertex, 2>> anchors;
  std::vector<std::array<VertexSet, 2>> blobs;
  std::vector<std::array<Path, 2>> arms;
  std::vector<std::array<bool, 2>> hub_anchor;
  CaseTag case_tag = CaseTag::Hubs;
};

struct KrakenIssue {
  int i = -1;  // -1: not tied to an arm
  int j = -1;
  std::string clause;
};

struct KrakenVerdict {
  bool pass = true;
  std::vector<KrakenIssue> issues;
};

KrakenVerdict validate_kraken(const Graph& g, const Kraken& kr, const KrakenParams& p);

struct BlobFamily {
  std::vector<VertexSet> blobs;
  int separation = 0;
  std::size_t diameter_bound = 0;
  std::size_t max_degree = 0;  // of g - forbidden
};

/// Greedy family of blobs at pairwise distance >= separation in g - forbidden,
/// each also at distance >= separation from V(C).
BlobFamily find_far_apart_blobs(const Graph& g, const VertexSet& forbidden, const Cycle& c,
                                const KrakenParams& p, const ExpanderParams& ep,
                                std::size_t count_target);

enum class KrakenFailure { None, NoCycle, CycleTooLong, AugmentationShortfall, BlobShortage };
std::string_view to_string(KrakenFailure f);

struct SideConditions {
  bool all_anchors_hubs = false;
  bool few_hubs = false;              // |L| <= 2|C|
  bool anchors_separated = false;     // non-hub anchors pairwise >= separation in G - L
  int min_anchor_distance = -1;       // -1: fewer than two non-hub anchors, or unreachable
};

struct KrakenReport {
  KrakenFailure failure = KrakenFailure::None;
  std::string message;
  std::size_t hubs = 0;
  std::size_t cycle_length = 0;
  std::size_t hub_paths = 0;
  std::size_t blob_paths = 0;
  std::size_t blobs_found = 0;
  std::size_t blobs_wanted = 0;
  std::optional<CaseTag> case_tag;
  SideConditions side;
  MinimalSystemReport first_level;
  std::optional<MinimalSystemReport> second_level;
  KrakenParams params;
};

struct KrakenBuild {
  std::optional<Kraken> kraken;
  KrakenReport report;
};

/// Hub paths from a shortest cycle; Case 1 if they saturate the cycle, else
/// a second system into far-apart blobs. A returned kraken always validates.
KrakenBuild build_kraken(const Graph& g, const ExpanderParams& ep, const KrakenParams& p);

}  // namespace nestcyc
