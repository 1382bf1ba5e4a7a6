#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nestcyc/graph.hpp"
#include "nestcyc/kraken.hpp"

namespace nestcyc {

struct Segment {
  std::string kind;  // "arm", "blob", "link"
  int i = 0;         // cycle index (link i joins v_i to v_{i+1})
  int j = -1;        // arm index for arms and blob traversals
  std::vector<Vertex> vertices;
};

struct NestedCertificate {
  Cycle outer{std::vector<Vertex>{0, 1, 2}};
  Cycle inner{std::vector<Vertex>{0, 1, 2}};
  std::vector<std::size_t> inner_positions;  // index along outer of each inner vertex
  std::vector<Segment> segments;             // outer traversal in construction order
  CaseTag case_tag = CaseTag::Hubs;
};

struct ExpandedBlobs {
  std::vector<std::array<VertexSet, 2>> sets;
  std::vector<std::array<int, 2>> radius;  // -1 for hub anchors
};

/// A*_{i,j}: for non-hub anchors the radius-r ball around A_{i,j} in
/// G - L - Y_{i,j}; for hub anchors A_{i,j} plus up to `hub_extra` unused
/// neighbours of the anchor. Overlapping non-hub sets shrink their radii.
/// Throws AssemblyError if the sets cannot be made disjoint.
ExpandedBlobs expand_anchor_blobs(const Graph& g, const Kraken& kr, const VertexSet& hubs, int r,
                                  std::size_t hub_extra);

struct LinkCaps {
  std::size_t q_len = 3;
  std::size_t p_len = 90;
};

struct AssemblyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Link {
  Path p;                      // u_{i,2} .. u_{i+1,1}
  std::size_t lead = 0;        // vertices of p inside A*_{i,2}, minus one
  std::size_t trail = 0;       // same for A*_{i+1,1}
};

/// Link i runs from anchor (i, 1) to anchor (i+1 mod k, 0). Throws
/// AssemblyError naming the failing i.
std::vector<Link> link_arms(const Graph& g, const Kraken& kr, const ExpandedBlobs& ex,
                            const LinkCaps& caps);

/// Outer cycle v_0 R_{0,1} P_0 R_{1,0}^-1 v_1 ...; inner = C. Throws
/// InvariantError if the result is not a valid nested pair.
NestedCertificate assemble(const Graph& g, const Kraken& kr, const std::vector<Link>& links);

/// Checks the certificate's own invariants (not the generic verifier):
/// cycles of g, disjoint edges, inner vertices in the same cyclic order on outer.
std::vector<std::string> certificate_issues(const Graph& g, const NestedCertificate& c);

}  // namespace nestcyc
