#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nestcyc/assembler.hpp"
#include "nestcyc/expander.hpp"
#include "nestcyc/graph.hpp"
#include "nestcyc/kraken.hpp"
#include "nestcyc/verifier.hpp"

namespace nestcyc {

struct PipelineConfig {
  double eps1 = 0.1;
  std::optional<double> k;                  // default eps1 * d(G)
  std::optional<double> hub_threshold;      // default ceil d(H)
  std::optional<std::size_t> blob_size;     // s
  std::optional<std::size_t> max_arm_len;   // default 10m
  std::optional<std::size_t> m;
  std::optional<int> separation;
  std::optional<int> expand_radius;         // default m
  std::optional<std::size_t> q_len;         // default m
  std::optional<std::size_t> p_len;         // default 30m
  std::optional<std::size_t> hub_extra;     // default 2s
  int growth_radius = -1;
  bool relax = true;  // retry with (s, separation) halved after a kraken or link failure
  ExtractionOptions extraction;
};

struct PipelineAttempt {
  KrakenParams params;
  std::string stage;    // "kraken", "expand", "link", "assemble" or "done"
  std::string message;
  KrakenReport kraken;
};

struct PipelineResult {
  std::optional<NestedCertificate> certificate;  // original labels, verified
  std::string failure_stage;                     // empty on success
  std::string failure;
  ExpanderParams expander;
  ExtractionReport extraction;
  std::vector<Vertex> subgraph_vertices;         // V(H) in original labels
  std::vector<PipelineAttempt> attempts;
  NestedVerdict verdict;
  bool ok() const { return certificate.has_value(); }
};

/// extract -> kraken -> expand -> link -> assemble, then lift to the labels
/// of g and re-verify. Never returns an unverified certificate.
PipelineResult run_pipeline(const Graph& g, const PipelineConfig& config = {});

}  // namespace nestcyc
