#include "nestcyc/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "nestcyc/error.hpp"

namespace nestcyc {

namespace {

std::size_t halve(std::size_t x) { return std::max<std::size_t>(1, (x + 1) / 2); }

NestedCertificate lift(const InducedSubgraph& h, const NestedCertificate& c) {
  NestedCertificate out;
  out.case_tag = c.case_tag;
  out.outer = Cycle(h.lift(c.outer.vertices()));
  out.inner = Cycle(h.lift(c.inner.vertices()));
  for (Segment s : c.segments) {
    s.vertices = h.lift(s.vertices);
    out.segments.push_back(std::move(s));
  }
  const auto& outer = out.outer.vertices();
  for (Vertex v : out.inner.vertices()) {
    out.inner_positions.push_back(
        static_cast<std::size_t>(std::find(outer.begin(), outer.end(), v) - outer.begin()));
  }
  return out;
}

}  // namespace

PipelineResult run_pipeline(const Graph& g, const PipelineConfig& cfg) {
  PipelineResult res;
  if (g.vertex_count() == 0 || g.edge_count() == 0) {
    res.failure_stage = "extract";
    res.failure = "graph has no edges";
    return res;
  }
  const double d = average_degree(g).to_double();
  res.expander = ExpanderParams{cfg.eps1, cfg.k.value_or(cfg.eps1 * d)};
  res.expander.validate();

  Extraction ext = extract_expander_subgraph(g, res.expander, cfg.extraction);
  res.extraction = ext.report;
  if (!ext.subgraph) {
    res.failure_stage = "extract";
    res.failure = ext.report.failure;
    return res;
  }
  const InducedSubgraph& h = *ext.subgraph;
  res.subgraph_vertices = h.to_original;
  const Graph& hg = h.graph;

  KrakenParams kp = KrakenParams::desk_defaults(hg);
  if (cfg.m) kp.m = *cfg.m;
  if (cfg.blob_size) kp.s = *cfg.blob_size;
  if (cfg.hub_threshold) kp.hub_threshold = *cfg.hub_threshold;
  if (cfg.separation) kp.separation = *cfg.separation;
  if (cfg.max_arm_len) kp.max_arm_len = *cfg.max_arm_len;
  kp.blob_target_size = std::max(kp.blob_target_size, kp.s);
  kp.growth_radius = cfg.growth_radius;

  while (true) {
    PipelineAttempt at;
    at.params = kp;
    KrakenBuild kb = build_kraken(hg, res.expander, kp);
    at.kraken = kb.report;
    at.params = kb.report.params;
    std::string stage;
    std::string message;
    if (!kb.kraken) {
      stage = "kraken";
      message = std::string(to_string(kb.report.failure)) + ": " + kb.report.message;
    } else {
      const Kraken& kr = *kb.kraken;
      const KrakenParams& used = kb.report.params;
      std::vector<Vertex> hubs;
      for (std::size_t v = 0; v < hg.vertex_count(); ++v) {
        if (static_cast<double>(hg.degree(static_cast<Vertex>(v))) + kTolerance >= used.hub_threshold) {
          hubs.push_back(static_cast<Vertex>(v));
        }
      }
      LinkCaps caps{cfg.q_len.value_or(used.m), cfg.p_len.value_or(30 * used.m)};
      try {
        stage = "expand";
        ExpandedBlobs ex = expand_anchor_blobs(hg, kr, VertexSet(hubs),
                                               cfg.expand_radius.value_or(static_cast<int>(used.m)),
                                               cfg.hub_extra.value_or(2 * used.s));
        stage = "link";
        std::vector<Link> links = link_arms(hg, kr, ex, caps);
        stage = "assemble";
        NestedCertificate local = assemble(hg, kr, links);
        NestedCertificate cert = lift(h, local);
        res.verdict = verify_nested_no_crossings(g, cert.outer.vertices(), cert.inner.vertices());
        if (!res.verdict.pass) {
          throw InvariantError("lifted certificate rejected by the verifier: " +
                               res.verdict.issues.front().detail);
        }
        at.stage = "done";
        res.attempts.push_back(std::move(at));
        res.certificate = std::move(cert);
        res.failure_stage.clear();
        res.failure.clear();
        return res;
      } catch (const AssemblyError& e) {
        message = e.what();
      }
    }
    at.stage = stage;
    at.message = message;
    res.attempts.push_back(std::move(at));
    res.failure_stage = stage;
    res.failure = message;
    const bool retryable = stage != "kraken" || kb.report.failure == KrakenFailure::BlobShortage ||
                           kb.report.failure == KrakenFailure::AugmentationShortfall;
    if (!cfg.relax || !retryable || (kp.s == 1 && kp.separation == 1)) break;
    kp.s = halve(kp.s);
    kp.separation = static_cast<int>(halve(static_cast<std::size_t>(kp.separation)));
  }
  return res;
}

}  // namespace nestcyc
