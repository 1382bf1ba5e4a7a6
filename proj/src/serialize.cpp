#include "nestcyc/serialize.hpp"

#include "nestcyc/error.hpp"
#include "nestcyc/io.hpp"

namespace nestcyc {

namespace {

Json verdict_text(Verdict v) { return std::string(to_string(v)); }

Json check_json(const InequalityCheck& c) {
  Json j = {{"verdict", verdict_text(c.verdict)}};
  if (c.verdict == Verdict::Fail) {
    j["radius"] = c.radius;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
  }
  return j;
}

Json set_json(const VertexSet& s) { return s.members(); }

}  // namespace

Json graph_summary(const Graph& g) {
  return {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"hash", hash_hex(graph_hash(g))}};
}

Json to_json(const Rational& r) {
  return {{"num", r.num}, {"den", r.den}, {"value", r.to_double()}};
}

Json to_json(const ExpanderParams& p) { return {{"eps1", p.eps1}, {"k", p.k}}; }

Json to_json(const ExtractionReport& r) {
  Json trace = Json::array();
  for (const auto& s : r.trace) {
    trace.push_back({{"violator_size", s.violator_size},
                     {"chosen", s.chosen},
                     {"vertices_after", s.vertices_after},
                     {"average_after", to_json(s.average_after)}});
  }
  Json j = {{"input_average", to_json(r.input_average)},
            {"output_average", to_json(r.output_average)},
            {"output_min_degree", r.output_min_degree},
            {"output_vertices", r.output_vertices},
            {"peeled", r.peeled},
            {"rounds", r.rounds},
            {"heuristically_expanding", r.heuristically_expanding},
            {"degenerate", r.degenerate},
            {"stop_reason", r.stop_reason},
            {"trace", trace}};
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

Json to_json(const KrakenParams& p) {
  return {{"k", p.k},
          {"m", p.m},
          {"s", p.s},
          {"hub_threshold", p.hub_threshold},
          {"separation", p.separation},
          {"blob_target_size", p.blob_target_size},
          {"max_arm_len", p.arm_cap()},
          {"growth_radius", p.growth_radius}};
}

Json to_json(const Kraken& k) {
  Json arms = Json::array();
  for (std::size_t i = 0; i < k.arms.size(); ++i) {
    for (int j = 0; j < 2; ++j) {
      arms.push_back({{"i", i},
                      {"j", j},
                      {"anchor", k.anchors[i][j]},
                      {"hub", k.hub_anchor[i][j]},
                      {"arm", k.arms[i][j].vertices},
                      {"blob", set_json(k.blobs[i][j])}});
    }
  }
  return {{"cycle", k.cycle.vertices()}, {"case_tag", std::string(to_string(k.case_tag))}, {"arms", arms}};
}

Json to_json(const MinimalSystemReport& r) {
  std::size_t failing = 0;
  for (const auto& a : r.final_audits) failing += a.pass() ? 0 : 1;
  Json j = {{"rounds", r.rounds},
            {"repairs", r.repairs},
            {"audits_clean", r.audits_clean},
            {"audits", r.final_audits.size()},
            {"failing_audits", failing}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const AuditReport& r) {
  Json j = {{"applicable", r.applicable}, {"center", r.center}};
  if (!r.applicable) return j;
  j["horizon"] = r.horizon;
  j["cycle_contact"] = check_json(r.cycle_contact);
  j["thinness"] = check_json(r.thinness);
  if (r.combined) j["combined"] = check_json(*r.combined);
  Json paths = Json::array();
  for (const auto& p : r.paths) {
    paths.push_back({{"path", p.path_index}, {"contact", check_json(p.contact)}, {"far", check_json(p.far)}});
  }
  j["paths"] = paths;
  j["pass"] = r.pass();
  return j;
}

Json to_json(const PathSystem& s) {
  Json paths = Json::array();
  for (const auto& lp : s.paths) paths.push_back({{"path", lp.path.vertices}, {"target", lp.target}});
  Json targets = Json::array();
  for (const auto& t : s.targets) targets.push_back(set_json(t));
  return {{"base_cycle", s.base_cycle.vertices()},
          {"target_kind", std::string(to_string(s.kind))},
          {"targets", targets},
          {"paths", paths},
          {"usage", s.usage()},
          {"max_len", s.max_len},
          {"total_length", s.total_length()}};
}

Json to_json(const KrakenReport& r) {
  Json j = {{"failure", std::string(to_string(r.failure))},
            {"hubs", r.hubs},
            {"cycle_length", r.cycle_length},
            {"hub_paths", r.hub_paths},
            {"blob_paths", r.blob_paths},
            {"blobs_found", r.blobs_found},
            {"blobs_wanted", r.blobs_wanted},
            {"params", to_json(r.params)},
            {"first_level", to_json(r.first_level)}};
  if (!r.message.empty()) j["message"] = r.message;
  if (r.case_tag) j["case_tag"] = std::string(to_string(*r.case_tag));
  if (r.second_level) j["second_level"] = to_json(*r.second_level);
  j["side_conditions"] = {{"all_anchors_hubs", r.side.all_anchors_hubs},
                          {"few_hubs", r.side.few_hubs},
                          {"anchors_separated", r.side.anchors_separated},
                          {"min_anchor_distance", r.side.min_anchor_distance}};
  return j;
}

Json to_json(const NestedCertificate& c) {
  Json segs = Json::array();
  for (const auto& s : c.segments) {
    Json e = {{"kind", s.kind}, {"i", s.i}, {"vertices", s.vertices}};
    if (s.j >= 0) e["j"] = s.j;
    segs.push_back(e);
  }
  return {{"outer", c.outer.vertices()},
          {"inner", c.inner.vertices()},
          {"inner_positions", c.inner_positions},
          {"case_tag", std::string(to_string(c.case_tag))},
          {"segments", segs}};
}

Json to_json(const NestedVerdict& v) {
  Json issues = Json::array();
  for (const auto& i : v.issues) {
    issues.push_back({{"clause", std::string(1, i.clause)}, {"detail", i.detail}, {"witness", i.witness}});
  }
  return {{"verdict", v.pass ? "PASS" : "FAIL"}, {"issues", issues}};
}

Json to_json(const OracleResult& r) {
  Json j = {{"found", r.found()}, {"exhaustive", r.exhaustive}, {"cycles_seen", r.cycles_seen}};
  if (r.found()) {
    j["outer"] = r.outer->vertices();
    j["inner"] = r.inner->vertices();
  }
  return j;
}

Json to_json(const PipelineResult& r) {
  Json attempts = Json::array();
  for (const auto& a : r.attempts) {
    Json e = {{"stage", a.stage}, {"params", to_json(a.params)}, {"kraken", to_json(a.kraken)}};
    if (!a.message.empty()) e["message"] = a.message;
    attempts.push_back(e);
  }
  Json j = {{"expander", to_json(r.expander)},
            {"extraction", to_json(r.extraction)},
            {"subgraph_vertices", r.subgraph_vertices.size()},
            {"attempts", attempts},
            {"status", r.ok() ? "certified" : "failed"}};
  if (r.ok()) {
    j["certificate"] = to_json(*r.certificate);
    j["verdict"] = to_json(r.verdict);
  } else {
    j["certificate"] = nullptr;
    j["failure"] = {{"stage", r.failure_stage}, {"message", r.failure}};
  }
  return j;
}

CertificateCycles certificate_from_json(const Json& j) {
  const Json* c = &j;
  if (j.is_object() && j.contains("certificate")) c = &j.at("certificate");
  if (!c->is_object() || !c->contains("outer") || !c->contains("inner")) {
    throw InputError("certificate JSON needs \"outer\" and \"inner\" arrays");
  }
  try {
    return {c->at("outer").get<std::vector<Vertex>>(), c->at("inner").get<std::vector<Vertex>>()};
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace nestcyc
