#pragma once

#include <string>

#include "json.hpp"
#include "nestcyc/assembler.hpp"
#include "nestcyc/expander.hpp"
#include "nestcyc/kraken.hpp"
#include "nestcyc/linker.hpp"
#include "nestcyc/pipeline.hpp"
#include "nestcyc/verifier.hpp"

namespace nestcyc {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json graph_summary(const Graph& g);
Json to_json(const Rational& r);
Json to_json(const ExpanderParams& p);
Json to_json(const ExtractionReport& r);
Json to_json(const KrakenParams& p);
Json to_json(const Kraken& k);
Json to_json(const KrakenReport& r);
Json to_json(const MinimalSystemReport& r);
Json to_json(const AuditReport& r);
Json to_json(const PathSystem& s);
Json to_json(const NestedCertificate& c);
Json to_json(const NestedVerdict& v);
Json to_json(const OracleResult& r);
Json to_json(const PipelineResult& r);

struct CertificateCycles {
  std::vector<Vertex> outer;
  std::vector<Vertex> inner;
};

/// Accepts a full pipeline record (reads "certificate") or a bare
/// {"outer": [...], "inner": [...]} object. Throws InputError otherwise.
CertificateCycles certificate_from_json(const Json& j);

/// Deterministic text form: two-space indent, sorted keys, trailing newline.
std::string dump(const Json& j);

}  // namespace nestcyc
