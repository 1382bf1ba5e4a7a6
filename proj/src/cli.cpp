#include "nestcyc/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nestcyc/error.hpp"
#include "nestcyc/generators.hpp"
#include "nestcyc/io.hpp"
#include "nestcyc/kraken.hpp"
#include "nestcyc/pipeline.hpp"
#include "nestcyc/serialize.hpp"
#include "nestcyc/verifier.hpp"

namespace nestcyc {

namespace {

struct Options {
  std::string gen;
  std::string in;
  std::uint64_t seed = 0;
  std::optional<double> eps1;
  std::optional<double> k;
  std::optional<double> hub_threshold;
  std::optional<std::size_t> blob_size;
  std::optional<std::size_t> max_arm_len;
  std::string caps;
  std::string out;
  std::string csv;
  unsigned jobs = 1;
  bool timings = false;
  // verify
  std::string graph_path;
  std::string cert_path;
  // scan
  std::size_t n = 6;
  std::size_t m_lo = 0;
  std::optional<std::size_t> m_hi;
  std::size_t samples = 20;
};

SearchCaps parse_caps(const std::string& text) {
  SearchCaps caps;
  if (text.empty()) return caps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("caps entry '" + item + "' needs key=value");
    const std::string key = item.substr(0, eq);
    std::uint64_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoull(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("caps value in '" + item + "' is not a count");
    }
    if (key == "max_cycles") {
      caps.max_cycles = value;
    } else if (key == "max_len") {
      caps.max_cycle_length = value;
    } else if (key == "time_ms") {
      caps.time_budget_ms = value;
    } else {
      throw InputError("unknown caps key '" + key + "'");
    }
  }
  if (caps.max_cycles == 0) throw InputError("max_cycles must be positive");
  return caps;
}

Graph load_graph(const Options& o) {
  if (o.gen.empty() == o.in.empty()) throw InputError("give exactly one of --gen or --in");
  if (!o.gen.empty()) return generate_graph(o.gen, o.seed);
  return read_edge_list(std::filesystem::path(o.in));
}

Json config_json(const Options& o, const std::string& command) {
  Json c = {{"command", command}, {"seed", o.seed}};
  if (!o.gen.empty()) c["gen"] = o.gen;
  if (!o.in.empty()) c["in"] = o.in;
  if (o.eps1) c["eps1"] = *o.eps1;
  if (o.k) c["k"] = *o.k;
  if (o.hub_threshold) c["hub_threshold"] = *o.hub_threshold;
  if (o.blob_size) c["blob_size"] = *o.blob_size;
  if (o.max_arm_len) c["max_arm_len"] = *o.max_arm_len;
  if (!o.caps.empty()) c["caps"] = o.caps;
  return c;
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_file_atomic(o.out, text);
  }
}

Json record(const Options& o, const std::string& command, const Graph& g) {
  return {{"schema_version", kSchemaVersion}, {"config", config_json(o, command)}, {"graph", graph_summary(g)}};
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

ExpanderParams expander_for(const Options& o, const Graph& g) {
  const double eps1 = o.eps1.value_or(0.1);
  const double d = g.vertex_count() == 0 ? 0.0 : average_degree(g).to_double();
  ExpanderParams p{eps1, o.k.value_or(eps1 * d)};
  p.validate();
  return p;
}

int run_gen(const Options& o, std::ostream& out) {
  Graph g = load_graph(o);
  emit(o, out, format_edge_list(g));
  return 0;
}

int run_extract(const Options& o, std::ostream& out) {
  Graph g = load_graph(o);
  if (g.edge_count() == 0) throw InputError("graph has no edges");
  Json j = record(o, "extract", g);
  ExpanderParams p = expander_for(o, g);
  Stopwatch sw;
  Extraction ext = extract_expander_subgraph(g, p);
  j["expander"] = to_json(p);
  j["extraction"] = to_json(ext.report);
  if (ext.subgraph) j["subgraph"] = ext.subgraph->to_original;
  if (o.timings) j["timings_ms"] = {{"extract", sw.ms()}};
  emit(o, out, dump(j));
  return ext.subgraph ? 0 : 1;
}

int run_kraken(const Options& o, std::ostream& out) {
  Graph g = load_graph(o);
  Json j = record(o, "kraken", g);
  ExpanderParams p = expander_for(o, g);
  KrakenParams kp = KrakenParams::desk_defaults(g);
  if (o.hub_threshold) kp.hub_threshold = *o.hub_threshold;
  if (o.blob_size) kp.s = *o.blob_size;
  if (o.max_arm_len) kp.max_arm_len = *o.max_arm_len;
  kp.blob_target_size = std::max(kp.blob_target_size, kp.s);
  Stopwatch sw;
  KrakenBuild kb = build_kraken(g, p, kp);
  j["expander"] = to_json(p);
  j["report"] = to_json(kb.report);
  j["kraken"] = kb.kraken ? to_json(*kb.kraken) : Json(nullptr);
  if (o.timings) j["timings_ms"] = {{"kraken", sw.ms()}};
  emit(o, out, dump(j));
  return kb.kraken ? 0 : 1;
}

int run_pipeline_cmd(const Options& o, std::ostream& out) {
  Graph g = load_graph(o);
  Json j = record(o, "pipeline", g);
  PipelineConfig cfg;
  if (o.eps1) cfg.eps1 = *o.eps1;
  cfg.k = o.k;
  cfg.hub_threshold = o.hub_threshold;
  cfg.blob_size = o.blob_size;
  cfg.max_arm_len = o.max_arm_len;
  Stopwatch sw;
  PipelineResult r = run_pipeline(g, cfg);
  j.update(to_json(r));
  if (o.timings) j["timings_ms"] = {{"pipeline", sw.ms()}};
  emit(o, out, dump(j));
  return r.ok() ? 0 : 1;
}

int run_verify(const Options& o, std::ostream& out) {
  Graph g = read_edge_list(std::filesystem::path(o.graph_path));
  Json cj;
  try {
    cj = Json::parse(read_file(o.cert_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("certificate is not valid JSON: ") + e.what());
  }
  CertificateCycles cc = certificate_from_json(cj);
  NestedVerdict v = verify_nested_no_crossings(g, cc.outer, cc.inner);
  Json j = {{"schema_version", kSchemaVersion}, {"graph", graph_summary(g)}};
  j.update(to_json(v));
  emit(o, out, dump(j));
  return v.pass ? 0 : 1;
}

int run_oracle(const Options& o, std::ostream& out) {
  Graph g = load_graph(o);
  Json j = record(o, "oracle", g);
  Stopwatch sw;
  OracleResult r = oracle_find_nested_pair(g, parse_caps(o.caps));
  j["oracle"] = to_json(r);
  j["exhaustive"] = r.exhaustive;
  if (o.timings) j["timings_ms"] = {{"oracle", sw.ms()}};
  emit(o, out, dump(j));
  return r.found() ? 0 : 1;
}

int run_scan(const Options& o, std::ostream& out) {
  const std::size_t max_m = o.n * (o.n - 1) / 2;
  ScanResult r = extremal_scan(o.n, o.m_lo, o.m_hi.value_or(max_m), o.samples, parse_caps(o.caps),
                               o.seed, o.jobs);
  const std::string csv = scan_csv(r);
  if (!o.csv.empty()) write_file_atomic(o.csv, csv);
  Json j = {{"schema_version", kSchemaVersion},
            {"config", {{"command", "scan"}, {"n", o.n}, {"seed", o.seed}, {"samples", o.samples}}},
            {"rows", r.rows.size()},
            {"min_m_with_pair", r.min_m_with_pair ? Json(*r.min_m_with_pair) : Json(nullptr)}};
  if (o.csv.empty()) {
    emit(o, out, csv);
  } else {
    emit(o, out, dump(j));
  }
  return 0;
}

void add_source(CLI::App* sub, Options& o) {
  auto* gen = sub->add_option("--gen", o.gen, "generator spec, e.g. complete:20, gnp:200,0.05");
  auto* in = sub->add_option("--in", o.in, "edge-list file");
  gen->excludes(in);
  sub->add_option("--seed", o.seed, "64-bit seed");
}

void add_params(CLI::App* sub, Options& o) {
  sub->add_option("--eps1", o.eps1, "expansion constant eps1");
  sub->add_option("--k", o.k, "expansion parameter k (default eps1*d)");
  sub->add_option("--hub-threshold", o.hub_threshold, "degree threshold for hubs");
  sub->add_option("--blob-size", o.blob_size, "blob size s");
  sub->add_option("--max-arm-len", o.max_arm_len, "arm length cap");
}

}  // namespace

int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"nestcyc: nested cycles without crossings"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "generate a graph as an edge list");
  add_source(gen, o);
  auto* extract = app.add_subcommand("extract", "extract an expander subgraph");
  auto* kraken = app.add_subcommand("kraken", "build a kraken");
  auto* pipeline = app.add_subcommand("pipeline", "run the full construction");
  auto* oracle = app.add_subcommand("oracle", "brute-force search for a nested pair");
  for (auto* sub : {extract, kraken, pipeline, oracle}) add_source(sub, o);
  for (auto* sub : {extract, kraken, pipeline}) add_params(sub, o);
  oracle->add_option("--caps", o.caps, "max_cycles=N,max_len=N,time_ms=N");
  auto* verify = app.add_subcommand("verify", "check a certificate against a graph");
  verify->add_option("graph", o.graph_path, "edge-list file")->required();
  verify->add_option("certificate", o.cert_path, "certificate JSON")->required();
  auto* scan = app.add_subcommand("scan", "extremal scan over G(n,m)");
  scan->add_option("--n", o.n, "vertex count");
  scan->add_option("--m-lo", o.m_lo, "smallest edge count");
  scan->add_option("--m-hi", o.m_hi, "largest edge count (default n(n-1)/2)");
  scan->add_option("--samples", o.samples, "samples per edge count");
  scan->add_option("--seed", o.seed, "64-bit seed");
  scan->add_option("--caps", o.caps, "max_cycles=N,max_len=N,time_ms=N");
  scan->add_option("--csv", o.csv, "CSV output path");
  scan->add_option("--jobs", o.jobs, "worker threads");
  for (auto* sub : {gen, extract, kraken, pipeline, verify, oracle, scan}) {
    sub->add_option("--out", o.out, "output path (default stdout)");
  }
  for (auto* sub : {extract, kraken, pipeline, oracle}) {
    sub->add_flag("--timings", o.timings, "include wall-clock timings");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*gen) return run_gen(o, out);
    if (*extract) return run_extract(o, out);
    if (*kraken) return run_kraken(o, out);
    if (*pipeline) return run_pipeline_cmd(o, out);
    if (*verify) return run_verify(o, out);
    if (*oracle) return run_oracle(o, out);
    if (*scan) return run_scan(o, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace nestcyc
