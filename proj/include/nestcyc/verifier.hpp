#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nestcyc/graph.hpp"

namespace nestcyc {

/// Two chords of a cycle of length outer_length, given as 0-based positions
/// along the cycle: e = (e1, e2), f = (f1, f2).
struct ChordPair {
  std::size_t outer_length = 0;
  std::size_t e1 = 0, e2 = 0;
  std::size_t f1 = 0, f2 = 0;
};

/// True iff the chords interleave around the cycle. Chords sharing an
/// endpoint never cross.
bool chords_cross(const ChordPair& p);

struct VerifyIssue {
  char clause = 'a';  // a: cycles valid, b: nesting, c: edge-disjoint, d: no crossings
  std::string detail;
  std::vector<Vertex> witness;
};

struct NestedVerdict {
  bool pass = true;
  std::vector<VerifyIssue> issues;
  bool has_clause(char c) const;
};

/// Checks that outer and inner are cycles of g, V(inner) is contained in
/// V(outer), the edge sets are disjoint and no two inner edges cross under the
/// order of outer. Sequences are taken as given (no canonicalisation needed).
NestedVerdict verify_nested_no_crossings(const Graph& g, std::span<const Vertex> outer,
                                         std::span<const Vertex> inner);

struct SearchCaps {
  std::size_t max_cycles = 500'000;
  std::size_t max_cycle_length = 0;  // 0: n
  std::uint64_t time_budget_ms = 0;  // 0: unlimited
};

struct CycleEnumeration {
  std::vector<Cycle> cycles;  // ordered by (length, canonical sequence)
  bool truncated = false;
};

/// Calls `sink` for every simple cycle of length `length` in canonical form,
/// in increasing lexicographic order. Stops early when sink returns false.
/// Returns false iff stopped early.
bool for_each_cycle_of_length(const Graph& g, std::size_t length,
                              const std::function<bool(const std::vector<Vertex>&)>& sink);

CycleEnumeration enumerate_cycles(const Graph& g, const SearchCaps& caps = {});

struct OracleResult {
  std::optional<Cycle> outer;
  std::optional<Cycle> inner;
  bool exhaustive = false;
  std::size_t cycles_seen = 0;
  bool found() const { return outer.has_value(); }
};

/// First verified (outer, inner) pair in the order (outer length, inner
/// length, outer sequence, inner sequence).
OracleResult oracle_find_nested_pair(const Graph& g, const SearchCaps& caps = {});

struct ScanRow {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t samples = 0;
  double fraction = 0.0;
  bool exhaustive = true;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  std::optional<std::size_t> min_m_with_pair;
};

/// For each m in [m_lo, m_hi], samples G(n, m) and decides each sample with
/// the oracle. Sample t of edge count m uses a seed derived from (seed, m, t).
ScanResult extremal_scan(std::size_t n, std::size_t m_lo, std::size_t m_hi, std::size_t samples,
                         const SearchCaps& caps, std::uint64_t seed, unsigned jobs = 1);

std::string scan_csv(const ScanResult& r);

}  // namespace nestcyc
