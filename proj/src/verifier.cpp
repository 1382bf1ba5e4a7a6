#include "nestcyc/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <deque>
#include <string>
#include <thread>

#include "nestcyc/error.hpp"
#include "nestcyc/generators.hpp"
#include "nestcyc/rng.hpp"

namespace nestcyc {

bool chords_cross(const ChordPair& p) {
  const std::size_t l = p.outer_length;
  if (p.e1 >= l || p.e2 >= l || p.f1 >= l || p.f2 >= l) throw InputError("chord index out of range");
  if (p.e1 == p.f1 || p.e1 == p.f2 || p.e2 == p.f1 || p.e2 == p.f2) return false;
  const std::size_t lo = std::min(p.e1, p.e2);
  const std::size_t hi = std::max(p.e1, p.e2);
  const bool f1_in = lo < p.f1 && p.f1 < hi;
  const bool f2_in = lo < p.f2 && p.f2 < hi;
  return f1_in != f2_in;
}

bool NestedVerdict::has_clause(char c) const {
  return std::any_of(issues.begin(), issues.end(), [c](const VerifyIssue& i) { return i.clause == c; });
}

namespace {

std::string edge_text(Vertex a, Vertex b) {
  return std::to_string(a) + "-" + std::to_string(b);
}

void check_cycle(const Graph& g, std::span<const Vertex> seq, const char* name,
                 NestedVerdict& out) {
  auto fail = [&](std::string detail, std::vector<Vertex> w) {
    out.pass = false;
    out.issues.push_back({'a', std::string(name) + ": " + std::move(detail), std::move(w)});
  };
  if (seq.size() < 3) {
    fail("fewer than 3 vertices", {seq.begin(), seq.end()});
    return;
  }
  std::vector<Vertex> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) fail("repeated vertex " + std::to_string(*dup), {*dup});
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Vertex a = seq[i];
    const Vertex b = seq[(i + 1) % seq.size()];
    if (!g.has_vertex(a) || !g.has_vertex(b)) {
      fail("vertex out of range", {a, b});
      return;
    }
    if (!g.has_edge(a, b)) fail("missing edge " + edge_text(a, b), {a, b});
  }
}

}  // namespace

NestedVerdict verify_nested_no_crossings(const Graph& g, std::span<const Vertex> outer,
                                         std::span<const Vertex> inner) {
  NestedVerdict out;
  check_cycle(g, outer, "outer", out);
  check_cycle(g, inner, "inner", out);
  if (!out.pass) return out;

  const std::size_t n = g.vertex_count();
  const std::size_t l1 = outer.size();
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < l1; ++i) pos[outer[i]] = static_cast<int>(i);
  for (Vertex v : inner) {
    if (pos[v] < 0) {
      out.pass = false;
      out.issues.push_back({'b', "inner vertex " + std::to_string(v) + " not on outer", {v}});
    }
  }
  if (!out.pass) return out;

  const std::size_t l2 = inner.size();
  for (std::size_t i = 0; i < l2; ++i) {
    const Vertex a = inner[i];
    const Vertex b = inner[(i + 1) % l2];
    const std::size_t gap = static_cast<std::size_t>(std::abs(pos[a] - pos[b]));
    if (gap == 1 || gap == l1 - 1) {
      out.pass = false;
      out.issues.push_back({'c', "shared edge " + edge_text(a, b), {a, b}});
    }
  }
  for (std::size_t i = 0; i < l2; ++i) {
    const Vertex a = inner[i];
    const Vertex b = inner[(i + 1) % l2];
    for (std::size_t j = i + 1; j < l2; ++j) {
      const Vertex c = inner[j];
      const Vertex d = inner[(j + 1) % l2];
      ChordPair cp{l1, static_cast<std::size_t>(pos[a]), static_cast<std::size_t>(pos[b]),
                   static_cast<std::size_t>(pos[c]), static_cast<std::size_t>(pos[d])};
      if (chords_cross(cp)) {
        out.pass = false;
        out.issues.push_back(
            {'d', "inner edges " + edge_text(a, b) + " and " + edge_text(c, d) + " cross", {a, b, c, d}});
      }
    }
  }
  return out;
}

// ------------------------------------------------------------- enumeration

bool for_each_cycle_of_length(const Graph& g, std::size_t length,
                              const std::function<bool(const std::vector<Vertex>&)>& sink) {
  const std::size_t n = g.vertex_count();
  if (length < 3 || length > n) return true;
  std::vector<char> on_path(n, 0);
  std::vector<int> dist(n);
  std::vector<Vertex> path;
  std::vector<std::size_t> cursor;
  path.reserve(length);
  for (std::size_t s0 = 0; s0 + length <= n; ++s0) {
    const Vertex s = static_cast<Vertex>(s0);
    // distances back to s inside labels >= s
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::deque<Vertex> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (y > s && dist[y] == kUnreached) {
          dist[y] = dist[x] + 1;
          q.push_back(y);
        }
      }
    }
    path.assign(1, s);
    cursor.assign(1, 0);
    on_path[s] = 1;
    while (!path.empty()) {
      const Vertex cur = path.back();
      auto nb = g.neighbors(cur);
      std::size_t& ci = cursor.back();
      if (path.size() == length) {
        if (g.has_edge(cur, s) && path[1] < cur) {
          if (!sink(path)) {
            for (Vertex v : path) on_path[v] = 0;
            return false;
          }
        }
        on_path[cur] = 0;
        path.pop_back();
        cursor.pop_back();
        continue;
      }
      bool advanced = false;
      while (ci < nb.size()) {
        const Vertex w = nb[ci++];
        if (w <= s || on_path[w] || dist[w] == kUnreached) continue;
        const std::size_t used = path.size();  // edges after stepping to w
        if (static_cast<std::size_t>(dist[w]) > length - used) continue;
        path.push_back(w);
        cursor.push_back(0);
        on_path[w] = 1;
        advanced = true;
        break;
      }
      if (!advanced) {
        on_path[cur] = 0;
        path.pop_back();
        cursor.pop_back();
      }
    }
  }
  return true;
}

namespace {

class Budget {
 public:
  explicit Budget(const SearchCaps& caps)
      : caps_(caps), start_(std::chrono::steady_clock::now()) {}
  bool expired() {
    if (caps_.time_budget_ms == 0) return false;
    if (++ticks_ % 1024 != 0) return hit_;
    auto el = std::chrono::steady_clock::now() - start_;
    hit_ = std::chrono::duration_cast<std::chrono::milliseconds>(el).count() >=
           static_cast<long long>(caps_.time_budget_ms);
    return hit_;
  }

 private:
  SearchCaps caps_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t ticks_ = 0;
  bool hit_ = false;
};

std::size_t length_cap(const Graph& g, const SearchCaps& caps) {
  const std::size_t n = g.vertex_count();
  return caps.max_cycle_length == 0 ? n : std::min(n, caps.max_cycle_length);
}

// Appends the cycles of one length; false if a cap interrupted it.
bool collect_length(const Graph& g, std::size_t len, const SearchCaps& caps, Budget& budget,
                    std::size_t& total, std::vector<Cycle>& out) {
  bool complete = true;
  for_each_cycle_of_length(g, len, [&](const std::vector<Vertex>& c) {
    if (total >= caps.max_cycles || budget.expired()) {
      complete = false;
      return false;
    }
    out.emplace_back(c);
    ++total;
    return true;
  });
  return complete;
}

}  // namespace

CycleEnumeration enumerate_cycles(const Graph& g, const SearchCaps& caps) {
  CycleEnumeration out;
  Budget budget(caps);
  std::size_t total = 0;
  const std::size_t cap = length_cap(g, caps);
  for (std::size_t len = 3; len <= cap; ++len) {
    if (!collect_length(g, len, caps, budget, total, out.cycles)) {
      out.truncated = true;
      break;
    }
  }
  return out;
}

namespace {

struct Packed {
  std::vector<std::uint64_t> bits;
  explicit Packed(std::size_t n) : bits((n + 63) / 64, 0) {}
  void set(Vertex v) { bits[v >> 6] |= std::uint64_t{1} << (v & 63); }
  bool subset_of(const Packed& o) const {
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] & ~o.bits[i]) return false;
    }
    return true;
  }
};

bool nested_without_crossings(const std::vector<Vertex>& outer_seq, const std::vector<int>& pos,
                              const std::vector<Vertex>& inner) {
  const std::size_t l1 = outer_seq.size();
  const std::size_t l2 = inner.size();
  std::vector<std::size_t> ip(l2);
  for (std::size_t i = 0; i < l2; ++i) ip[i] = static_cast<std::size_t>(pos[inner[i]]);
  for (std::size_t i = 0; i < l2; ++i) {
    const std::size_t a = ip[i];
    const std::size_t b = ip[(i + 1) % l2];
    const std::size_t gap = a > b ? a - b : b - a;
    if (gap == 1 || gap == l1 - 1) return false;
  }
  for (std::size_t i = 0; i < l2; ++i) {
    for (std::size_t j = i + 1; j < l2; ++j) {
      if (chords_cross({l1, ip[i], ip[(i + 1) % l2], ip[j], ip[(j + 1) % l2]})) return false;
    }
  }
  return true;
}

}  // namespace

OracleResult oracle_find_nested_pair(const Graph& g, const SearchCaps& caps) {
  OracleResult out;
  const std::size_t n = g.vertex_count();
  Budget budget(caps);
  std::size_t total = 0;
  const std::size_t cap = length_cap(g, caps);
  std::vector<std::vector<Cycle>> by_len(cap + 1);
  std::vector<std::vector<Packed>> masks(cap + 1);
  bool complete = cap >= n;
  std::vector<int> pos(n, -1);
  for (std::size_t l1 = 3; l1 <= cap; ++l1) {
    const bool whole = collect_length(g, l1, caps, budget, total, by_len[l1]);
    for (const Cycle& c : by_len[l1]) {
      Packed p(n);
      for (Vertex v : c.vertices()) p.set(v);
      masks[l1].push_back(std::move(p));
    }
    for (std::size_t oi = 0; oi < by_len[l1].size(); ++oi) {
      const auto& oseq = by_len[l1][oi].vertices();
      for (std::size_t i = 0; i < l1; ++i) pos[oseq[i]] = static_cast<int>(i);
      // an inner cycle on all of V(outer) with only chords must cross itself
      for (std::size_t l2 = 3; l2 < l1; ++l2) {
        for (std::size_t ii = 0; ii < by_len[l2].size(); ++ii) {
          if (!masks[l2][ii].subset_of(masks[l1][oi])) continue;
          const auto& iseq = by_len[l2][ii].vertices();
          if (!nested_without_crossings(oseq, pos, iseq)) continue;
          if (!verify_nested_no_crossings(g, oseq, iseq).pass) {
            throw InvariantError("oracle pair rejected by the verifier");
          }
          out.outer = by_len[l1][oi];
          out.inner = by_len[l2][ii];
          out.exhaustive = complete && whole;
          out.cycles_seen = total;
          return out;
        }
      }
      for (Vertex v : oseq) pos[v] = -1;
    }
    if (!whole) {
      complete = false;
      break;
    }
  }
  out.exhaustive = complete;
  out.cycles_seen = total;
  return out;
}

ScanResult extremal_scan(std::size_t n, std::size_t m_lo, std::size_t m_hi, std::size_t samples,
                         const SearchCaps& caps, std::uint64_t seed, unsigned jobs) {
  const std::size_t max_m = n * (n - 1) / 2;
  if (n < 1 || m_lo > m_hi || m_hi > max_m) throw InputError("edge range outside [0, n(n-1)/2]");
  if (samples == 0) throw InputError("samples must be positive");
  ScanResult out;
  jobs = std::max(1u, jobs);
  for (std::size_t m = m_lo; m <= m_hi; ++m) {
    std::vector<char> found(samples, 0);
    std::vector<char> exhaustive(samples, 1);
    auto work = [&](std::size_t first) {
      for (std::size_t t = first; t < samples; t += jobs) {
        Graph g = gnm(n, m, stream_seed(seed, (static_cast<std::uint64_t>(m) << 32) | t));
        OracleResult r = oracle_find_nested_pair(g, caps);
        found[t] = r.found() ? 1 : 0;
        exhaustive[t] = (r.found() || r.exhaustive) ? 1 : 0;
      }
    };
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
      for (auto& t : pool) t.join();
    }
    ScanRow row;
    row.n = n;
    row.m = m;
    row.samples = samples;
    const auto hits = static_cast<std::size_t>(std::count(found.begin(), found.end(), 1));
    row.fraction = static_cast<double>(hits) / static_cast<double>(samples);
    row.exhaustive = std::all_of(exhaustive.begin(), exhaustive.end(), [](char c) { return c != 0; });
    if (hits > 0 && !out.min_m_with_pair) out.min_m_with_pair = m;
    out.rows.push_back(row);
  }
  return out;
}

std::string scan_csv(const ScanResult& r) {
  std::string out = "n,m,samples,fraction,exhaustive\n";
  char buf[128];
  for (const ScanRow& row : r.rows) {
    std::snprintf(buf, sizeof buf, "%zu,%zu,%zu,%.6f,%s\n", row.n, row.m, row.samples, row.fraction,
                  row.exhaustive ? "true" : "false");
    out += buf;
  }
  return out;
}

}  // namespace nestcyc
