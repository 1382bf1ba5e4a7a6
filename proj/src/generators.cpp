#include "nestcyc/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>
#include <unordered_set>

#include "nestcyc/error.hpp"
#include "nestcyc/rng.hpp"

namespace nestcyc {

namespace {

void require_label_range(std::size_t n) {
  if (n > static_cast<std::size_t>(INT32_MAX)) throw InputError("vertex count too large");
}

}  // namespace

Graph complete_graph(std::size_t n) {
  require_label_range(n);
  std::vector<Edge> e;
  e.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) e.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return build_graph(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  require_label_range(n);
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u) {
    e.push_back({static_cast<Vertex>(u), static_cast<Vertex>((u + 1) % n)});
  }
  return build_graph(n, e);
}

Graph hypercube(std::size_t dim) {
  if (dim > 24) throw InputError("hypercube dimension too large");
  const std::size_t n = std::size_t{1} << dim;
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t b = 0; b < dim; ++b) {
      const std::size_t v = u ^ (std::size_t{1} << b);
      if (u < v) e.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  return build_graph(n, e);
}

Graph torus_grid(std::size_t rows, std::size_t cols) {
  if (rows < 3 || cols < 3) throw InputError("torus needs at least 3 rows and 3 columns");
  const std::size_t n = rows * cols;
  require_label_range(n);
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
  std::vector<Edge> e;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      e.push_back({id(r, c), id(r, (c + 1) % cols)});
      e.push_back({id(r, c), id((r + 1) % rows, c)});
    }
  }
  return build_graph(n, e);
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("gnp probability outside [0, 1]");
  require_label_range(n);
  Rng rng(seed, 1);
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.unit() < p) e.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  return build_graph(n, e);
}

Graph gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  require_label_range(n);
  const std::size_t max_m = n < 2 ? 0 : n * (n - 1) / 2;
  if (m > max_m) throw InputError("gnm edge count exceeds n(n-1)/2");
  Rng rng(seed, 2);
  // draw the smaller of the edge set and its complement
  const bool complement = m > max_m / 2;
  const std::size_t draws = complement ? max_m - m : m;
  std::unordered_set<std::uint64_t> picked;
  std::vector<std::uint64_t> order;
  while (order.size() < draws) {
    const std::uint64_t u = rng.below(n);
    const std::uint64_t v = rng.below(n);
    if (u == v) continue;
    const std::uint64_t key = std::min(u, v) * n + std::max(u, v);
    if (picked.insert(key).second) order.push_back(key);
  }
  std::vector<Edge> e;
  if (!complement) {
    for (std::uint64_t key : order) {
      e.push_back({static_cast<Vertex>(key / n), static_cast<Vertex>(key % n)});
    }
  } else {
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (!picked.count(u * n + v)) e.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
      }
    }
  }
  return build_graph(n, e);
}

Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  require_label_range(n);
  if (d >= n && !(n == 0 && d == 0)) throw InputError("regular degree must be below n");
  if ((n * d) % 2 != 0) throw InputError("n*d must be even for a regular graph");
  Rng rng(seed, 3);
  for (int restart = 0; restart < 1000; ++restart) {
    std::vector<Vertex> points;
    points.reserve(n * d);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t t = 0; t < d; ++t) points.push_back(static_cast<Vertex>(v));
    }
    std::unordered_set<std::uint64_t> used;
    std::vector<Edge> e;
    bool stuck = false;
    while (!points.empty()) {
      bool placed = false;
      for (int tries = 0; tries < 200 && !placed; ++tries) {
        const std::size_t i = rng.below(points.size());
        std::size_t j = rng.below(points.size() - 1);
        if (j >= i) ++j;
        const Vertex a = points[i];
        const Vertex b = points[j];
        if (a == b) continue;
        const std::uint64_t key =
            static_cast<std::uint64_t>(std::min(a, b)) * n + static_cast<std::uint64_t>(std::max(a, b));
        if (used.count(key)) continue;
        used.insert(key);
        e.push_back({a, b});
        const std::size_t hi = std::max(i, j);
        const std::size_t lo = std::min(i, j);
        points[hi] = points.back();
        points.pop_back();
        points[lo] = points.back();
        points.pop_back();
        placed = true;
      }
      if (!placed) {
        stuck = true;
        break;
      }
    }
    if (!stuck) return build_graph(n, e);
  }
  throw InputError("could not complete a random regular graph");
}

namespace {

std::vector<std::string> split_args(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || ch == 'x') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::size_t to_count(const std::string& s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw InputError("bad integer '" + s + "' in generator spec");
  }
  return v;
}

double to_real(const std::string& s) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw InputError("");
    return v;
  } catch (const std::exception&) {
    throw InputError("bad number '" + s + "' in generator spec");
  }
}

}  // namespace

Graph generate_graph(std::string_view spec, std::uint64_t seed) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw InputError("generator spec needs name:args");
  const std::string name(spec.substr(0, colon));
  const auto args = split_args(spec.substr(colon + 1));
  auto want = [&](std::size_t count) {
    if (args.size() != count) {
      throw InputError("generator '" + name + "' takes " + std::to_string(count) + " argument(s)");
    }
  };
  if (name == "complete") {
    want(1);
    return complete_graph(to_count(args[0]));
  }
  if (name == "cycle") {
    want(1);
    return cycle_graph(to_count(args[0]));
  }
  if (name == "hypercube") {
    want(1);
    return hypercube(to_count(args[0]));
  }
  if (name == "torus" || name == "torus_grid") {
    want(2);
    return torus_grid(to_count(args[0]), to_count(args[1]));
  }
  if (name == "gnp") {
    want(2);
    return gnp(to_count(args[0]), to_real(args[1]), seed);
  }
  if (name == "gnm") {
    want(2);
    return gnm(to_count(args[0]), to_count(args[1]), seed);
  }
  if (name == "regular" || name == "random_regular") {
    want(2);
    return random_regular(to_count(args[0]), to_count(args[1]), seed);
  }
  throw InputError("unknown generator '" + name + "'");
}

}  // namespace nestcyc
