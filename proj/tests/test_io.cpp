#include "doctest.h"

#include <filesystem>
#include <random>
#include <string>

#include "nestcyc/error.hpp"
#include "nestcyc/generators.hpp"
#include "nestcyc/io.hpp"

using namespace nestcyc;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_edge_list(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

// Plain FNV-1a, written out here rather than reusing the library's.
std::uint64_t fnv(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

TEST_CASE("edge list parsing") {
  Graph g = parse_edge_list("3 3\n0 1\n1 2\n2 0\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);

  Graph empty = parse_edge_list("5 0\n");
  CHECK(empty.vertex_count() == 5);
  CHECK(empty.edge_count() == 0);

  const std::string loop = error_of("3 1\n0 0\n");
  CHECK(loop.find("line 2") != std::string::npos);
  CHECK(error_of("3 1\n0 3\n").find("line 2") != std::string::npos);
  CHECK(error_of("3 2\n0 1\n") != "");
  CHECK(error_of("3 1\n0 1\n1 2\n") != "");
  CHECK(error_of("3 1\n0 x\n").find("line 2") != std::string::npos);
  CHECK(error_of("") != "");
}

TEST_CASE("write then read is the identity") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 40;
    Graph g = gnp(n, 0.2, rng());
    Graph back = parse_edge_list(format_edge_list(g));
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
    CHECK(graph_hash(back) == graph_hash(g));
  }
}

TEST_CASE("graph hash is FNV-1a over the canonical text") {
  Graph g = complete_graph(4);
  CHECK(format_edge_list(g) == "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  CHECK(graph_hash(g) == fnv(format_edge_list(g)));
  CHECK(hash_hex(0xabcULL) == "0000000000000abc");
}

TEST_CASE("atomic write") {
  auto dir = std::filesystem::temp_directory_path() / "nestcyc_io_test";
  std::filesystem::create_directories(dir);
  auto path = dir / "g.el";
  write_file_atomic(path, "2 1\n0 1\n");
  CHECK(read_file(path) == "2 1\n0 1\n");
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  Graph g = read_edge_list(path);
  CHECK(g.edge_count() == 1);
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(read_file(dir / "missing"), InputError);
}
