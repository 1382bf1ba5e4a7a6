#include "nestcyc/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "nestcyc/error.hpp"

namespace nestcyc {

namespace {

class LineScanner {
 public:
  LineScanner(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  std::int64_t integer(const char* what) {
    skip_space();
    if (pos_ >= line_.size()) fail(std::string("expected ") + what);
    std::int64_t value = 0;
    const char* first = line_.data() + pos_;
    const char* last = line_.data() + line_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || (ptr != last && !is_space(*ptr))) {
      fail(std::string("malformed ") + what);
    }
    if (value < 0) fail(std::string("negative ") + what);
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  void expect_end() {
    skip_space();
    if (pos_ < line_.size()) fail("unexpected trailing text");
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t column, const std::string& msg) const {
    throw InputError("line " + std::to_string(line_no_) + ", column " +
                     std::to_string(column + 1) + ": " + msg);
  }
  std::size_t column() const { return pos_; }
  void skip_space() {
    while (pos_ < line_.size() && is_space(line_[pos_])) ++pos_;
  }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

bool blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  if (lines.empty()) throw InputError("line 1, column 1: missing header \"n m\"");

  LineScanner header(lines[0], 1);
  const std::int64_t n = header.integer("vertex count");
  const std::int64_t m = header.integer("edge count");
  header.expect_end();

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::size_t idx = 1;
  for (; idx < lines.size() && edges.size() < static_cast<std::size_t>(m); ++idx) {
    LineScanner sc(lines[idx], idx + 1);
    sc.skip_space();
    const std::size_t u_col = sc.column();
    const std::int64_t u = sc.integer("vertex");
    sc.skip_space();
    const std::size_t v_col = sc.column();
    const std::int64_t v = sc.integer("vertex");
    sc.expect_end();
    if (u >= n) sc.fail_at(u_col, "vertex " + std::to_string(u) + " out of range");
    if (v >= n) sc.fail_at(v_col, "vertex " + std::to_string(v) + " out of range");
    if (u == v) sc.fail_at(u_col, "self-loop at vertex " + std::to_string(u));
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (edges.size() < static_cast<std::size_t>(m)) {
    throw InputError("line " + std::to_string(idx + 1) + ", column 1: expected " +
                     std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  for (; idx < lines.size(); ++idx) {
    if (!blank(lines[idx])) {
      throw InputError("line " + std::to_string(idx + 1) + ", column 1: more edges than declared");
    }
  }
  return build_graph(static_cast<std::size_t>(n), edges);
}

Graph read_edge_list(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph read_edge_list(const std::filesystem::path& path) {
  return parse_edge_list(read_file(path));
}

std::string format_edge_list(const Graph& g) {
  std::string out;
  out.reserve(16 * (g.edge_count() + 1));
  out += std::to_string(g.vertex_count()) + ' ' + std::to_string(g.edge_count()) + '\n';
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

void write_edge_list(std::ostream& out, const Graph& g) { out << format_edge_list(g); }

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw InputError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::uint64_t graph_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : format_edge_list(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

}  // namespace nestcyc
