#include "dichrom/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace dichrom {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, int line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(tok) + "'");
  return value;
}

constexpr long long kMaxVertices = 1 << 24;

bool blank(std::string_view line) { return line.find_first_not_of(" \t") == std::string_view::npos; }

}  // namespace

GraphObject parse_graph_text(std::string_view text) {
  auto lines = split_lines(text);
  bool directed = false;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<Arc> pairs;
  std::set<Arc> seen;

  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const int lineno = static_cast<int>(idx) + 1;
    std::string_view line = lines[idx];
    if (blank(line)) continue;
    auto tok = tokens(line);
    if (tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(lineno, "second header");
      if (tok.size() != 4 || (tok[1] != "dg" && tok[1] != "ug"))
        throw ParseError(lineno, "malformed header, expected 'p dg <n> <m>' or 'p ug <n> <m>'");
      directed = tok[1] == "dg";
      n = to_int(tok[2], lineno, "vertex count");
      m = to_int(tok[3], lineno, "arc count");
      if (n < 0 || m < 0) throw ParseError(lineno, "malformed header, negative count");
      if (n > kMaxVertices) throw ParseError(lineno, "malformed header, vertex count too large");
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "malformed header, data before 'p' line");
    const char* expected = directed ? "a" : "e";
    if (tok[0] != expected || tok.size() != 3)
      throw ParseError(lineno, std::string("expected '") + expected + " <u> <v>'");
    long long u = to_int(tok[1], lineno, "endpoint");
    long long w = to_int(tok[2], lineno, "endpoint");
    if (u < 0 || u >= n || w < 0 || w >= n) throw ParseError(lineno, "endpoint out of range");
    if (u == w) throw ParseError(lineno, "loop");
    if (static_cast<long long>(pairs.size()) >= m) throw ParseError(lineno, "count mismatch, more than " + std::to_string(m) + " arcs");
    Arc a{static_cast<Vertex>(u), static_cast<Vertex>(w)};
    if (!directed && a.tail > a.head) std::swap(a.tail, a.head);
    if (!seen.insert(a).second) throw ParseError(lineno, directed ? "duplicate arc" : "duplicate edge");
    pairs.push_back(a);
  }
  if (!have_header) throw ParseError(0, "malformed header, no 'p' line");
  if (static_cast<long long>(pairs.size()) != m)
    throw ParseError(static_cast<int>(lines.size()), "count mismatch, header declares " + std::to_string(m) +
                                                          " but found " + std::to_string(pairs.size()));
  if (directed) return Digraph(static_cast<int>(n), std::move(pairs));
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const Arc& a : pairs) edges.push_back({a.tail, a.head});
  return Graph(static_cast<int>(n), std::move(edges));
}

Digraph parse_digraph(std::string_view text) {
  auto obj = parse_graph_text(text);
  if (auto* d = std::get_if<Digraph>(&obj)) return std::move(*d);
  throw ParseError(0, "expected a digraph ('p dg'), got a graph");
}

Graph parse_graph(std::string_view text) {
  auto obj = parse_graph_text(text);
  if (auto* g = std::get_if<Graph>(&obj)) return std::move(*g);
  throw ParseError(0, "expected a graph ('p ug'), got a digraph");
}

std::string serialize(const Digraph& d) {
  std::ostringstream os;
  os << "p dg " << d.order() << ' ' << d.size() << '\n';
  for (const Arc& a : d.arcs()) os << "a " << a.tail << ' ' << a.head << '\n';
  return os.str();
}

std::string serialize(const Graph& g) {
  std::ostringstream os;
  os << "p ug " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << "e " << e.u << ' ' << e.w << '\n';
  return os.str();
}

std::vector<int> parse_colouring(std::string_view text, int n) {
  std::vector<int> colours(n, -1);
  auto lines = split_lines(text);
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const int lineno = static_cast<int>(idx) + 1;
    if (blank(lines[idx])) continue;
    auto tok = tokens(lines[idx]);
    if (tok[0] == "c") continue;
    if (tok.size() != 2) throw ParseError(lineno, "expected '<vertex> <colour>'");
    long long v = to_int(tok[0], lineno, "vertex");
    long long c = to_int(tok[1], lineno, "colour");
    if (v < 0 || v >= n) throw ParseError(lineno, "vertex out of range");
    if (c < 0) throw ParseError(lineno, "negative colour");
    if (colours[v] != -1) throw ParseError(lineno, "vertex coloured twice");
    colours[v] = static_cast<int>(c);
  }
  for (int v = 0; v < n; ++v) {
    if (colours[v] == -1) throw ParseError(0, "partial colouring, vertex " + std::to_string(v) + " uncoloured");
  }
  return colours;
}

std::string serialize_colouring(const std::vector<int>& colours) {
  std::ostringstream os;
  for (std::size_t v = 0; v < colours.size(); ++v) os << v << ' ' << colours[v] << '\n';
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

}  // namespace dichrom
