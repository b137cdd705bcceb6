#pragma once

#include "dichrom/digraph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dichrom {

/// Malformed input text; carries the 1-based line number of the offence
/// (0 when the problem is the input as a whole, e.g. a missing header).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(what + (line > 0 ? " at line " + std::to_string(line) : std::string())),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

using GraphObject = std::variant<Digraph, Graph>;

/// Reads the line format:
///   c <comment>
///   p dg <n> <m>   followed by m lines  a <u> <v>
///   p ug <n> <m>   followed by m lines  e <u> <v>
GraphObject parse_graph_text(std::string_view text);
Digraph parse_digraph(std::string_view text);
Graph parse_graph(std::string_view text);

/// Canonical form: header then arcs (edges) in lexicographic order.
std::string serialize(const Digraph& d);
std::string serialize(const Graph& g);

/// "<vertex> <colour>" per line, every vertex 0..n-1 exactly once.
std::vector<int> parse_colouring(std::string_view text, int n);
std::string serialize_colouring(const std::vector<int>& colours);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace dichrom
