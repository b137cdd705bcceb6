#include "dichrom/generators.hpp"
#include "dichrom/io.hpp"

#include <doctest.h>

#include <string>

using namespace dichrom;

namespace {

int error_line(const std::string& text) {
  try {
    parse_graph_text(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("parsing the two object kinds") {
  CHECK(parse_digraph("p dg 3 3\na 0 1\na 1 2\na 2 0") == dicycle(3));
  CHECK(parse_graph("p ug 3 3\ne 0 1\ne 1 2\ne 0 2") == complete(3));
  CHECK(std::holds_alternative<Graph>(parse_graph_text("p ug 1 0\n")));
  CHECK(parse_digraph("c a comment\np dg 2 1\nc another\na 1 0\n") == Digraph(2, {{1, 0}}));
}

TEST_CASE("errors carry line numbers") {
  try {
    parse_graph_text("p dg 2 1\na 0 0");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()) == "loop at line 2");
    CHECK(e.line() == 2);
  }
  CHECK(error_line("p dg x 1\n") == 1);
  CHECK(error_line("a 0 1\np dg 2 1\n") == 1);
  CHECK(error_line("p dg 2 1\na 0 2\n") == 2);
  CHECK(error_line("p dg 2 2\na 0 1\na 0 1\n") == 3);
  CHECK(error_line("p ug 2 2\ne 0 1\ne 1 0\n") == 3);
  CHECK(error_line("p dg 3 2\na 0 1\n") >= 0);
  CHECK(error_line("p dg 3 1\na 0 1\na 1 2\n") >= 0);
  CHECK(error_line("p ug 2 1\na 0 1\n") == 2);
  CHECK(error_line("") == 0);
}

TEST_CASE("serialization is canonical") {
  CHECK(serialize(dicycle(3)) == "p dg 3 3\na 0 1\na 1 2\na 2 0\n");
  CHECK(serialize(Digraph(1)) == "p dg 1 0\n");
  CHECK(serialize(complete(3)) == "p ug 3 3\ne 0 1\ne 0 2\ne 1 2\n");
}

TEST_CASE("parse and serialize round-trip") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Digraph d = random_digraph(1 + static_cast<int>(seed % 9), 0.3, seed);
    REQUIRE(parse_digraph(serialize(d)) == d);
    REQUIRE(serialize(parse_digraph(serialize(d))) == serialize(d));
  }
  for (const Digraph& d : {circulant(7, 3), knauer(5, 3), wheel_alternating(6), add_source(dicycle(4))})
    CHECK(parse_digraph(serialize(d)) == d);
  for (const Graph& g : {kneser2(5), wheel(5), icosahedron(), octahedron()}) CHECK(parse_graph(serialize(g)) == g);
}

TEST_CASE("colouring files") {
  CHECK(parse_colouring("0 2\n1 0\n2 1\n", 3) == std::vector<int>{2, 0, 1});
  CHECK(parse_colouring("2 1\n0 2\n1 0\n", 3) == std::vector<int>{2, 0, 1});
  CHECK_THROWS(parse_colouring("0 1\n", 2));
  CHECK_THROWS(parse_colouring("0 1\n0 1\n", 2));
  CHECK_THROWS(parse_colouring("0 1\n5 1\n", 2));
  CHECK(serialize_colouring({2, 0, 1}) == "0 2\n1 0\n2 1\n");
}
