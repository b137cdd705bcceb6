#include "dichrom/digraph.hpp"
#include "dichrom/generators.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace dichrom;

namespace {

Digraph transitive_tournament(int n) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) arcs.push_back({u, w});
  }
  return Digraph(n, arcs);
}

std::vector<Vertex> mask_vertices(int n, std::uint64_t mask) {
  std::vector<Vertex> out;
  for (int v = 0; v < n; ++v) {
    if ((mask >> v) & 1U) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("construction rejects loops, parallel arcs and bad endpoints") {
  CHECK_THROWS(Digraph(2, {{0, 0}}));
  CHECK_THROWS(Digraph(2, {{0, 1}, {0, 1}}));
  CHECK_THROWS(Digraph(2, {{0, 2}}));
  CHECK_NOTHROW(Digraph(2, {{0, 1}, {1, 0}}));
  CHECK_THROWS(Graph(2, {{0, 1}, {1, 0}}));
}

TEST_CASE("arcs are kept sorted") {
  Digraph d(3, {{2, 0}, {0, 1}, {1, 2}});
  CHECK(d.arcs() == std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}});
  CHECK(d.has_arc(2, 0));
  CHECK_FALSE(d.has_arc(0, 2));
}

TEST_CASE("is_acyclic examples") {
  Digraph c3 = dicycle(3);
  std::vector<Vertex> path{0, 1}, all{0, 1, 2};
  CHECK(is_acyclic(c3, path));
  CHECK_FALSE(is_acyclic(c3, all));
  Digraph digon(2, {{0, 1}, {1, 0}});
  CHECK_FALSE(is_acyclic(digon, path));
  std::vector<Vertex> bad{0, 3};
  CHECK_THROWS(is_acyclic(c3, bad));
}

TEST_CASE("is_acyclic agrees with transitive closure on random subsets") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Digraph d = random_digraph(8, 0.25, seed);
    for (std::uint64_t mask = 0; mask < 256; mask += 7) {
      auto subset = mask_vertices(8, mask);
      bool expected = oracle::acyclic(d, mask);
      REQUIRE(is_acyclic(d, subset) == expected);
      REQUIRE(is_acyclic_mask(d, mask) == expected);
      auto cycle = find_directed_cycle(d, subset);
      REQUIRE(cycle.empty() == expected);
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        REQUIRE(d.has_arc(cycle[i], cycle[(i + 1) % cycle.size()]));
        REQUIRE(((mask >> cycle[i]) & 1U));
      }
    }
  }
}

TEST_CASE("strong components examples") {
  CHECK(strong_components(dicycle(3)).components == std::vector<std::vector<Vertex>>{{0, 1, 2}});
  auto with_source = strong_components(add_source(dicycle(3)));
  CHECK(with_source.components == std::vector<std::vector<Vertex>>{{3}, {0, 1, 2}});
  CHECK(strong_components(transitive_tournament(4)).components ==
        std::vector<std::vector<Vertex>>{{0}, {1}, {2}, {3}});
}

TEST_CASE("strong components match pairwise reachability") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int n = 2 + static_cast<int>(seed % 9);
    Digraph d = random_digraph(n, 0.18, seed);
    auto scc = strong_components(d);
    auto reach = oracle::closure(d, std::vector<bool>(n, true));
    std::vector<int> block_of(n, -1);
    int covered = 0;
    for (std::size_t b = 0; b < scc.components.size(); ++b) {
      REQUIRE(std::is_sorted(scc.components[b].begin(), scc.components[b].end()));
      for (Vertex v : scc.components[b]) {
        REQUIRE(block_of[v] == -1);
        block_of[v] = static_cast<int>(b);
        ++covered;
      }
    }
    REQUIRE(covered == n);
    for (int u = 0; u < n; ++u) {
      for (int w = 0; w < n; ++w) REQUIRE((block_of[u] == block_of[w]) == oracle::same_component(reach, u, w));
    }
    for (const auto& a : d.arcs()) REQUIRE(block_of[a.tail] <= block_of[a.head]);
  }
}

TEST_CASE("digirth examples") {
  CHECK(digirth(dicycle(5)) == 5);
  CHECK(digirth(symmetric(complete(3))) == 2);
  CHECK_FALSE(digirth(transitive_tournament(5)).has_value());
}

TEST_CASE("digirth agrees with all-pairs shortest walks") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Digraph d = random_digraph(2 + static_cast<int>(seed % 8), 0.2, seed + 500);
    auto g = digirth(d);
    REQUIRE(g == oracle::digirth(d));
    REQUIRE(!g.has_value() == is_acyclic(d));
  }
}

TEST_CASE("underlying graph") {
  CHECK(underlying_graph(dicycle(3)) == complete(3));
  CHECK(underlying_graph(Digraph(2, {{0, 1}, {1, 0}})) == Graph(2, {{0, 1}}));
  CHECK(underlying_graph(transitive_tournament(5)) == complete(5));
}

TEST_CASE("induced subdigraph renames vertices in the given order") {
  Digraph d = add_source(dicycle(3));
  std::vector<Vertex> keep{3, 1, 2};
  Digraph sub = induced_subdigraph(d, keep);
  CHECK(sub == Digraph(3, {{0, 1}, {0, 2}, {1, 2}}));
}

TEST_CASE("forests and undirected cycles") {
  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  std::vector<Vertex> all{0, 1, 2, 3}, three{0, 1, 2};
  CHECK_FALSE(is_forest(c4, all));
  CHECK(is_forest(c4, three));
  auto cycle = find_undirected_cycle(c4, all);
  REQUIRE(cycle.size() == 4);
  for (std::size_t i = 0; i < cycle.size(); ++i) CHECK(c4.has_edge(cycle[i], cycle[(i + 1) % 4]));
}

TEST_CASE("degree order is decreasing with ties by index") {
  CHECK(degree_order(wheel(4)) == std::vector<Vertex>{4, 0, 1, 2, 3});
}
