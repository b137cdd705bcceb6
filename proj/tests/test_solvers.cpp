#include "dichrom/errors.hpp"
#include "dichrom/generators.hpp"
#include "dichrom/fractional.hpp"
#include "dichrom/search.hpp"
#include "dichrom/solvers.hpp"
#include "dichrom/sweep.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <numeric>

using namespace dichrom;

namespace {

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, edges);
}

std::vector<Fraction> fractions(std::initializer_list<std::pair<int, int>> list) {
  std::vector<Fraction> out;
  for (auto [k, d] : list) out.emplace_back(k, d);
  return out;
}

std::vector<Digraph> random_corpus(int count, int max_n, std::uint64_t base) {
  std::vector<Digraph> out;
  for (int i = 0; i < count; ++i) {
    const int n = 1 + i % max_n;
    out.push_back(random_digraph(n, 0.25 + 0.1 * (i % 4), base + i));
  }
  return out;
}

}  // namespace

TEST_CASE("candidate ladders") {
  CHECK(candidate_fractions(3, Fraction(1), Fraction(3)).fractions == fractions({{3, 2}, {2, 1}, {3, 1}}));
  CHECK(candidate_fractions(4, Fraction(1), Fraction(2)).fractions == fractions({{4, 3}, {3, 2}, {2, 1}}));
  CHECK(candidate_fractions(5, Fraction(3, 2), Fraction(2)).fractions == fractions({{5, 3}, {2, 1}}));
  CHECK(candidate_fractions(3, Fraction(3), Fraction(4)).fractions.empty());
  CHECK_THROWS(candidate_fractions(3, Fraction(2), Fraction(2)));
  CHECK_THROWS(candidate_fractions(0, Fraction(1), Fraction(2)));
}

TEST_CASE("candidate ladders are exactly the reduced fractions in the window") {
  for (int n = 1; n <= 9; ++n) {
    for (auto [lo, hi] : {std::pair{Fraction(0), Fraction(n)}, {Fraction(1), Fraction(2)}, {Fraction(3, 2), Fraction(7, 3)}}) {
      std::vector<Fraction> expected;
      for (int k = 1; k <= n; ++k) {
        for (int d = 1; d <= k; ++d) {
          Fraction q(k, d);
          if (lo < q && q <= hi && std::find(expected.begin(), expected.end(), q) == expected.end()) expected.push_back(q);
        }
      }
      std::sort(expected.begin(), expected.end());
      REQUIRE(candidate_fractions(n, lo, hi).fractions == expected);
    }
  }
}

TEST_CASE("dichromatic number examples") {
  CHECK(dichromatic(Digraph(4, {{0, 1}, {1, 2}, {0, 3}})) == 1);
  CHECK(dichromatic(Digraph(0)) == 1);
  for (int n = 2; n <= 7; ++n) CHECK(dichromatic(dicycle(n)) == 2);
  CHECK(dichromatic(symmetric(complete(3))) == 3);
}

TEST_CASE("star dichromatic number examples") {
  CHECK(star_dichromatic(circulant(5, 2)).value == Fraction(5, 2));
  CHECK(star_dichromatic(dicycle(4)).value == Fraction(4, 3));
  CHECK(star_dichromatic(add_source(dicycle(3))).value == Fraction(3, 2));
  CHECK(star_dichromatic(Digraph(3, {{0, 1}, {1, 2}})).value == Fraction(1));
}

TEST_CASE("circular dichromatic number examples") {
  CHECK(circular_dichromatic(add_source(dicycle(3))).value == Fraction(2));
  CHECK(circular_dichromatic(circulant(5, 2)).value == Fraction(5, 2));
  CHECK(circular_dichromatic(dicycle(5)).value == Fraction(5, 4));
}

TEST_CASE("circular vertex arboricity examples") {
  CHECK(circular_vertex_arboricity(cycle_graph(5)).value == Fraction(5, 4));
  CHECK(circular_vertex_arboricity(complete(3), 6).value == Fraction(3, 2));
  CHECK(circular_vertex_arboricity(Graph(4, {{0, 1}, {1, 2}, {1, 3}})).value == Fraction(1));
  // Brute force over every (k, d) with k <= cap, no ladder or bisection.
  for (auto [g, cap] : {std::pair{cycle_graph(5), 5}, {complete(3), 6}, {complete(4), 6}, {wheel(4), 5}}) {
    Fraction brute = oracle::least_ratio([&](int k, int w) { return oracle::tree_feasible(g, k, w); }, cap);
    CHECK(circular_vertex_arboricity(g, cap).value == brute);
  }
}

TEST_CASE("alpha examples") {
  CHECK(alpha(circulant(5, 2)) == 2);
  CHECK(alpha(circulant(7, 3)) == 3);
  for (int n = 2; n <= 8; ++n) CHECK(alpha(dicycle(n)) == n - 1);
  CHECK(alpha(Digraph(5, {{0, 1}, {1, 2}, {0, 4}})) == 5);
  CHECK(maximum_acyclic_set(dicycle(4)) == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("alpha agrees with subset enumeration") {
  for (const Digraph& d : random_corpus(80, 9, 7000)) REQUIRE(alpha(d) == oracle::alpha(d));
}

TEST_CASE("exact values agree with an unrestricted brute-force ladder") {
  for (const Digraph& d : random_corpus(40, 5, 8000)) {
    REQUIRE(star_dichromatic(d).value == oracle::star(d));
    REQUIRE(circular_dichromatic(d).value == oracle::circular(d));
    REQUIRE(dichromatic(d) == oracle::dichromatic(d));
  }
}

TEST_CASE("witnesses verify and no tested candidate below the value is feasible") {
  for (const Digraph& d : random_corpus(60, 6, 9000)) {
    SolverResult star = star_dichromatic(d);
    SolverResult circ = circular_dichromatic(d);
    SolverResult part = dichromatic_colouring(d);
    REQUIRE_FALSE(check_acyclic_kd(d, star.witness));
    REQUIRE_FALSE(check_circular_kd(d, circ.witness));
    REQUIRE_FALSE(check_partition_k(d, part.witness));
    REQUIRE(Fraction(star.witness.k, star.witness.d) == star.value);
    REQUIRE(Fraction(circ.witness.k, circ.witness.d) == circ.value);
    for (const auto& t : star.stats.tests) REQUIRE(t.feasible == (t.candidate >= star.value));
    for (const auto& t : circ.stats.tests) REQUIRE(t.feasible == (t.candidate >= circ.value));
  }
}

TEST_CASE("feasibility is monotone along the ladder up to 2n, for both notions") {
  for (const Digraph& d : random_corpus(40, 6, 10000)) {
    const int n = std::max(d.order(), 1);
    const Fraction star = star_dichromatic(d).value, circ = circular_dichromatic(d).value;
    for (const Fraction& q : candidate_fractions(2 * n, Fraction(0), Fraction(2 * n)).fractions) {
      const int k = static_cast<int>(q.num()), w = static_cast<int>(q.den());
      REQUIRE(exists_acyclic_kd(d, k, w).has_value() == (q >= star));
      REQUIRE(exists_circular_kd(d, k, w).has_value() == (q >= circ));
    }
  }
}

TEST_CASE("feasibility depends only on the ratio") {
  for (const Digraph& d : random_corpus(25, 4, 11000)) {
    for (int k = 1; k <= 4; ++k) {
      for (int w = 1; w <= k; ++w) {
        const bool base = exists_acyclic_kd(d, k, w).has_value();
        for (int m : {2, 3}) REQUIRE(exists_acyclic_kd(d, m * k, m * w).has_value() == base);
      }
    }
  }
}

TEST_CASE("paranoid mode scans linearly and agrees with bisection") {
  SolverOptions paranoid;
  paranoid.paranoid = true;
  for (const Digraph& d : random_corpus(40, 6, 12000)) {
    SolverResult fast = star_dichromatic(d);
    SolverResult slow = star_dichromatic(d, paranoid);
    REQUIRE(fast.value == slow.value);
    REQUIRE(circular_dichromatic(d).value == circular_dichromatic(d, paranoid).value);
  }
  SolverResult r = star_dichromatic(circulant(7, 3), paranoid);
  auto ladder = candidate_fractions(7, Fraction(2), Fraction(3)).fractions;
  REQUIRE(r.stats.tests.size() == ladder.size());
  for (std::size_t i = 0; i < ladder.size(); ++i) CHECK(r.stats.tests[i].candidate == ladder[i]);
}

TEST_CASE("sandwich and ceiling relations") {
  for (const Digraph& d : random_corpus(80, 6, 13000)) {
    const Fraction frac = fractional_dichromatic(d).value;
    const Fraction star = star_dichromatic(d).value;
    const Fraction circ = circular_dichromatic(d).value;
    const int chi = dichromatic(d);
    REQUIRE(frac <= star);
    REQUIRE(star <= circ);
    REQUIRE(star.ceil() == chi);
    REQUIRE(circ.ceil() == chi);
    REQUIRE((star == Fraction(1)) == is_acyclic(d));
  }
}

TEST_CASE("strong-component split agrees with the whole-digraph solver") {
  for (const Digraph& d : random_corpus(80, 7, 14000)) {
    SolverResult split = star_dichromatic(d);
    REQUIRE(split.value == star_dichromatic_whole(d).value);
    Fraction block_max(1);
    for (const auto& block : strong_components(d).components)
      block_max = std::max(block_max, star_dichromatic_whole(induced_subdigraph(d, block)).value);
    REQUIRE(split.value == block_max);
  }
}

TEST_CASE("a dominating source leaves star unchanged and lifts circular to the dichromatic number") {
  for (const Digraph& d : random_corpus(40, 5, 15000)) {
    Digraph s = add_source(d);
    REQUIRE(star_dichromatic(s).value == star_dichromatic(d).value);
    REQUIRE(circular_dichromatic(s).value == Fraction(dichromatic(d)));
  }
}

TEST_CASE("symmetric orientations: star equals circular") {
  for (const Graph& g : {complete(3), complete(4), cycle_graph(5)}) {
    Digraph s = symmetric(g);
    CHECK(star_dichromatic(s).value == circular_dichromatic(s).value);
  }
  CHECK(star_dichromatic(symmetric(cycle_graph(5))).value == Fraction(5, 2));
}

TEST_CASE("orientation sweeps") {
  CHECK(sweep_orientations(wheel(3), SweepParameter::Star).value == Fraction(3, 2));
  CHECK(sweep_orientations(wheel(4), SweepParameter::Star).value == Fraction(5, 3));
  SweepResult c4 = sweep_orientations(cycle_graph(4), SweepParameter::Star);
  CHECK(c4.value == Fraction(4, 3));
  CHECK(c4.evaluated == 16);
  CHECK(star_dichromatic(c4.witness).value == Fraction(4, 3));
  // Of the 16 orientations of C_4 only the two directed cycles are not acyclic.
  int cyclic = 0;
  for (const Digraph& d : all_orientations(cycle_graph(4))) cyclic += !is_acyclic(d);
  CHECK(cyclic == 2);
  CHECK_THROWS_AS(sweep_orientations(complete(7), SweepParameter::Star), CapExceeded);
}

TEST_CASE("size caps") {
  CHECK_THROWS_AS(star_dichromatic(dicycle(65)), CapExceeded);
  CHECK_THROWS_AS(circular_dichromatic(dicycle(65)), CapExceeded);
}
