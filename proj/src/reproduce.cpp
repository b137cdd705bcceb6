#include "dichrom/reproduce.hpp"

#include "dichrom/fractional.hpp"
#include "dichrom/generators.hpp"
#include "dichrom/lp.hpp"
#include "dichrom/search.hpp"
#include "dichrom/solvers.hpp"
#include "dichrom/sweep.hpp"
#include "dichrom/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dichrom {

bool CriterionReport::pass() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const ReproRow& r) { return r.pass; });
}

namespace {

ReproRow row(std::string label, const Fraction& expected, const Fraction& actual) {
  return {std::move(label), expected.str(), actual.str(), expected == actual};
}

ReproRow check(std::string label, std::string expected, std::string actual, bool pass) {
  return {std::move(label), std::move(expected), std::move(actual), pass};
}

CriterionReport circulants() {
  CriterionReport r{1, "circulants C(k,d): star = circular = fractional = k/d", {}};
  for (int k = 3; k <= 7; ++k) {
    for (int d = 2; d < k; ++d) {
      if (std::gcd(k, d) != 1) continue;
      const Digraph c = circulant(k, d);
      const Fraction want(k, d);
      const std::string name = "C(" + std::to_string(k) + "," + std::to_string(d) + ")";
      r.rows.push_back(row(name + " star", want, star_dichromatic(c).value));
      r.rows.push_back(row(name + " circular", want, circular_dichromatic(c).value));
      r.rows.push_back(row(name + " fractional", want, fractional_dichromatic(c).value));
    }
  }
  return r;
}

CriterionReport dicycles() {
  CriterionReport r{2, "directed cycles: all three parameters = n/(n-1)", {}};
  for (int n = 3; n <= 7; ++n) {
    const Digraph c = dicycle(n);
    const Fraction want(n, n - 1);
    const std::string name = "dicycle(" + std::to_string(n) + ")";
    r.rows.push_back(row(name + " star", want, star_dichromatic(c).value));
    r.rows.push_back(row(name + " circular", want, circular_dichromatic(c).value));
    r.rows.push_back(row(name + " fractional", want, fractional_dichromatic(c).value));
  }
  return r;
}

CriterionReport source_stacking() {
  CriterionReport r{3, "dominating source: star = n/(n-1), circular = 2", {}};
  for (int n = 3; n <= 6; ++n) {
    const Digraph d = add_source(dicycle(n));
    const std::string name = "source+dicycle(" + std::to_string(n) + ")";
    r.rows.push_back(row(name + " star", Fraction(n, n - 1), star_dichromatic(d).value));
    r.rows.push_back(row(name + " circular", Fraction(2), circular_dichromatic(d).value));
  }
  return r;
}

CriterionReport wheels() {
  CriterionReport r{4, "wheels: odd 3/2, even 5/3; alternating fractional (3k-2)/(2k-2)", {}};
  SweepOptions symmetric_sweep;
  symmetric_sweep.wheel_symmetry = true;
  for (auto [k, want] : {std::pair{3, Fraction(3, 2)}, {4, Fraction(5, 3)}, {5, Fraction(3, 2)}}) {
    auto result = sweep_orientations(wheel(k), SweepParameter::Star, symmetric_sweep);
    r.rows.push_back(row("max star over orientations of W" + std::to_string(k), want, result.value));
  }
  for (int k : {4, 6}) {
    const Digraph w = wheel_alternating(k);
    const std::string name = "alternating W" + std::to_string(k);
    r.rows.push_back(row(name + " star", Fraction(5, 3), star_dichromatic(w).value));
    r.rows.push_back(row(name + " fractional", Fraction(3 * k - 2, 2 * k - 2), fractional_dichromatic(w).value));
  }
  return r;
}

CriterionReport kneser() {
  CriterionReport r{5, "Kneser K(5,2): fractional 5/2, star 3", {}};
  const Graph petersen = kneser2(5);
  const Digraph s = symmetric(petersen);
  const Fraction star = star_dichromatic(s).value;
  const int chi = dichromatic(s);
  r.rows.push_back(row("S(K(5,2)) fractional", Fraction(5, 2), fractional_dichromatic(s).value));
  r.rows.push_back(row("K(5,2) fractional chromatic", Fraction(5, 2), fractional_chromatic(petersen)));
  r.rows.push_back(row("S(K(5,2)) star", Fraction(3), star));
  r.rows.push_back(row("S(K(5,2)) dichromatic", Fraction(3), Fraction(chi)));
  r.rows.push_back(row("S(K(5,2)) ceil(star)", Fraction(chi), Fraction(star.ceil(), 1)));
  return r;
}

CriterionReport knauer_family() {
  CriterionReport r{6, "Knauer digraphs: order, digirth, (g-1,g-2)-colouring, alpha bound", {}};
  for (int g = 3; g <= 5; ++g) {
    for (int f = 1; f <= 4; ++f) {
      const Digraph d = knauer(g, f);
      const std::string name = "knauer(" + std::to_string(g) + "," + std::to_string(f) + ")";
      const int n = d.order();
      r.rows.push_back(row(name + " |V|", Fraction(f * (g - 1) + 1), Fraction(n)));
      auto girth = digirth(d);
      r.rows.push_back(check(name + " digirth", std::to_string(g), girth ? std::to_string(*girth) : "inf",
                             girth && *girth == g));
      auto colouring = exists_acyclic_kd(d, g - 1, g - 2);
      const bool sound = colouring && !check_acyclic_kd(d, *colouring);
      r.rows.push_back(check(name + " (" + std::to_string(g - 1) + "," + std::to_string(g - 2) + ")-colouring",
                             "feasible", sound ? "feasible" : "infeasible", sound));
      const int a = alpha(d);
      const Fraction bound(n * (g - 2) + 1, g - 1);
      r.rows.push_back(check(name + " alpha", "<= " + bound.str(), std::to_string(a), Fraction(a) <= bound));
    }
  }
  return r;
}

/// Tally of one property over the whole input corpus.
struct Tally {
  explicit Tally(std::string n) : name(std::move(n)) {}

  std::string name;
  int checked = 0;
  int failed = 0;
  std::string first_failure;

  void record(bool ok, const std::string& where) {
    ++checked;
    if (!ok && failed++ == 0) first_failure = where;
  }

  ReproRow as_row() const {
    std::string actual = std::to_string(checked - failed) + "/" + std::to_string(checked) + " hold";
    if (failed) actual += " (first failure: " + first_failure + ")";
    return check(name, "all hold", actual, failed == 0 && checked > 0);
  }
};

CriterionReport property_suites() {
  CriterionReport r{7, "property suites on seeded random digraphs and orientations of K4", {}};
  std::vector<std::pair<std::string, Digraph>> corpus;
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + i % 5;
    const double p = 0.2 + 0.15 * (i / 5 % 4);
    corpus.emplace_back("random#" + std::to_string(i), random_digraph(n, p, 1000 + i));
  }
  const Graph k4 = complete(4);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k4.size()); ++mask)
    corpus.emplace_back("K4 orientation " + std::to_string(mask), orientation(k4, mask));

  Tally sandwich{"sandwich fractional <= star <= circular"}, ceiling{"ceil(star) = ceil(circular) = dichromatic"},
      ladder{"monotone feasibility along the ladder"}, scc{"strong-component split preserves star"},
      lp{"fractional LP certificates re-verify"}, witness{"solver witnesses pass the checkers"};

  for (const auto& [name, d] : corpus) {
    const SolverResult star = star_dichromatic(d);
    const SolverResult circ = circular_dichromatic(d);
    const SolverResult part = dichromatic_colouring(d);
    const FractionalCertificate frac = fractional_dichromatic(d);
    const int chi = static_cast<int>(part.value.num());

    sandwich.record(frac.value <= star.value && star.value <= circ.value, name);
    ceiling.record(star.value.ceil() == chi && circ.value.ceil() == chi, name);

    bool monotone = true;
    if (d.order() > 0) {
      for (const Fraction& q : candidate_fractions(d.order(), Fraction(0), Fraction(d.order())).fractions) {
        const bool feasible = exists_acyclic_kd(d, static_cast<int>(q.num()), static_cast<int>(q.den())).has_value();
        if (feasible != (q >= star.value)) monotone = false;
      }
    }
    ladder.record(monotone, name);

    scc.record(star_dichromatic_whole(d).value == star.value, name);

    bool lp_ok = certificate_holds(d, frac) && fractional_dichromatic_whole(d).value == frac.value;
    if (d.order() > 0 && !is_acyclic(d)) {
      const auto sets = maximal_acyclic_sets(d).sets;
      const LinearProgram program = covering_lp(d.order(), sets);
      lp_ok = lp_ok && certificate_is_optimal(program, simplex_solve(program));
    }
    lp.record(lp_ok, name);

    witness.record(!check_acyclic_kd(d, star.witness) && !check_circular_kd(d, circ.witness) &&
                       !check_partition_k(d, part.witness),
                   name);
  }
  for (const Tally* t : {&sandwich, &ceiling, &ladder, &scc, &lp, &witness}) r.rows.push_back(t->as_row());
  return r;
}

CriterionReport planar_spot_checks() {
  CriterionReport r{8, "planar triangulations: star and va* at most 5/2", {}};
  const Fraction bound(5, 2);
  for (auto [name, g] : {std::pair<std::string, Graph>{"octahedron", octahedron()}, {"icosahedron", icosahedron()}}) {
    Fraction worst(0);
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
      worst = std::max(worst, star_dichromatic(random_orientation(g, seed)).value);
    r.rows.push_back(check("max star over 20 seeded orientations of the " + name, "<= 5/2", worst.str(),
                           worst <= bound));
    const Fraction va = circular_vertex_arboricity(g).value;
    r.rows.push_back(check("va* of the " + name, "<= 5/2", va.str(), va <= bound));
  }
  return r;
}

}  // namespace

CriterionReport run_criterion(int id) {
  switch (id) {
    case 1: return circulants();
    case 2: return dicycles();
    case 3: return source_stacking();
    case 4: return wheels();
    case 5: return kneser();
    case 6: return knauer_family();
    case 7: return property_suites();
    case 8: return planar_spot_checks();
  }
  throw std::invalid_argument("no criterion " + std::to_string(id));
}

std::string format_report(const CriterionReport& report) {
  std::size_t label = 5, expected = 8, actual = 6;
  for (const auto& r : report.rows) {
    label = std::max(label, r.label.size());
    expected = std::max(expected, r.expected.size());
    actual = std::max(actual, r.actual.size());
  }
  std::ostringstream out;
  out << "[" << report.id << "] " << report.title << "\n";
  for (const auto& r : report.rows) {
    out << "  " << r.label << std::string(label - r.label.size() + 2, ' ') << r.expected
        << std::string(expected - r.expected.size() + 2, ' ') << r.actual
        << std::string(actual - r.actual.size() + 2, ' ') << (r.pass ? "PASS" : "FAIL")
        << "\n";
  }
  return out.str();
}

}  // namespace dichrom
