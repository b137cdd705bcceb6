#pragma once

#include "dichrom/digraph.hpp"
#include "dichrom/fraction.hpp"
#include "dichrom/verify.hpp"

#include <cstdint>
#include <vector>

namespace dichrom {

/// The reduced fractions k/d with 1 <= d <= k <= n_bound lying in (lo, hi],
/// strictly ascending.
struct CandidateLadder {
  int n_bound = 0;
  Fraction lo;
  Fraction hi;
  std::vector<Fraction> fractions;
};

CandidateLadder candidate_fractions(int n_bound, const Fraction& lo, const Fraction& hi);

struct CandidateTest {
  Fraction candidate;
  bool feasible;
};

struct SolverStats {
  std::uint64_t nodes = 0;
  int candidates_tested = 0;
  /// Every ladder candidate tested, in test order.
  std::vector<CandidateTest> tests;
};

struct SolverResult {
  Fraction value;
  CircularColouring witness;
  SolverStats stats;
};

struct SolverOptions {
  /// Scan the ladder linearly instead of by bisection, and fail loudly if a
  /// feasible candidate is ever followed by an infeasible one.
  bool paranoid = false;
};

/// Thrown in paranoid mode when feasibility is not monotone along a ladder.
class MonotonicityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Least k with an acyclic (k,1)-colouring, solved per strong component.
int dichromatic(const Digraph& d);
/// Same, with a (k,1) witness for the whole digraph.
SolverResult dichromatic_colouring(const Digraph& d);

/// Exact star dichromatic number: the least feasible k/d for acyclic
/// (k,d)-colourings, computed per strong component and maximised. The witness
/// colours all of d at the reduced (k,d) of the value.
SolverResult star_dichromatic(const Digraph& d, const SolverOptions& options = {});

/// The same quantity without the strong-component split; used to cross-check
/// the decomposition.
SolverResult star_dichromatic_whole(const Digraph& d, const SolverOptions& options = {});

/// Exact circular dichromatic number. Never decomposed: a dominating source
/// shows directed cuts are not transparent for this parameter.
SolverResult circular_dichromatic(const Digraph& d, const SolverOptions& options = {});

/// Least feasible k/d over (k,d)-tree-colourings with k <= numerator_cap
/// (raised to the vertex arboricity if smaller). numerator_cap <= 0 selects
/// |V(G)|.
SolverResult circular_vertex_arboricity(const Graph& g, int numerator_cap = 0, const SolverOptions& options = {});

/// Size of a largest vertex set inducing an acyclic subdigraph (branch and bound).
int alpha(const Digraph& d);
/// A maximum acyclic set, ascending: the first one met when vertices are
/// tried for inclusion before exclusion in index order.
std::vector<Vertex> maximum_acyclic_set(const Digraph& d);

}  // namespace dichrom
