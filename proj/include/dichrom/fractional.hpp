#pragma once

#include "dichrom/digraph.hpp"
#include "dichrom/fraction.hpp"
#include "dichrom/lp.hpp"

#include <vector>

namespace dichrom {

inline constexpr int kDefaultSetSystemCap = 16;

/// Inclusion-maximal acyclic vertex sets of a digraph, each ascending, listed
/// in lexicographic order.
struct AcyclicSetSystem {
  int ground = 0;
  std::vector<std::vector<Vertex>> sets;
};

/// Enumerates the maximal acyclic sets by depth-first extension (a vertex is
/// included only if the set stays acyclic, maximality checked at the leaves).
/// Throws CapExceeded if d has more than `cap` vertices.
AcyclicSetSystem maximal_acyclic_sets(const Digraph& d, int cap = kDefaultSetSystemCap);

/// Maximal independent sets of g by the same scheme.
std::vector<std::vector<Vertex>> maximal_independent_sets(const Graph& g, int cap = kDefaultSetSystemCap);

/// min sum x_S  subject to  sum_{S containing v} x_S >= 1 for every vertex v,
/// x >= 0, one column per listed set.
LinearProgram covering_lp(int ground, const std::vector<std::vector<Vertex>>& sets);

/// Optimal fractional cover by acyclic sets together with a dual vertex
/// weighting of the same total. Only sets with positive weight are listed.
struct FractionalCertificate {
  std::vector<std::vector<Vertex>> sets;
  std::vector<Fraction> weights;
  std::vector<Fraction> dual;
  Fraction value;
};

/// Fractional dichromatic number. Solved per strong component (no directed
/// cycle crosses a directed cut, so acyclic sets of the parts combine) and
/// glued into one certificate for the whole digraph. The cap applies to the
/// largest strong component.
FractionalCertificate fractional_dichromatic(const Digraph& d, int cap = kDefaultSetSystemCap);

/// Single LP over all maximal acyclic sets of d; cap applies to |V(d)|.
FractionalCertificate fractional_dichromatic_whole(const Digraph& d, int cap = kDefaultSetSystemCap);

/// Fractional chromatic number of g via its independent-set covering LP.
Fraction fractional_chromatic(const Graph& g, int cap = kDefaultSetSystemCap);

/// |V(D)| / alpha(D).
Fraction fractional_lower_bound(const Digraph& d);

/// Largest total dual weight over acyclic vertex sets, by exhaustive
/// extension search. Independent of the LP machinery.
Fraction max_weight_acyclic_set(const Digraph& d, const std::vector<Fraction>& weights);

/// Re-verifies a certificate from scratch: every listed set is acyclic,
/// weights are non-negative and cover each vertex at least once, the dual is
/// non-negative with weight at most 1 on every acyclic set, and both totals
/// equal the stated value.
bool certificate_holds(const Digraph& d, const FractionalCertificate& cert);

}  // namespace dichrom
