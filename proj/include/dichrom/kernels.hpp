#pragma once

#include "dichrom/digraph.hpp"

#include <vector>

namespace dichrom {

/// Largest scan the mask kernels accept: 2^n subsets are visited.
inline constexpr int kMaskScanCap = 26;

/// alpha(d) by testing every vertex subset, spread over OpenMP threads.
/// Agrees with the branch-and-bound alpha(); throws CapExceeded above
/// kMaskScanCap vertices.
int alpha_scan(const Digraph& d);

/// Maximal acyclic sets by a parallel scan over all subsets, in the same
/// lexicographic order as maximal_acyclic_sets().
std::vector<std::vector<Vertex>> maximal_acyclic_sets_scan(const Digraph& d);

}  // namespace dichrom
