#pragma once

#include "dichrom/digraph.hpp"
#include "dichrom/verify.hpp"

#include <cstdint>
#include <optional>

namespace dichrom {

struct SearchStats {
  std::uint64_t nodes = 0;
};

/// Backtracking feasibility tests for a fixed (k, d). Vertices are scanned in
/// decreasing degree order of the underlying graph, colours ascending, with
/// the first vertex pinned to colour 0; the colouring returned is therefore
/// the lexicographically least one under that scan order. nullopt means the
/// search space was exhausted.
///
/// All three require 1 <= d <= k and at most 64 vertices.
std::optional<CircularColouring> exists_acyclic_kd(const Digraph& d, int k, int width,
                                                   SearchStats* stats = nullptr);
std::optional<CircularColouring> exists_circular_kd(const Digraph& d, int k, int width,
                                                    SearchStats* stats = nullptr);
std::optional<CircularColouring> exists_tree_kd(const Graph& g, int k, int width,
                                                SearchStats* stats = nullptr);

}  // namespace dichrom
