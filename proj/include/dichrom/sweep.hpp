#pragma once

#include "dichrom/digraph.hpp"
#include "dichrom/fraction.hpp"
#include "dichrom/generators.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace dichrom {

enum class SweepParameter { Star, Circular, Fractional, Dichromatic };

std::optional<SweepParameter> parse_sweep_parameter(const std::string& name);
std::string to_string(SweepParameter p);

/// Value of a parameter on one digraph.
Fraction evaluate(const Digraph& d, SweepParameter p);

struct SweepOptions {
  int cap = kDefaultOrientationCap;
  /// Only visit one orientation per orbit of the wheel's dihedral group.
  /// The graph must then be wheel(k) for some k.
  bool wheel_symmetry = false;
};

struct SweepResult {
  Fraction value;
  Digraph witness;
  std::uint64_t mask = 0;
  std::uint64_t evaluated = 0;
};

/// Maximum of the parameter over the orientations of g. The witness is the
/// lowest-mask orientation (among those visited) attaining the maximum.
/// Orientations are evaluated on OpenMP threads; the reduction is ordered
/// by (value, mask) so the result never depends on scheduling.
SweepResult sweep_orientations(const Graph& g, SweepParameter p, const SweepOptions& options = {});

/// Single-threaded reference for sweep_orientations.
SweepResult sweep_orientations_serial(const Graph& g, SweepParameter p, const SweepOptions& options = {});

/// Lowest mask in the orbit of `mask` under the dihedral symmetries of
/// wheel(k) (rim rotations and reflections, hub fixed).
std::uint64_t wheel_canonical_mask(int k, std::uint64_t mask);

}  // namespace dichrom
