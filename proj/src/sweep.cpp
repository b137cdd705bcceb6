#include "dichrom/sweep.hpp"

#include "dichrom/errors.hpp"
#include "dichrom/fractional.hpp"
#include "dichrom/solvers.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <vector>

namespace dichrom {

std::optional<SweepParameter> parse_sweep_parameter(const std::string& name) {
  if (name == "star") return SweepParameter::Star;
  if (name == "circular") return SweepParameter::Circular;
  if (name == "fractional") return SweepParameter::Fractional;
  if (name == "dichromatic") return SweepParameter::Dichromatic;
  return std::nullopt;
}

std::string to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::Star: return "star";
    case SweepParameter::Circular: return "circular";
    case SweepParameter::Fractional: return "fractional";
    case SweepParameter::Dichromatic: return "dichromatic";
  }
  return "?";
}

Fraction evaluate(const Digraph& d, SweepParameter p) {
  switch (p) {
    case SweepParameter::Star: return star_dichromatic(d).value;
    case SweepParameter::Circular: return circular_dichromatic(d).value;
    case SweepParameter::Fractional: return fractional_dichromatic(d).value;
    case SweepParameter::Dichromatic: return Fraction(dichromatic(d));
  }
  throw std::invalid_argument("unknown parameter");
}

namespace {

/// Edge index of every ordered rim/spoke pair, for permuting masks.
struct WheelEdges {
  int k;
  Graph g;
  std::vector<std::vector<int>> index;

  explicit WheelEdges(int k_) : k(k_), g(wheel(k_)), index(k_ + 1, std::vector<int>(k_ + 1, -1)) {
    for (int i = 0; i < g.size(); ++i) {
      const Edge& e = g.edges()[i];
      index[e.u][e.w] = index[e.w][e.u] = i;
    }
  }

  /// Image of `mask` under the rim map v -> (sign * v + shift) mod k.
  std::uint64_t apply(std::uint64_t mask, int sign, int shift) const {
    auto image = [&](int v) { return v == k ? k : ((sign * v + shift) % k + k) % k; };
    std::uint64_t out = 0;
    for (int i = 0; i < g.size(); ++i) {
      const Edge& e = g.edges()[i];
      const bool flipped = (mask >> i) & 1U;
      const int tail = image(flipped ? e.w : e.u), head = image(flipped ? e.u : e.w);
      const int j = index[tail][head];
      if (tail > head) out |= std::uint64_t{1} << j;
    }
    return out;
  }
};

int wheel_rim_size(const Graph& g) {
  const int k = g.order() - 1;
  if (k < 3 || !(g == wheel(k))) throw std::invalid_argument("wheel symmetry requested for a graph that is not a wheel");
  return k;
}

std::uint64_t canonical(const WheelEdges& w, std::uint64_t mask) {
  std::uint64_t best = mask;
  for (int sign : {1, -1}) {
    for (int shift = 0; shift < w.k; ++shift) best = std::min(best, w.apply(mask, sign, shift));
  }
  return best;
}

struct Candidate {
  Fraction value;
  std::uint64_t mask = 0;
  bool set = false;

  void offer(const Fraction& v, std::uint64_t m) {
    if (!set || v > value || (v == value && m < mask)) {
      value = v;
      mask = m;
      set = true;
    }
  }
};

struct Plan {
  std::uint64_t count;
  std::optional<WheelEdges> wheel;
};

Plan plan(const Graph& g, const SweepOptions& options) {
  require_cap(g.size(), std::min(options.cap, 62), "edge count");
  Plan p{std::uint64_t{1} << g.size(), std::nullopt};
  if (options.wheel_symmetry) p.wheel.emplace(wheel_rim_size(g));
  return p;
}

bool visited(const Plan& p, std::uint64_t mask) { return !p.wheel || canonical(*p.wheel, mask) == mask; }

SweepResult finish(const Graph& g, const Candidate& best, std::uint64_t evaluated) {
  return {best.value, orientation(g, best.mask), best.mask, evaluated};
}

}  // namespace

std::uint64_t wheel_canonical_mask(int k, std::uint64_t mask) { return canonical(WheelEdges(k), mask); }

SweepResult sweep_orientations_serial(const Graph& g, SweepParameter p, const SweepOptions& options) {
  Plan pl = plan(g, options);
  Candidate best;
  std::uint64_t evaluated = 0;
  for (std::uint64_t mask = 0; mask < pl.count; ++mask) {
    if (!visited(pl, mask)) continue;
    best.offer(evaluate(orientation(g, mask), p), mask);
    ++evaluated;
  }
  return finish(g, best, evaluated);
}

SweepResult sweep_orientations(const Graph& g, SweepParameter p, const SweepOptions& options) {
  Plan pl = plan(g, options);
  Candidate best;
  std::uint64_t evaluated = 0;
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(pl.count);
#pragma omp parallel
  {
    Candidate local;
    std::uint64_t local_evaluated = 0;
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t m = 0; m < count; ++m) {
      const auto mask = static_cast<std::uint64_t>(m);
      try {
        if (!visited(pl, mask)) continue;
        local.offer(evaluate(orientation(g, mask), p), mask);
        ++local_evaluated;
      } catch (...) {
#pragma omp critical(dichrom_sweep_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(dichrom_sweep_reduce)
    {
      if (local.set) best.offer(local.value, local.mask);
      evaluated += local_evaluated;
    }
  }
  if (failure) std::rethrow_exception(failure);
  return finish(g, best, evaluated);
}

}  // namespace dichrom
