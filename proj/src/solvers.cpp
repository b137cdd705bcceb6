#include "dichrom/solvers.hpp"

#include "dichrom/errors.hpp"
#include "dichrom/search.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace dichrom {

CandidateLadder candidate_fractions(int n_bound, const Fraction& lo, const Fraction& hi) {
  if (n_bound < 1) throw std::invalid_argument("numerator bound must be positive");
  if (!(lo < hi)) throw std::invalid_argument("empty window: need lo < hi");
  CandidateLadder ladder{n_bound, lo, hi, {}};
  for (int k = 1; k <= n_bound; ++k) {
    for (int d = 1; d <= k; ++d) {
      if (std::gcd(k, d) != 1) continue;
      Fraction f(k, d);
      if (lo < f && f <= hi) ladder.fractions.push_back(std::move(f));
    }
  }
  std::sort(ladder.fractions.begin(), ladder.fractions.end());
  return ladder;
}

namespace {

using FeasibilityTest = std::function<std::optional<CircularColouring>(int k, int d, SearchStats*)>;

int as_int(const BigInt& value) { return value.convert_to<int>(); }

bool tested_feasible(SolverStats& stats, const Fraction& candidate, const FeasibilityTest& test,
                     std::optional<CircularColouring>& witness) {
  SearchStats search;
  witness = test(as_int(candidate.num()), as_int(candidate.den()), &search);
  stats.nodes += search.nodes;
  stats.candidates_tested += 1;
  stats.tests.push_back({candidate, witness.has_value()});
  return witness.has_value();
}

/// Least feasible ladder entry. `top` is an already known witness for the
/// last entry of the ladder, if any.
std::pair<Fraction, CircularColouring> least_feasible(const std::vector<Fraction>& ladder,
                                                      const FeasibilityTest& test, SolverStats& stats,
                                                      bool paranoid,
                                                      std::optional<CircularColouring> top = std::nullopt) {
  if (ladder.empty()) throw std::logic_error("empty candidate ladder");
  std::map<std::size_t, CircularColouring> witnesses;
  if (top) witnesses.emplace(ladder.size() - 1, std::move(*top));

  if (paranoid) {
    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < ladder.size(); ++i) {
      std::optional<CircularColouring> w;
      bool ok = tested_feasible(stats, ladder[i], test, w);
      if (ok && !first) {
        first = i;
        witnesses[i] = std::move(*w);
      } else if (!ok && first) {
        throw MonotonicityViolation("feasibility not monotone: " + ladder[*first].str() + " feasible but " +
                                    ladder[i].str() + " infeasible");
      }
    }
    if (!first) throw std::logic_error("no feasible candidate on the ladder");
    return {ladder[*first], witnesses.at(*first)};
  }

  std::size_t lo = 0;
  std::size_t hi = ladder.size();  // answer lies in [lo, hi]; hi == size means "none seen yet"
  if (top) hi = ladder.size() - 1;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    std::optional<CircularColouring> w;
    if (tested_feasible(stats, ladder[mid], test, w)) {
      witnesses[mid] = std::move(*w);
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (lo == ladder.size()) throw std::logic_error("no feasible candidate on the ladder");
  return {ladder[lo], witnesses.at(lo)};
}

CircularColouring constant_colouring(int n) { return {1, 1, std::vector<int>(n, 0)}; }

/// Least k with an acyclic (k,1)-colouring of d, counting from `start`.
std::pair<int, CircularColouring> least_partition(const Digraph& d, int start, SolverStats& stats) {
  for (int k = std::max(start, 1);; ++k) {
    SearchStats search;
    auto c = exists_acyclic_kd(d, k, 1, &search);
    stats.nodes += search.nodes;
    if (c) return {k, std::move(*c)};
  }
}

SolverResult star_single(const Digraph& d, const SolverOptions& options) {
  SolverResult result;
  if (is_acyclic(d)) {
    result.value = Fraction(1);
    result.witness = constant_colouring(d.order());
    return result;
  }
  auto [chi, partition] = least_partition(d, 2, result.stats);
  auto ladder = candidate_fractions(d.order(), Fraction(chi - 1), Fraction(chi));
  FeasibilityTest test = [&d](int k, int w, SearchStats* s) { return exists_acyclic_kd(d, k, w, s); };
  auto [value, witness] = least_feasible(ladder.fractions, test, result.stats, options.paranoid, partition);
  result.value = value;
  result.witness = std::move(witness);
  return result;
}

/// Colours each block of the decomposition with a common (k,d); blocks whose
/// own witness is already at (k,d) keep it, the others are searched again.
template <typename Search>
CircularColouring stitch(const Digraph& d, const SccDecomposition& scc, const std::vector<Digraph>& blocks,
                         const std::vector<SolverResult>& block_results, int k, int width, Search search,
                         SolverStats& stats) {
  CircularColouring whole{k, width, std::vector<int>(d.order(), 0)};
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const CircularColouring* local = nullptr;
    std::optional<CircularColouring> searched;
    if (block_results[b].witness.k == k && block_results[b].witness.d == width) {
      local = &block_results[b].witness;
    } else {
      SearchStats s;
      searched = search(blocks[b], k, width, &s);
      stats.nodes += s.nodes;
      if (!searched) throw std::logic_error("block not colourable at the maximum ratio");
      local = &*searched;
    }
    for (std::size_t i = 0; i < scc.components[b].size(); ++i)
      whole.colours[scc.components[b][i]] = local->colours[i];
  }
  return whole;
}

void merge_stats(SolverStats& into, const SolverStats& from) {
  into.nodes += from.nodes;
  into.candidates_tested += from.candidates_tested;
  into.tests.insert(into.tests.end(), from.tests.begin(), from.tests.end());
}

}  // namespace

SolverResult dichromatic_colouring(const Digraph& d) {
  require_cap(d.order(), kMaskVertices, "vertex count");
  SolverResult result;
  if (d.order() == 0) {
    result.value = Fraction(1);
    result.witness = constant_colouring(0);
    return result;
  }
  auto scc = strong_components(d);
  int best = 1;
  std::vector<std::vector<int>> block_colours;
  for (const auto& block : scc.components) {
    Digraph sub = induced_subdigraph(d, block);
    auto [k, colouring] = least_partition(sub, 1, result.stats);
    best = std::max(best, k);
    block_colours.push_back(std::move(colouring.colours));
  }
  result.value = Fraction(best);
  result.witness = {best, 1, std::vector<int>(d.order(), 0)};
  for (std::size_t b = 0; b < scc.components.size(); ++b) {
    for (std::size_t i = 0; i < scc.components[b].size(); ++i)
      result.witness.colours[scc.components[b][i]] = block_colours[b][i];
  }
  return result;
}

int dichromatic(const Digraph& d) { return as_int(dichromatic_colouring(d).value.num()); }

SolverResult star_dichromatic(const Digraph& d, const SolverOptions& options) {
  require_cap(d.order(), kMaskVertices, "vertex count");
  if (d.order() == 0) return {Fraction(1), constant_colouring(0), {}};
  auto scc = strong_components(d);
  std::vector<Digraph> blocks;
  std::vector<SolverResult> results;
  SolverResult out;
  out.value = Fraction(1);
  for (const auto& block : scc.components) {
    blocks.push_back(induced_subdigraph(d, block));
    results.push_back(star_single(blocks.back(), options));
    merge_stats(out.stats, results.back().stats);
    out.value = std::max(out.value, results.back().value);
  }
  auto search = [](const Digraph& g, int k, int w, SearchStats* s) { return exists_acyclic_kd(g, k, w, s); };
  out.witness =
      stitch(d, scc, blocks, results, as_int(out.value.num()), as_int(out.value.den()), search, out.stats);
  return out;
}

SolverResult star_dichromatic_whole(const Digraph& d, const SolverOptions& options) {
  require_cap(d.order(), kMaskVertices, "vertex count");
  return star_single(d, options);
}

SolverResult circular_dichromatic(const Digraph& d, const SolverOptions& options) {
  require_cap(d.order(), kMaskVertices, "vertex count");
  SolverResult result;
  if (is_acyclic(d)) {
    result.value = Fraction(1);
    result.witness = constant_colouring(d.order());
    return result;
  }
  SolverResult partition = dichromatic_colouring(d);
  merge_stats(result.stats, partition.stats);
  int chi = as_int(partition.value.num());
  auto ladder = candidate_fractions(d.order(), Fraction(chi - 1), Fraction(chi));
  FeasibilityTest test = [&d](int k, int w, SearchStats* s) { return exists_circular_kd(d, k, w, s); };
  auto [value, witness] =
      least_feasible(ladder.fractions, test, result.stats, options.paranoid, std::move(partition.witness));
  result.value = value;
  result.witness = std::move(witness);
  return result;
}

SolverResult circular_vertex_arboricity(const Graph& g, int numerator_cap, const SolverOptions& options) {
  require_cap(g.order(), kMaskVertices, "vertex count");
  SolverResult result;
  std::vector<Vertex> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  if (is_forest(g, all)) {
    result.value = Fraction(1);
    result.witness = constant_colouring(g.order());
    return result;
  }
  int va = 2;
  std::optional<CircularColouring> partition;
  for (;; ++va) {
    SearchStats s;
    partition = exists_tree_kd(g, va, 1, &s);
    result.stats.nodes += s.nodes;
    if (partition) break;
  }
  int cap = numerator_cap > 0 ? numerator_cap : g.order();
  cap = std::max(cap, va);
  auto ladder = candidate_fractions(cap, Fraction(1), Fraction(va));
  FeasibilityTest test = [&g](int k, int w, SearchStats* s) { return exists_tree_kd(g, k, w, s); };
  auto [value, witness] = least_feasible(ladder.fractions, test, result.stats, options.paranoid, partition);
  result.value = value;
  result.witness = std::move(witness);
  return result;
}

namespace {

class MaxAcyclicSearch {
 public:
  explicit MaxAcyclicSearch(const Digraph& d) : d_(d), n_(d.order()) {}

  std::vector<Vertex> run() {
    extend(0, 0, 0);
    std::vector<Vertex> out;
    for (VertexMask s = best_set_; s; s &= s - 1) out.push_back(std::countr_zero(s));
    return out;
  }

 private:
  void extend(Vertex next, VertexMask chosen, int size) {
    if (size + (n_ - next) <= best_) return;
    if (next == n_) {
      best_ = size;
      best_set_ = chosen;
      return;
    }
    VertexMask with = chosen | bit(next);
    if (is_acyclic_mask(d_, with)) extend(next + 1, with, size + 1);
    extend(next + 1, chosen, size);
  }

  const Digraph& d_;
  int n_;
  int best_ = -1;
  VertexMask best_set_ = 0;
};

}  // namespace

std::vector<Vertex> maximum_acyclic_set(const Digraph& d) {
  require_cap(d.order(), kMaskVertices, "vertex count");
  return MaxAcyclicSearch(d).run();
}

int alpha(const Digraph& d) { return static_cast<int>(maximum_acyclic_set(d).size()); }

}  // namespace dichrom
