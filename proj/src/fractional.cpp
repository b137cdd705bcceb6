#include "dichrom/fractional.hpp"

#include "dichrom/errors.hpp"
#include "dichrom/solvers.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace dichrom {

namespace {

std::vector<Vertex> to_list(VertexMask mask) {
  std::vector<Vertex> out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

/// Whether v lies on a directed cycle of d[inside | v].
bool on_cycle(const Digraph& d, Vertex v, VertexMask inside) {
  inside |= bit(v);
  VertexMask reach = d.out_mask(v) & inside;
  VertexMask frontier = reach;
  while (frontier) {
    if (reach & bit(v)) return true;
    VertexMask next = 0;
    for (VertexMask s = frontier; s; s &= s - 1) next |= d.out_mask(std::countr_zero(s));
    frontier = next & inside & ~reach;
    reach |= frontier;
  }
  return (reach & bit(v)) != 0;
}

class MaximalAcyclicSearch {
 public:
  explicit MaximalAcyclicSearch(const Digraph& d) : d_(d), n_(d.order()) {}

  std::vector<std::vector<Vertex>> run() {
    extend(0, 0);
    return std::move(found_);
  }

 private:
  void extend(Vertex next, VertexMask chosen) {
    if (next == n_) {
      for (Vertex v = 0; v < n_; ++v) {
        if (!(chosen & bit(v)) && !on_cycle(d_, v, chosen)) return;
      }
      found_.push_back(to_list(chosen));
      return;
    }
    if (!on_cycle(d_, next, chosen)) extend(next + 1, chosen | bit(next));
    // Leaving `next` out only pays off if it could still close a cycle with
    // what is chosen now or may be chosen later.
    VertexMask later = full_mask(n_) & ~full_mask(next + 1);
    if (on_cycle(d_, next, chosen | later)) extend(next + 1, chosen);
  }

  const Digraph& d_;
  int n_;
  std::vector<std::vector<Vertex>> found_;
};

class MaximalIndependentSearch {
 public:
  explicit MaximalIndependentSearch(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<std::vector<Vertex>> run() {
    extend(0, 0);
    return std::move(found_);
  }

 private:
  void extend(Vertex next, VertexMask chosen) {
    if (next == n_) {
      for (Vertex v = 0; v < n_; ++v) {
        if (!(chosen & bit(v)) && (g_.neighbour_mask(v) & chosen) == 0) return;
      }
      found_.push_back(to_list(chosen));
      return;
    }
    if ((g_.neighbour_mask(next) & chosen) == 0) extend(next + 1, chosen | bit(next));
    VertexMask later = full_mask(n_) & ~full_mask(next + 1);
    if (g_.neighbour_mask(next) & (chosen | later)) extend(next + 1, chosen);
  }

  const Graph& g_;
  int n_;
  std::vector<std::vector<Vertex>> found_;
};

FractionalCertificate solve_cover(int ground, std::vector<std::vector<Vertex>> sets) {
  LpCertificate lp = simplex_solve(covering_lp(ground, sets));
  FractionalCertificate cert;
  for (std::size_t j = 0; j < sets.size(); ++j) {
    if (lp.primal[j].sign() > 0) {
      cert.sets.push_back(std::move(sets[j]));
      cert.weights.push_back(lp.primal[j]);
    }
  }
  cert.dual = std::move(lp.dual);
  cert.value = lp.value;
  return cert;
}

FractionalCertificate trivial_certificate(int n) {
  FractionalCertificate cert;
  if (n == 0) return cert;
  std::vector<Vertex> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  cert.sets.push_back(std::move(all));
  cert.weights.push_back(1);
  cert.dual.assign(n, Fraction(0));
  cert.dual[0] = 1;
  cert.value = 1;
  return cert;
}

}  // namespace

AcyclicSetSystem maximal_acyclic_sets(const Digraph& d, int cap) {
  require_cap(d.order(), std::min(cap, kMaskVertices), "vertex count");
  AcyclicSetSystem system{d.order(), MaximalAcyclicSearch(d).run()};
  std::sort(system.sets.begin(), system.sets.end());
  return system;
}

std::vector<std::vector<Vertex>> maximal_independent_sets(const Graph& g, int cap) {
  require_cap(g.order(), std::min(cap, kMaskVertices), "vertex count");
  auto sets = MaximalIndependentSearch(g).run();
  std::sort(sets.begin(), sets.end());
  return sets;
}

LinearProgram covering_lp(int ground, const std::vector<std::vector<Vertex>>& sets) {
  LinearProgram lp;
  lp.objective = Objective::Minimize;
  lp.costs.assign(sets.size(), Fraction(1));
  std::vector<std::vector<Fraction>> rows(ground, std::vector<Fraction>(sets.size()));
  for (std::size_t j = 0; j < sets.size(); ++j) {
    for (Vertex v : sets[j]) rows[v][j] = 1;
  }
  for (int v = 0; v < ground; ++v) lp.add_row(std::move(rows[v]), RowSense::GreaterEqual, Fraction(1));
  return lp;
}

FractionalCertificate fractional_dichromatic_whole(const Digraph& d, int cap) {
  require_cap(d.order(), std::min(cap, kMaskVertices), "vertex count");
  if (d.order() == 0 || is_acyclic(d)) return trivial_certificate(d.order());
  return solve_cover(d.order(), maximal_acyclic_sets(d, cap).sets);
}

FractionalCertificate fractional_dichromatic(const Digraph& d, int cap) {
  auto scc = strong_components(d);
  if (scc.components.size() <= 1) return fractional_dichromatic_whole(d, cap);
  for (const auto& block : scc.components) require_cap(static_cast<long long>(block.size()), cap, "strong component size");

  struct Part {
    std::vector<std::vector<Vertex>> sets;  // in d's vertex names
    std::vector<Fraction> weights;
    std::vector<Fraction> dual;
    Fraction value;
  };
  std::vector<Part> parts;
  Fraction top;
  for (const auto& block : scc.components) {
    FractionalCertificate local = fractional_dichromatic_whole(induced_subdigraph(d, block), cap);
    Part part;
    for (auto& set : local.sets) {
      std::vector<Vertex> named;
      for (Vertex v : set) named.push_back(block[v]);
      part.sets.push_back(std::move(named));
    }
    part.weights = std::move(local.weights);
    part.dual = std::move(local.dual);
    part.value = local.value;
    top = std::max(top, part.value);
    parts.push_back(std::move(part));
  }

  // Stretch every part to total weight `top`, lay each part's weights end to
  // end on [0, top), and take unions along the common refinement.
  for (Part& p : parts) p.weights.front() += top - p.value;
  std::map<std::vector<Vertex>, Fraction> merged;
  std::vector<std::size_t> at(parts.size(), 0);
  std::vector<Fraction> left(parts.size());
  for (std::size_t b = 0; b < parts.size(); ++b) left[b] = parts[b].weights[0];
  Fraction covered;
  while (covered < top) {
    Fraction step = left[0];
    for (std::size_t b = 1; b < parts.size(); ++b) step = std::min(step, left[b]);
    std::vector<Vertex> unite;
    for (std::size_t b = 0; b < parts.size(); ++b) {
      const auto& s = parts[b].sets[at[b]];
      unite.insert(unite.end(), s.begin(), s.end());
    }
    std::sort(unite.begin(), unite.end());
    merged[unite] += step;
    covered += step;
    for (std::size_t b = 0; b < parts.size(); ++b) {
      left[b] -= step;
      if (left[b].is_zero() && at[b] + 1 < parts[b].sets.size()) {
        ++at[b];
        left[b] = parts[b].weights[at[b]];
      }
    }
  }

  FractionalCertificate cert;
  for (auto& [set, weight] : merged) {
    cert.sets.push_back(set);
    cert.weights.push_back(weight);
  }
  cert.value = top;
  cert.dual.assign(d.order(), Fraction(0));
  for (std::size_t b = 0; b < parts.size(); ++b) {
    if (parts[b].value != top) continue;
    for (std::size_t i = 0; i < scc.components[b].size(); ++i) cert.dual[scc.components[b][i]] = parts[b].dual[i];
    break;
  }
  return cert;
}

Fraction fractional_chromatic(const Graph& g, int cap) {
  if (g.order() == 0) return Fraction(0);
  return solve_cover(g.order(), maximal_independent_sets(g, cap)).value;
}

Fraction fractional_lower_bound(const Digraph& d) {
  if (d.order() == 0) return Fraction(0);
  return Fraction(d.order(), alpha(d));
}

namespace {

class WeightedAcyclicSearch {
 public:
  WeightedAcyclicSearch(const Digraph& d, const std::vector<Fraction>& w) : d_(d), w_(w), n_(d.order()) {
    suffix_.assign(n_ + 1, Fraction(0));
    for (int v = n_ - 1; v >= 0; --v) suffix_[v] = suffix_[v + 1] + std::max(w_[v], Fraction(0));
  }

  Fraction run() {
    extend(0, 0, Fraction(0));
    return best_;
  }

 private:
  void extend(Vertex next, VertexMask chosen, const Fraction& total) {
    if (total > best_) best_ = total;
    if (next == n_ || total + suffix_[next] <= best_) return;
    if (w_[next].sign() > 0 && is_acyclic_mask(d_, chosen | bit(next)))
      extend(next + 1, chosen | bit(next), total + w_[next]);
    extend(next + 1, chosen, total);
  }

  const Digraph& d_;
  const std::vector<Fraction>& w_;
  int n_;
  std::vector<Fraction> suffix_;
  Fraction best_;
};

}  // namespace

Fraction max_weight_acyclic_set(const Digraph& d, const std::vector<Fraction>& weights) {
  require_cap(d.order(), kMaskVertices, "vertex count");
  if (static_cast<int>(weights.size()) != d.order()) throw std::invalid_argument("one weight per vertex required");
  return WeightedAcyclicSearch(d, weights).run();
}

bool certificate_holds(const Digraph& d, const FractionalCertificate& cert) {
  const int n = d.order();
  if (cert.sets.size() != cert.weights.size() || static_cast<int>(cert.dual.size()) != n) return false;
  std::vector<Fraction> cover(n);
  Fraction primal_total;
  for (std::size_t j = 0; j < cert.sets.size(); ++j) {
    if (cert.weights[j].sign() < 0) return false;
    for (Vertex v : cert.sets[j]) {
      if (v < 0 || v >= n) return false;
    }
    if (!is_acyclic(d, cert.sets[j])) return false;
    for (Vertex v : cert.sets[j]) cover[v] += cert.weights[j];
    primal_total += cert.weights[j];
  }
  for (const Fraction& c : cover) {
    if (c < Fraction(1)) return false;
  }
  Fraction dual_total;
  for (const Fraction& y : cert.dual) {
    if (y.sign() < 0) return false;
    dual_total += y;
  }
  if (max_weight_acyclic_set(d, cert.dual) > Fraction(1)) return false;
  return primal_total == cert.value && dual_total == cert.value;
}

}  // namespace dichrom
