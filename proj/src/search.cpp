#include "dichrom/search.hpp"

#include "dichrom/errors.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace dichrom {

namespace {

enum class Notion { Acyclic, Circular, Tree };

int mod(int a, int k) { return ((a % k) + k) % k; }

/// Depth-first colouring over a fixed vertex order. For the acyclic and tree
/// notions it keeps, per window A_i, the mask of coloured vertices whose colour
/// lies in A_i; for the circular notion it keeps one mask per colour class.
class Backtracker {
 public:
  Backtracker(Notion notion, int n, std::vector<VertexMask> out, std::vector<VertexMask> in,
              std::vector<Vertex> order, int k, int width)
      : notion_(notion), n_(n), k_(k), d_(width), out_(std::move(out)), in_(std::move(in)),
        order_(std::move(order)), colour_(n, -1),
        sets_(static_cast<std::size_t>(k), VertexMask{0}) {}

  std::optional<std::vector<int>> run(SearchStats* stats) {
    bool found = n_ == 0 || place(0);
    if (stats) stats->nodes += nodes_;
    if (!found) return std::nullopt;
    return colour_;
  }

 private:
  bool place(int depth) {
    if (depth == n_) return true;
    const Vertex v = order_[depth];
    // Rotating every colour by the same amount maps colourings to colourings
    // for all three notions, so the first vertex may be fixed to colour 0.
    const int last = depth == 0 ? 0 : k_ - 1;
    for (int c = 0; c <= last; ++c) {
      ++nodes_;
      if (!admissible(v, c)) continue;
      assign(v, c);
      if (place(depth + 1)) return true;
      unassign(v, c);
    }
    return false;
  }

  // Windows containing colour c are A_{c-d+1}, ..., A_c; when d == k they all
  // coincide, so one suffices.
  int windows_through() const { return d_ == k_ ? 1 : d_; }

  bool admissible(Vertex v, int c) const {
    switch (notion_) {
      case Notion::Acyclic:
        for (int j = 0; j < windows_through(); ++j) {
          if (closes_directed_cycle(v, sets_[mod(c - j, k_)])) return false;
        }
        return true;
      case Notion::Tree:
        for (int j = 0; j < windows_through(); ++j) {
          if (closes_undirected_cycle(v, sets_[mod(c - j, k_)])) return false;
        }
        return true;
      case Notion::Circular:
        for (VertexMask s = out_[v] & coloured_; s; s &= s - 1) {
          int cw = colour_[std::countr_zero(s)];
          if (cw != c && mod(cw - c, k_) < d_) return false;
        }
        for (VertexMask s = in_[v] & coloured_; s; s &= s - 1) {
          int cu = colour_[std::countr_zero(s)];
          if (cu != c && mod(c - cu, k_) < d_) return false;
        }
        return !closes_directed_cycle(v, sets_[c]);
    }
    return false;
  }

  /// Whether adding v to the vertex set `inside` creates a directed cycle.
  bool closes_directed_cycle(Vertex v, VertexMask inside) const {
    VertexMask reach = out_[v] & inside;
    VertexMask frontier = reach;
    while (frontier) {
      if (reach & in_[v]) return true;
      VertexMask next = 0;
      for (VertexMask s = frontier; s; s &= s - 1) next |= out_[std::countr_zero(s)];
      frontier = next & inside & ~reach;
      reach |= frontier;
    }
    return (reach & in_[v]) != 0;
  }

  /// Whether adding v to `inside` creates an undirected cycle: two neighbours
  /// of v already in one component.
  bool closes_undirected_cycle(Vertex v, VertexMask inside) const {
    const VertexMask nb = out_[v] & inside;
    if (std::popcount(nb) < 2) return false;
    VertexMask remaining = nb;
    while (remaining) {
      VertexMask comp = remaining & (~remaining + 1);
      VertexMask frontier = comp;
      while (frontier) {
        VertexMask next = 0;
        for (VertexMask s = frontier; s; s &= s - 1) next |= out_[std::countr_zero(s)];
        frontier = next & inside & ~comp;
        comp |= frontier;
      }
      if (std::popcount(comp & nb) >= 2) return true;
      remaining &= ~comp;
    }
    return false;
  }

  void assign(Vertex v, int c) {
    colour_[v] = c;
    coloured_ |= bit(v);
    if (notion_ == Notion::Circular) {
      sets_[c] |= bit(v);
    } else {
      for (int j = 0; j < d_; ++j) sets_[mod(c - j, k_)] |= bit(v);
    }
  }

  void unassign(Vertex v, int c) {
    colour_[v] = -1;
    coloured_ &= ~bit(v);
    if (notion_ == Notion::Circular) {
      sets_[c] &= ~bit(v);
    } else {
      for (int j = 0; j < d_; ++j) sets_[mod(c - j, k_)] &= ~bit(v);
    }
  }

  Notion notion_;
  int n_;
  int k_;
  int d_;
  std::vector<VertexMask> out_;
  std::vector<VertexMask> in_;
  std::vector<Vertex> order_;
  std::vector<int> colour_;
  std::vector<VertexMask> sets_;
  VertexMask coloured_ = 0;
  std::uint64_t nodes_ = 0;
};

void check_parameters(int n, int k, int width) {
  if (width < 1 || width > k)
    throw std::invalid_argument("need 1 <= d <= k, got k=" + std::to_string(k) + " d=" + std::to_string(width));
  require_cap(n, kMaskVertices, "vertex count");
}

std::optional<CircularColouring> wrap(std::optional<std::vector<int>> colours, int k, int width) {
  if (!colours) return std::nullopt;
  return CircularColouring{k, width, std::move(*colours)};
}

std::optional<CircularColouring> search_digraph(Notion notion, const Digraph& d, int k, int width,
                                                SearchStats* stats) {
  check_parameters(d.order(), k, width);
  std::vector<VertexMask> out(d.order()), in(d.order());
  for (Vertex v = 0; v < d.order(); ++v) {
    out[v] = d.out_mask(v);
    in[v] = d.in_mask(v);
  }
  Backtracker search(notion, d.order(), std::move(out), std::move(in), degree_order(underlying_graph(d)), k,
                     width);
  return wrap(search.run(stats), k, width);
}

}  // namespace

std::optional<CircularColouring> exists_acyclic_kd(const Digraph& d, int k, int width, SearchStats* stats) {
  return search_digraph(Notion::Acyclic, d, k, width, stats);
}

std::optional<CircularColouring> exists_circular_kd(const Digraph& d, int k, int width, SearchStats* stats) {
  return search_digraph(Notion::Circular, d, k, width, stats);
}

std::optional<CircularColouring> exists_tree_kd(const Graph& g, int k, int width, SearchStats* stats) {
  check_parameters(g.order(), k, width);
  std::vector<VertexMask> adj(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.neighbour_mask(v);
  Backtracker search(Notion::Tree, g.order(), adj, adj, degree_order(g), k, width);
  return wrap(search.run(stats), k, width);
}

}  // namespace dichrom
