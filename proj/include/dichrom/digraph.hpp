#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dichrom {

using Vertex = int;

/// Vertex subset of a digraph with at most 64 vertices. The search kernels
/// work exclusively on these.
using VertexMask = std::uint64_t;

inline constexpr int kMaskVertices = 64;

inline VertexMask bit(Vertex v) { return VertexMask{1} << v; }
inline VertexMask full_mask(int n) { return n >= 64 ? ~VertexMask{0} : (bit(n) - 1); }

struct Arc {
  Vertex tail;
  Vertex head;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Unordered pair, stored with u < w.
struct Edge {
  Vertex u;
  Vertex w;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Loopless digraph on vertices 0..n-1. Digons are allowed, parallel arcs
/// are not. Arcs are kept sorted lexicographically.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n, std::vector<Arc> arcs = {});

  int order() const { return n_; }
  int size() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Vertex>& out(Vertex v) const { return out_[v]; }
  const std::vector<Vertex>& in(Vertex v) const { return in_[v]; }
  bool has_arc(Vertex u, Vertex w) const;

  /// Bitmask adjacency; only meaningful when order() <= 64.
  bool fits_mask() const { return n_ <= kMaskVertices; }
  VertexMask out_mask(Vertex v) const { return out_bits_[v]; }
  VertexMask in_mask(Vertex v) const { return in_bits_[v]; }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<VertexMask> out_bits_;
  std::vector<VertexMask> in_bits_;
};

/// Simple undirected graph on vertices 0..n-1, edges sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, std::vector<Edge> edges = {});

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbours(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex w) const;

  bool fits_mask() const { return n_ <= kMaskVertices; }
  VertexMask neighbour_mask(Vertex v) const { return adj_bits_[v]; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexMask> adj_bits_;
};

/// Strong components listed in a topological order of the condensation;
/// every arc between different blocks points from an earlier block to a
/// later one. Vertices inside a block are ascending.
struct SccDecomposition {
  std::vector<std::vector<Vertex>> components;
};

bool is_acyclic(const Digraph& d, std::span<const Vertex> subset);
bool is_acyclic(const Digraph& d);
/// Mask form used by the search kernels; requires d.fits_mask().
bool is_acyclic_mask(const Digraph& d, VertexMask subset);

/// A directed cycle inside d[subset] as a vertex sequence (each vertex has an
/// arc to the next, the last to the first), or empty if d[subset] is acyclic.
std::vector<Vertex> find_directed_cycle(const Digraph& d, std::span<const Vertex> subset);

/// A cycle of g[subset], or empty if g[subset] is a forest.
std::vector<Vertex> find_undirected_cycle(const Graph& g, std::span<const Vertex> subset);
bool is_forest(const Graph& g, std::span<const Vertex> subset);

SccDecomposition strong_components(const Digraph& d);

/// Length of a shortest directed cycle; nullopt means infinite (acyclic).
std::optional<int> digirth(const Digraph& d);

Graph underlying_graph(const Digraph& d);

/// d[vertices], with vertices[i] renamed to i.
Digraph induced_subdigraph(const Digraph& d, std::span<const Vertex> vertices);

/// Vertices sorted by decreasing degree in the underlying graph, ties by index.
std::vector<Vertex> degree_order(const Graph& g);

}  // namespace dichrom
