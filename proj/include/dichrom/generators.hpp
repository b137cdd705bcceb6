#pragma once

#include "dichrom/digraph.hpp"

#include <cstdint>
#include <vector>

namespace dichrom {

inline constexpr int kDefaultOrientationCap = 18;

/// Vertices Z_k, arcs (i, j) for j = i+d, ..., i+k-1 (mod k). Needs 1 <= d <= k.
Digraph circulant(int k, int d);

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0. Needs n >= 2.
Digraph dicycle(int n);

/// Every edge replaced by a digon.
Digraph symmetric(const Graph& g);

/// Adds vertex n = d.order() with an arc to every existing vertex.
Digraph add_source(const Digraph& d);

/// Rim cycle 0..k-1 and hub k joined to every rim vertex. Needs k >= 3.
Graph wheel(int k);

/// Wheel with the rim directed i -> i+1 and spokes alternating: hub -> i for
/// even i, i -> hub for odd i. Needs k even, k >= 4.
Digraph wheel_alternating(int k);

/// Kneser graph K(n, 2): vertices are the 2-subsets of {0..n-1} in
/// lexicographic order, adjacent when disjoint. Needs n >= 4.
Graph kneser2(int n);

/// Planar digraph of digirth g on f(g-1)+1 vertices. Stage 1 is the directed
/// g-cycle; each later stage adds a directed path s_1 .. s_{g-1} and two
/// attachment vertices x != y with arcs x -> s_1, s_{g-1} -> x,
/// y -> s_1, s_{g-1} -> y. At stage 2 x, y = 0, 1; afterwards x, y are the
/// endpoints s_1, s_{g-1} of the previous stage's path. Needs g >= 3, f >= 1.
Digraph knauer(int g, int f);

Graph complete(int n);
Graph octahedron();
/// Vertex 0 on top, 1..5 the upper ring, 6..10 the lower ring, 11 at the bottom.
Graph icosahedron();

/// The orientation selected by `mask`: edge i (in g.edges() order) becomes
/// (u, w) if bit i is clear and (w, u) if it is set.
Digraph orientation(const Graph& g, std::uint64_t mask);

/// All 2^|E| orientations in mask order. Throws CapExceeded above `cap` edges.
std::vector<Digraph> all_orientations(const Graph& g, int cap = kDefaultOrientationCap);

/// Each edge flipped by one bit of a std::mt19937_64 stream seeded with `seed`.
Digraph random_orientation(const Graph& g, std::uint64_t seed);

/// Each ordered pair (u, w), u != w, becomes an arc with probability p.
Digraph random_digraph(int n, double p, std::uint64_t seed);

}  // namespace dichrom
