#pragma once

#include "dichrom/digraph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dichrom {

/// A map V -> Z_k together with the window width d (1 <= d <= k). The
/// window A_i is {i, i+1, ..., i+d-1} mod k.
struct CircularColouring {
  int k = 1;
  int d = 1;
  std::vector<int> colours;

  friend bool operator==(const CircularColouring&, const CircularColouring&) = default;
};

/// True iff colour c lies in window A_i of width d modulo k.
inline bool in_window(int c, int i, int k, int d) { return ((c - i) % k + k) % k < d; }

enum class ViolationKind { CyclicWindow, ShortArc, CyclicClass, CyclicWindowUndirected };

const char* to_string(ViolationKind kind);

/// Counterexample returned by the checkers. `index` is the window (or colour
/// class) for the cyclic kinds; `arc` is set for ShortArc; `cycle` holds the
/// offending cycle for the cyclic kinds.
struct Violation {
  ViolationKind kind;
  int index = -1;
  std::optional<Arc> arc;
  std::vector<Vertex> cycle;

  std::string str() const;
};

/// ok (nullopt) or the first violation; windows ascending.
std::optional<Violation> check_acyclic_kd(const Digraph& d, const CircularColouring& c);

/// ok or the first violation; colour classes ascending, then arcs in
/// lexicographic order.
std::optional<Violation> check_circular_kd(const Digraph& d, const CircularColouring& c);

/// Specialisation of check_acyclic_kd to d = 1 (ordinary digraph colouring).
std::optional<Violation> check_partition_k(const Digraph& d, const CircularColouring& c);

/// Every window preimage must induce a forest of g.
std::optional<Violation> check_tree_kd(const Graph& g, const CircularColouring& c);

/// Re-checks a violation against its input: the cycle is a genuine cycle of
/// the (di)graph whose colours all sit in the named window or class, or the
/// arc really is short.
bool witness_is_genuine(const Digraph& d, const CircularColouring& c, const Violation& v);
bool witness_is_genuine(const Graph& g, const CircularColouring& c, const Violation& v);

/// Throws std::invalid_argument unless c is a total colouring of n vertices
/// with colours in 0..k-1 and 1 <= d <= k.
void validate_colouring(const CircularColouring& c, int n);

}  // namespace dichrom
