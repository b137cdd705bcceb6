#include "dichrom/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dichrom {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::CyclicWindow: return "cyclic-window";
    case ViolationKind::ShortArc: return "short-arc";
    case ViolationKind::CyclicClass: return "cyclic-class";
    case ViolationKind::CyclicWindowUndirected: return "cyclic-window-undirected";
  }
  return "unknown";
}

std::string Violation::str() const {
  std::ostringstream os;
  os << "VIOLATION " << to_string(kind);
  if (kind == ViolationKind::ShortArc && arc) {
    os << " arc=(" << arc->tail << "," << arc->head << ")";
  } else {
    os << (kind == ViolationKind::CyclicClass ? " class=" : " window=") << index << " cycle=";
    for (std::size_t i = 0; i < cycle.size(); ++i) os << (i ? " " : "") << cycle[i];
  }
  return os.str();
}

void validate_colouring(const CircularColouring& c, int n) {
  if (c.k < 1 || c.d < 1 || c.d > c.k)
    throw std::invalid_argument("need 1 <= d <= k, got k=" + std::to_string(c.k) + " d=" + std::to_string(c.d));
  if (static_cast<int>(c.colours.size()) != n)
    throw std::invalid_argument("partial colouring: " + std::to_string(c.colours.size()) + " colours for " +
                                std::to_string(n) + " vertices");
  for (std::size_t v = 0; v < c.colours.size(); ++v) {
    if (c.colours[v] < 0 || c.colours[v] >= c.k)
      throw std::invalid_argument("colour " + std::to_string(c.colours[v]) + " of vertex " + std::to_string(v) +
                                  " out of range 0.." + std::to_string(c.k - 1));
  }
}

namespace {

std::vector<Vertex> window_preimage(const CircularColouring& c, int i, int width) {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < c.colours.size(); ++v) {
    if (in_window(c.colours[v], i, c.k, width)) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

}  // namespace

std::optional<Violation> check_acyclic_kd(const Digraph& d, const CircularColouring& c) {
  validate_colouring(c, d.order());
  for (int i = 0; i < c.k; ++i) {
    auto cycle = find_directed_cycle(d, window_preimage(c, i, c.d));
    if (!cycle.empty()) return Violation{ViolationKind::CyclicWindow, i, std::nullopt, std::move(cycle)};
  }
  return std::nullopt;
}

std::optional<Violation> check_circular_kd(const Digraph& d, const CircularColouring& c) {
  validate_colouring(c, d.order());
  for (int i = 0; i < c.k; ++i) {
    auto cycle = find_directed_cycle(d, window_preimage(c, i, 1));
    if (!cycle.empty()) return Violation{ViolationKind::CyclicClass, i, std::nullopt, std::move(cycle)};
  }
  for (const Arc& a : d.arcs()) {
    int cu = c.colours[a.tail];
    int cw = c.colours[a.head];
    if (cu != cw && ((cw - cu) % c.k + c.k) % c.k < c.d) return Violation{ViolationKind::ShortArc, -1, a, {}};
  }
  return std::nullopt;
}

std::optional<Violation> check_partition_k(const Digraph& d, const CircularColouring& c) {
  if (c.d != 1) throw std::invalid_argument("partition check requires d = 1");
  return check_acyclic_kd(d, c);
}

std::optional<Violation> check_tree_kd(const Graph& g, const CircularColouring& c) {
  validate_colouring(c, g.order());
  for (int i = 0; i < c.k; ++i) {
    auto cycle = find_undirected_cycle(g, window_preimage(c, i, c.d));
    if (!cycle.empty()) return Violation{ViolationKind::CyclicWindowUndirected, i, std::nullopt, std::move(cycle)};
  }
  return std::nullopt;
}

namespace {

bool distinct_in_range(const std::vector<Vertex>& cycle, int n) {
  std::vector<Vertex> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  return std::all_of(sorted.begin(), sorted.end(), [n](Vertex v) { return v >= 0 && v < n; });
}

bool colours_fit(const CircularColouring& c, const Violation& v, int width) {
  return std::all_of(v.cycle.begin(), v.cycle.end(),
                     [&](Vertex x) { return in_window(c.colours[x], v.index, c.k, width); });
}

}  // namespace

bool witness_is_genuine(const Digraph& d, const CircularColouring& c, const Violation& v) {
  if (v.kind == ViolationKind::ShortArc) {
    if (!v.arc || !d.has_arc(v.arc->tail, v.arc->head)) return false;
    int cu = c.colours[v.arc->tail];
    int cw = c.colours[v.arc->head];
    return cu != cw && ((cw - cu) % c.k + c.k) % c.k < c.d;
  }
  if (v.kind == ViolationKind::CyclicWindowUndirected) return false;
  if (v.cycle.size() < 2 || !distinct_in_range(v.cycle, d.order())) return false;
  for (std::size_t i = 0; i < v.cycle.size(); ++i) {
    if (!d.has_arc(v.cycle[i], v.cycle[(i + 1) % v.cycle.size()])) return false;
  }
  return colours_fit(c, v, v.kind == ViolationKind::CyclicClass ? 1 : c.d);
}

bool witness_is_genuine(const Graph& g, const CircularColouring& c, const Violation& v) {
  if (v.kind != ViolationKind::CyclicWindowUndirected) return false;
  if (v.cycle.size() < 3 || !distinct_in_range(v.cycle, g.order())) return false;
  for (std::size_t i = 0; i < v.cycle.size(); ++i) {
    if (!g.has_edge(v.cycle[i], v.cycle[(i + 1) % v.cycle.size()])) return false;
  }
  return colours_fit(c, v, c.d);
}

}  // namespace dichrom
