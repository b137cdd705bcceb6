#include "dichrom/digraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace dichrom {

namespace {

void check_vertex(int n, Vertex v) {
  if (v < 0 || v >= n)
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
}

std::vector<char> membership(int n, std::span<const Vertex> subset) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (Vertex v : subset) {
    check_vertex(n, v);
    in[v] = 1;
  }
  return in;
}

}  // namespace

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (const Arc& a : arcs_) {
    check_vertex(n, a.tail);
    check_vertex(n, a.head);
    if (a.tail == a.head) throw std::invalid_argument("loop at vertex " + std::to_string(a.tail));
  }
  std::sort(arcs_.begin(), arcs_.end());
  auto dup = std::adjacent_find(arcs_.begin(), arcs_.end());
  if (dup != arcs_.end())
    throw std::invalid_argument("duplicate arc (" + std::to_string(dup->tail) + "," + std::to_string(dup->head) + ")");

  out_.assign(n, {});
  in_.assign(n, {});
  for (const Arc& a : arcs_) {
    out_[a.tail].push_back(a.head);
    in_[a.head].push_back(a.tail);
  }
  for (auto& list : in_) std::sort(list.begin(), list.end());
  if (n <= kMaskVertices) {
    out_bits_.assign(n, 0);
    in_bits_.assign(n, 0);
    for (const Arc& a : arcs_) {
      out_bits_[a.tail] |= bit(a.head);
      in_bits_[a.head] |= bit(a.tail);
    }
  }
}

bool Digraph::has_arc(Vertex u, Vertex w) const {
  if (u < 0 || u >= n_) return false;
  return std::binary_search(out_[u].begin(), out_[u].end(), w);
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (Edge& e : edges_) {
    check_vertex(n, e.u);
    check_vertex(n, e.w);
    if (e.u == e.w) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (e.u > e.w) std::swap(e.u, e.w);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw std::invalid_argument("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->w) + "}");

  adj_.assign(n, {});
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.w);
    adj_[e.w].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
  if (n <= kMaskVertices) {
    adj_bits_.assign(n, 0);
    for (const Edge& e : edges_) {
      adj_bits_[e.u] |= bit(e.w);
      adj_bits_[e.w] |= bit(e.u);
    }
  }
}

bool Graph::has_edge(Vertex u, Vertex w) const {
  if (u < 0 || u >= n_) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), w);
}

bool is_acyclic_mask(const Digraph& d, VertexMask subset) {
  // Peel off vertices without in-neighbours inside the remaining set.
  VertexMask rest = subset;
  bool progress = true;
  while (rest != 0 && progress) {
    progress = false;
    for (VertexMask scan = rest; scan != 0; scan &= scan - 1) {
      Vertex v = std::countr_zero(scan);
      if ((d.in_mask(v) & rest) == 0) {
        rest &= ~bit(v);
        progress = true;
      }
    }
  }
  return rest == 0;
}

std::vector<Vertex> find_directed_cycle(const Digraph& d, std::span<const Vertex> subset) {
  const int n = d.order();
  std::vector<char> inside = membership(n, subset);
  enum : char { kWhite, kGrey, kBlack };
  std::vector<char> state(n, kWhite);
  std::vector<Vertex> path;
  std::vector<std::size_t> next_edge;

  std::vector<Vertex> roots(subset.begin(), subset.end());
  std::sort(roots.begin(), roots.end());
  for (Vertex root : roots) {
    if (state[root] != kWhite) continue;
    path.assign(1, root);
    next_edge.assign(1, 0);
    state[root] = kGrey;
    while (!path.empty()) {
      Vertex v = path.back();
      const auto& out = d.out(v);
      if (next_edge.back() == out.size()) {
        state[v] = kBlack;
        path.pop_back();
        next_edge.pop_back();
        continue;
      }
      Vertex w = out[next_edge.back()++];
      if (!inside[w]) continue;
      if (state[w] == kGrey) {
        auto start = std::find(path.begin(), path.end(), w);
        return {start, path.end()};
      }
      if (state[w] == kWhite) {
        state[w] = kGrey;
        path.push_back(w);
        next_edge.push_back(0);
      }
    }
  }
  return {};
}

bool is_acyclic(const Digraph& d, std::span<const Vertex> subset) {
  return find_directed_cycle(d, subset).empty();
}

bool is_acyclic(const Digraph& d) {
  std::vector<Vertex> all(d.order());
  std::iota(all.begin(), all.end(), 0);
  return is_acyclic(d, all);
}

std::vector<Vertex> find_undirected_cycle(const Graph& g, std::span<const Vertex> subset) {
  const int n = g.order();
  std::vector<char> inside = membership(n, subset);
  std::vector<Vertex> parent(n, -1);
  std::vector<char> seen(n, 0);
  std::vector<char> on_path(n, 0);
  std::vector<Vertex> path;
  std::vector<std::size_t> next_edge;

  std::vector<Vertex> roots(subset.begin(), subset.end());
  std::sort(roots.begin(), roots.end());
  for (Vertex root : roots) {
    if (seen[root]) continue;
    seen[root] = on_path[root] = 1;
    path.assign(1, root);
    next_edge.assign(1, 0);
    while (!path.empty()) {
      Vertex v = path.back();
      const auto& nb = g.neighbours(v);
      if (next_edge.back() == nb.size()) {
        on_path[v] = 0;
        path.pop_back();
        next_edge.pop_back();
        continue;
      }
      Vertex w = nb[next_edge.back()++];
      if (!inside[w] || w == parent[v]) continue;
      if (on_path[w]) {
        auto start = std::find(path.begin(), path.end(), w);
        return {start, path.end()};
      }
      if (!seen[w]) {
        seen[w] = on_path[w] = 1;
        parent[w] = v;
        path.push_back(w);
        next_edge.push_back(0);
      }
    }
  }
  return {};
}

bool is_forest(const Graph& g, std::span<const Vertex> subset) {
  return find_undirected_cycle(g, subset).empty();
}

SccDecomposition strong_components(const Digraph& d) {
  // Iterative Tarjan; components come out in reverse topological order.
  const int n = d.order();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> frames;
  std::vector<std::vector<Vertex>> reversed;
  int counter = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto& out = d.out(v);
      if (pos < out.size()) {
        Vertex w = out[pos++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      Vertex done = v;
      frames.pop_back();
      if (!frames.empty()) {
        Vertex up = frames.back().first;
        low[up] = std::min(low[up], low[done]);
      }
      if (low[done] == index[done]) {
        std::vector<Vertex> block;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          block.push_back(w);
        } while (w != done);
        std::sort(block.begin(), block.end());
        reversed.push_back(std::move(block));
      }
    }
  }
  return {{reversed.rbegin(), reversed.rend()}};
}

std::optional<int> digirth(const Digraph& d) {
  const int n = d.order();
  std::optional<int> best;
  std::vector<int> dist(n);
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue = {};
    queue.push(s);
    bool closed = false;
    while (!queue.empty() && !closed) {
      Vertex v = queue.front();
      queue.pop();
      if (best && dist[v] + 1 >= *best) break;
      for (Vertex w : d.out(v)) {
        if (w == s) {
          best = dist[v] + 1;
          closed = true;
          break;
        }
        if (dist[w] == -1) {
          dist[w] = dist[v] + 1;
          queue.push(w);
        }
      }
    }
  }
  return best;
}

Graph underlying_graph(const Digraph& d) {
  std::vector<Edge> edges;
  edges.reserve(d.arcs().size());
  for (const Arc& a : d.arcs()) {
    if (a.tail < a.head || !d.has_arc(a.head, a.tail))
      edges.push_back({std::min(a.tail, a.head), std::max(a.tail, a.head)});
  }
  return Graph(d.order(), std::move(edges));
}

Digraph induced_subdigraph(const Digraph& d, std::span<const Vertex> vertices) {
  std::vector<int> rename(d.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(d.order(), vertices[i]);
    if (rename[vertices[i]] != -1) throw std::invalid_argument("repeated vertex in induced subdigraph");
    rename[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) {
    if (rename[a.tail] != -1 && rename[a.head] != -1) arcs.push_back({rename[a.tail], rename[a.head]});
  }
  return Digraph(static_cast<int>(vertices.size()), std::move(arcs));
}

std::vector<Vertex> degree_order(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

}  // namespace dichrom
