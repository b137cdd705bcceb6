#include "dichrom/generators.hpp"

#include "dichrom/errors.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace dichrom {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

Digraph circulant(int k, int d) {
  require(1 <= d && d <= k, "circulant needs 1 <= d <= k");
  std::vector<Arc> arcs;
  for (int i = 0; i < k; ++i) {
    for (int j = i + d; j <= i + k - 1; ++j) arcs.push_back({i, j % k});
  }
  return Digraph(k, std::move(arcs));
}

Digraph dicycle(int n) {
  require(n >= 2, "dicycle needs n >= 2");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return Digraph(n, std::move(arcs));
}

Digraph symmetric(const Graph& g) {
  std::vector<Arc> arcs;
  for (const Edge& e : g.edges()) {
    arcs.push_back({e.u, e.w});
    arcs.push_back({e.w, e.u});
  }
  return Digraph(g.order(), std::move(arcs));
}

Digraph add_source(const Digraph& d) {
  const int s = d.order();
  std::vector<Arc> arcs = d.arcs();
  for (Vertex v = 0; v < s; ++v) arcs.push_back({s, v});
  return Digraph(s + 1, std::move(arcs));
}

Graph wheel(int k) {
  require(k >= 3, "wheel needs k >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    edges.push_back({i, (i + 1) % k});
    edges.push_back({i, k});
  }
  return Graph(k + 1, std::move(edges));
}

Digraph wheel_alternating(int k) {
  require(k >= 4 && k % 2 == 0, "alternating wheel needs an even k >= 4");
  std::vector<Arc> arcs;
  for (int i = 0; i < k; ++i) {
    arcs.push_back({i, (i + 1) % k});
    if (i % 2 == 0) arcs.push_back({k, i});
    else arcs.push_back({i, k});
  }
  return Digraph(k + 1, std::move(arcs));
}

Graph kneser2(int n) {
  require(n >= 4, "kneser2 needs n >= 4");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  const int m = static_cast<int>(pairs.size());
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      auto [a, b] = pairs[i];
      auto [c, e] = pairs[j];
      if (a != c && a != e && b != c && b != e) edges.push_back({i, j});
    }
  }
  return Graph(m, std::move(edges));
}

Digraph knauer(int g, int f) {
  require(g >= 3 && f >= 1, "knauer needs g >= 3 and f >= 1");
  const long long n = static_cast<long long>(f) * (g - 1) + 1;
  require(n <= (1 << 24), "knauer: vertex count too large");
  Digraph base = dicycle(g);
  std::vector<Arc> arcs = base.arcs();
  int next = g;
  Vertex x = 0, y = 1;
  for (int stage = 2; stage <= f; ++stage) {
    const Vertex first = next, last = next + g - 2;
    for (Vertex s = first; s < last; ++s) arcs.push_back({s, s + 1});
    for (Vertex a : {x, y}) {
      arcs.push_back({a, first});
      arcs.push_back({last, a});
    }
    next += g - 1;
    x = first;
    y = last;
  }
  return Digraph(static_cast<int>(n), std::move(arcs));
}

Graph complete(int n) {
  require(n >= 0, "complete needs n >= 0");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) edges.push_back({u, w});
  }
  return Graph(n, std::move(edges));
}

Graph octahedron() {
  std::vector<Edge> edges;
  for (int u = 0; u < 6; ++u) {
    for (int w = u + 1; w < 6; ++w) {
      if (u / 2 != w / 2) edges.push_back({u, w});
    }
  }
  return Graph(6, std::move(edges));
}

Graph icosahedron() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    const int up = 1 + i, up_next = 1 + (i + 1) % 5;
    const int low = 6 + i, low_next = 6 + (i + 1) % 5;
    edges.push_back({0, up});
    edges.push_back({up, up_next});
    edges.push_back({up, low});
    edges.push_back({up, low_next});
    edges.push_back({low, low_next});
    edges.push_back({low, 11});
  }
  return Graph(12, std::move(edges));
}

Digraph orientation(const Graph& g, std::uint64_t mask) {
  std::vector<Arc> arcs;
  arcs.reserve(g.size());
  for (int i = 0; i < g.size(); ++i) {
    const Edge& e = g.edges()[i];
    if ((mask >> i) & 1U) arcs.push_back({e.w, e.u});
    else arcs.push_back({e.u, e.w});
  }
  return Digraph(g.order(), std::move(arcs));
}

std::vector<Digraph> all_orientations(const Graph& g, int cap) {
  require_cap(g.size(), std::min(cap, 62), "edge count");
  std::vector<Digraph> out;
  const std::uint64_t count = std::uint64_t{1} << g.size();
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) out.push_back(orientation(g, mask));
  return out;
}

Digraph random_orientation(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Arc> arcs;
  for (const Edge& e : g.edges()) {
    if (rng() >> 63) arcs.push_back({e.w, e.u});
    else arcs.push_back({e.u, e.w});
  }
  return Digraph(g.order(), std::move(arcs));
}

Digraph random_digraph(int n, double p, std::uint64_t seed) {
  require(n >= 0 && p >= 0.0 && p <= 1.0, "random digraph needs n >= 0 and 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  // Compare raw 53-bit draws so the stream means the same on every platform.
  const auto threshold = static_cast<std::uint64_t>(p * 9007199254740992.0);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w = 0; w < n; ++w) {
      if (u != w && (rng() >> 11) < threshold) arcs.push_back({u, w});
    }
  }
  return Digraph(n, std::move(arcs));
}

}  // namespace dichrom
