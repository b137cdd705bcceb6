#include "dichrom/kernels.hpp"

#include "dichrom/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include <omp.h>

namespace dichrom {

namespace {

/// Maximal iff acyclic and no single added vertex keeps it acyclic.
bool is_maximal_acyclic(const Digraph& d, VertexMask set, VertexMask all) {
  if (!is_acyclic_mask(d, set)) return false;
  for (VertexMask rest = all & ~set; rest; rest &= rest - 1) {
    if (is_acyclic_mask(d, set | (rest & -rest))) return false;
  }
  return true;
}

}  // namespace

int alpha_scan(const Digraph& d) {
  require_cap(d.order(), kMaskScanCap, "vertex count");
  const std::int64_t count = std::int64_t{1} << d.order();
  int best = 0;
#pragma omp parallel for schedule(dynamic, 1024) reduction(max : best)
  for (std::int64_t mask = 0; mask < count; ++mask) {
    const auto set = static_cast<VertexMask>(mask);
    const int size = std::popcount(set);
    if (size > best && is_acyclic_mask(d, set)) best = size;
  }
  return best;
}

std::vector<std::vector<Vertex>> maximal_acyclic_sets_scan(const Digraph& d) {
  require_cap(d.order(), kMaskScanCap, "vertex count");
  const std::int64_t count = std::int64_t{1} << d.order();
  const VertexMask all = full_mask(d.order());
  std::vector<std::vector<VertexMask>> per_thread(omp_get_max_threads());
#pragma omp parallel
  {
    auto& mine = per_thread[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 1024)
    for (std::int64_t mask = 0; mask < count; ++mask) {
      if (is_maximal_acyclic(d, static_cast<VertexMask>(mask), all)) mine.push_back(static_cast<VertexMask>(mask));
    }
  }
  std::vector<std::vector<Vertex>> sets;
  for (const auto& part : per_thread) {
    for (VertexMask m : part) {
      std::vector<Vertex> list;
      for (; m; m &= m - 1) list.push_back(std::countr_zero(m));
      sets.push_back(std::move(list));
    }
  }
  std::sort(sets.begin(), sets.end());
  return sets;
}

}  // namespace dichrom
