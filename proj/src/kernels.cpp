#include "chhs/kernels.hpp"

#include <algorithm>
#include <deque>

namespace chhs::kernels {
namespace {

void bfs_bitset(const Adjacency& adj, std::size_t source, Dist* row) {
  const std::size_t n = adj.size();
  std::fill(row, row + n, kInfDist);
  VertexSet visited(n);
  VertexSet frontier(n);
  visited.insert(static_cast<Vertex>(source));
  frontier.insert(static_cast<Vertex>(source));
  row[source] = 0;
  Dist level = 0;
  while (!frontier.empty()) {
    ++level;
    VertexSet next(n);
    frontier.for_each([&](Vertex v) { next |= adj[v]; });
    next -= visited;
    next.for_each([&](Vertex v) { row[v] = level; });
    visited |= next;
    frontier = std::move(next);
  }
}

}  // namespace

std::vector<Dist> apsp_parallel(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::vector<Dist> dist(n * n);
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 8) if (n > 64)
  for (long long s = 0; s < count; ++s) {
    bfs_bitset(adj, static_cast<std::size_t>(s), dist.data() + static_cast<std::size_t>(s) * n);
  }
  return dist;
}

std::vector<Dist> apsp_serial(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<Vertex>> lists(n);
  for (std::size_t v = 0; v < n; ++v) lists[v] = adj[v].to_vector();
  std::vector<Dist> dist(n * n, kInfDist);
  std::deque<Vertex> queue;
  for (std::size_t s = 0; s < n; ++s) {
    Dist* row = dist.data() + s * n;
    row[s] = 0;
    queue.assign(1, static_cast<Vertex>(s));
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : lists[v]) {
        if (row[w] == kInfDist) {
          row[w] = row[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

std::int64_t four_point_twice_delta_parallel(const Dist* dist, std::size_t n) {
  Dist best = 0;
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1) reduction(max : best) if (n > 48)
  for (long long xi = 0; xi < count; ++xi) {
    const std::size_t x = static_cast<std::size_t>(xi);
    const Dist* rx = dist + x * n;
    Dist local = 0;
    for (std::size_t y = x + 1; y < n; ++y) {
      const Dist* ry = dist + y * n;
      const Dist dxy = rx[y];
      for (std::size_t z = y + 1; z < n; ++z) {
        const Dist* rz = dist + z * n;
        const Dist dxz = rx[z];
        const Dist dyz = ry[z];
        for (std::size_t w = z + 1; w < n; ++w) {
          const Dist s1 = dxy + rz[w];
          const Dist s2 = dxz + ry[w];
          const Dist s3 = dyz + rx[w];
          const Dist lo12 = std::min(s1, s2);
          const Dist hi12 = std::max(s1, s2);
          const Dist top = std::max(hi12, s3);
          const Dist mid = std::max(lo12, std::min(hi12, s3));
          local = std::max(local, top - mid);
        }
      }
    }
    best = std::max(best, local);
  }
  return best;
}

std::int64_t four_point_twice_delta_serial(const Dist* dist, std::size_t n) {
  std::int64_t best = 0;
  auto d = [&](std::size_t a, std::size_t b) { return static_cast<std::int64_t>(dist[a * n + b]); };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      for (std::size_t z = y + 1; z < n; ++z) {
        for (std::size_t w = z + 1; w < n; ++w) {
          std::int64_t sums[3] = {d(x, y) + d(z, w), d(x, z) + d(y, w), d(x, w) + d(y, z)};
          std::sort(sums, sums + 3);
          best = std::max(best, sums[2] - sums[1]);
        }
      }
    }
  }
  return best;
}

}  // namespace chhs::kernels
