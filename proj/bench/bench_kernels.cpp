#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "chhs/generators.hpp"
#include "chhs/kernels.hpp"
#include "chhs/metric_graph.hpp"

int main(int argc, char** argv) {
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 300;
  const double p = argc > 2 ? std::strtod(argv[2], nullptr) : 0.05;
  const chhs::FlagComplex x = chhs::gen_random_flag(n, p, 11);
  using clock = std::chrono::steady_clock;

  auto t0 = clock::now();
  const auto serial = chhs::kernels::apsp_serial(x.adjacency());
  auto t1 = clock::now();
  const auto parallel = chhs::kernels::apsp_parallel(x.adjacency());
  auto t2 = clock::now();
  std::printf("apsp n=%zu serial %.3fs parallel %.3fs agree=%d\n", n, std::chrono::duration<double>(t1 - t0).count(),
              std::chrono::duration<double>(t2 - t1).count(), serial == parallel ? 1 : 0);

  const chhs::MetricGraph g = chhs::MetricGraph::induced(x.adjacency(), x.all());
  if (!g.connected()) {
    std::printf("graph disconnected; raise p for the four-point timing\n");
    return 0;
  }
  t0 = clock::now();
  const auto ds = chhs::kernels::four_point_twice_delta_serial(g.matrix().data(), g.size());
  t1 = clock::now();
  const auto dp = chhs::kernels::four_point_twice_delta_parallel(g.matrix().data(), g.size());
  t2 = clock::now();
  std::printf("four-point n=%zu serial %.3fs parallel %.3fs twice_delta=%lld agree=%d\n", n,
              std::chrono::duration<double>(t1 - t0).count(), std::chrono::duration<double>(t2 - t1).count(), static_cast<long long>(dp),
              ds == dp ? 1 : 0);
  return 0;
}
