#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "chhs/cliques.hpp"

namespace chhs {

using Dist = std::int32_t;
inline constexpr Dist kInfDist = std::numeric_limits<Dist>::max();

namespace kernels {

/// Row-major n x n BFS distance matrix; kInfDist across components.
/// Bitset-frontier BFS, one source per OpenMP iteration.
std::vector<Dist> apsp_parallel(const Adjacency& adj);

/// Queue-based BFS over adjacency lists, single threaded.
std::vector<Dist> apsp_serial(const Adjacency& adj);

/// Twice the four-point constant: max over quadruples of
/// (largest pair sum - second largest pair sum). All entries must be finite.
std::int64_t four_point_twice_delta_parallel(const Dist* dist, std::size_t n);

/// Plain quadruple loop used as the reference for the parallel kernel.
std::int64_t four_point_twice_delta_serial(const Dist* dist, std::size_t n);

}  // namespace kernels
}  // namespace chhs
