#pragma once

// Stretch-1 spanners for points on a line with bounded hop-diameter:
//   k = 2   recursive median star,         <= n*ceil(log2 n) + n edges
//   k = 3   sqrt(n) blocks with hub clique, O(n log log n) edges
//   k >= 4  alpha_{k-2}(n) blocks whose hubs carry a (k-2)-hop spanner,
//           O(n alpha_k(n)) edges
// Every composite path is monotone along the line, so the stretch is exactly 1.

#include <cstdint>
#include <span>

#include "hopspan/spanner.hpp"

namespace hopspan {

struct BuildStats {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t edge_count = 0;
    std::size_t bound = 0;  // guaranteed cap, edge_count <= bound
};

struct BuildResult {
    Spanner spanner;
    BuildStats stats;
};

// Measured per-level constants behind the O(.) caps. Index is k; entries for
// k < 3 are unused (k = 2 has the exact cap n*ceil(log2 n) + n).
inline constexpr std::size_t kMaxCappedK = 12;
std::size_t edge_constant(std::size_t k);

// The cap a build for (n, k) promises.
std::size_t edge_cap(std::size_t n, std::size_t k);

// Points must be strictly increasing and non-empty: Error{NotSorted} /
// Error{InvalidArgument} otherwise.
BuildResult build_k2(std::span<const std::int64_t> points);
BuildResult build_k3(std::span<const std::int64_t> points);
// Throws Error{InvalidArgument} for k < 2.
BuildResult build_general(std::span<const std::int64_t> points, std::size_t k);

}  // namespace hopspan
