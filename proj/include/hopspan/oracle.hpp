#pragma once

// Exact minimum edge count of a (1+eps)-spanner with hop bound k on a small
// point set. Two independent routes:
//   min_edges_exhaustive  enumerates edge subsets by size, checks each one
//                         with verify_spanner;
//   min_edges_bnb         branch-and-bound on a compact bitset engine.
// Both report the lexicographically smallest optimal edge set.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hopspan/rational.hpp"
#include "hopspan/spanner.hpp"

namespace hopspan {

struct SearchConfig {
    Rational eps{0};
    std::size_t k = 2;
    HopMode mode = AllHops{};
    // Inclusive integer range offered as Steiner candidates (every integer in
    // it that is not a terminal). Must contain all terminals. Off by default.
    std::optional<std::pair<std::int64_t, std::int64_t>> steiner_range;
    std::size_t max_points = 10;
};

struct SearchResult {
    std::size_t minimum = 0;
    Spanner witness;  // only the Steiner vertices the witness uses are kept
    std::uint64_t nodes_explored = 0;
};

// Guards: <= 7 points without Steiner candidates, <= 6 with, and at most
// kMaxExhaustiveVertices vertices overall; Error{TooLarge} otherwise.
inline constexpr std::size_t kMaxExhaustiveVertices = 9;
SearchResult min_edges_exhaustive(std::span<const std::int64_t> points, const SearchConfig& cfg);

// Guards: points <= cfg.max_points and at most kMaxBnbVertices vertices.
inline constexpr std::size_t kMaxBnbVertices = 16;
SearchResult min_edges_bnb(std::span<const std::int64_t> points, const SearchConfig& cfg);

struct GoldenRow {
    std::size_t n = 0;
    std::size_t k = 0;
    Rational eps{0};
    std::size_t minimum = 0;

    friend bool operator==(const GoldenRow&, const GoldenRow&) = default;
};

// "n,k,eps,minimum" header, one row per line, eps as p/q.
std::string golden_csv(std::span<const GoldenRow> rows);
std::vector<GoldenRow> parse_golden_csv(const std::string& text);

}  // namespace hopspan
