#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hopspan/line_metric.hpp"
#include "hopspan/rational.hpp"

namespace hopspan {

// Undirected edge, stored with u < v. Its weight is always |u - v|.
struct Edge {
    std::int64_t u;
    std::int64_t v;

    Edge() = default;
    Edge(std::int64_t a, std::int64_t b) : u(a < b ? a : b), v(a < b ? b : a) {}

    std::int64_t weight() const noexcept { return v - u; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Geometric graph over integer points. Terminals are the metric points that
// must be spanned; Steiner vertices may carry paths but are never checked as
// endpoints. Immutable after construction.
class Spanner {
public:
    using Index = std::uint32_t;

    Spanner() = default;

    // Sorts and deduplicates all three lists. Throws Error{InvalidArgument} for
    // self-loops or a Steiner vertex that is also a terminal, and
    // Error{UnknownVertex} for an edge endpoint outside terminals + steiner.
    Spanner(std::vector<std::int64_t> terminals, std::vector<std::int64_t> steiner,
            std::vector<Edge> edges);

    const std::vector<std::int64_t>& terminals() const noexcept { return terminals_; }
    const std::vector<std::int64_t>& steiner() const noexcept { return steiner_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    // All vertices in increasing coordinate order; indices refer to this list.
    const std::vector<std::int64_t>& vertices() const noexcept { return vertices_; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::int64_t coord(Index v) const noexcept { return vertices_[v]; }
    std::optional<Index> index_of(std::int64_t coordinate) const noexcept;
    bool is_terminal(std::int64_t coordinate) const noexcept;

    // Neighbours of v, sorted by coordinate.
    std::span<const Index> neighbors(Index v) const noexcept {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    std::span<const std::int64_t> neighbor_coords(Index v) const noexcept {
        return {adj_coord_.data() + offsets_[v], adj_coord_.data() + offsets_[v + 1]};
    }
    bool has_edge(std::int64_t a, std::int64_t b) const noexcept;

private:
    std::vector<std::int64_t> terminals_;
    std::vector<std::int64_t> steiner_;
    std::vector<Edge> edges_;
    std::vector<std::int64_t> vertices_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Index> adj_;
    std::vector<std::int64_t> adj_coord_;
};

// Which edges consume hop budget. Under GlobalHops an edge is free only when
// both endpoints lie inside [grid.l, grid.r] and in the same cell; edges that
// touch the outside of the grid are always counted.
struct AllHops {};
struct GlobalHops {
    SparseLineMetric grid;
};
using HopMode = std::variant<AllHops, GlobalHops>;

bool counts_as_hop(const HopMode& mode, std::int64_t a, std::int64_t b);

struct SpannerPath {
    std::vector<std::int64_t> vertices;  // a, ..., b
    std::int64_t weight = 0;
    std::size_t hops = 0;  // counted hops under the query's mode
};

// Minimum-weight a -> b path among those using at most k counted hops,
// returned only when its weight is <= (1 + eps) |a - b|.
// Throws Error{UnknownVertex} if a or b is not a terminal.
std::optional<SpannerPath> find_stretch_path(const Spanner& s, std::int64_t a, std::int64_t b,
                                             const Rational& eps, std::size_t k,
                                             const HopMode& mode = AllHops{});

bool stretch_path_exists(const Spanner& s, std::int64_t a, std::int64_t b, const Rational& eps,
                         std::size_t k, const HopMode& mode = AllHops{});

// Reusable search state for many pair queries on one spanner.
class PairChecker {
public:
    PairChecker(const Spanner& s, const Rational& eps, std::size_t k, HopMode mode = AllHops{});

    std::optional<SpannerPath> find(std::int64_t a, std::int64_t b);

private:
    void reset_layers();

    const Spanner& s_;
    Rational eps_;
    std::size_t k_;
    HopMode mode_;
    std::vector<std::int64_t> weight_;     // (k+1) x V
    std::vector<std::uint32_t> parent_;    // (k+1) x V, encoded layer * V + vertex
    std::vector<std::uint32_t> stamp_;     // (k+1) x V
    std::vector<std::int64_t> best_any_;   // V
    std::vector<std::uint32_t> best_stamp_;
    std::uint32_t epoch_ = 0;
};

struct Violation {
    std::int64_t a;
    std::int64_t b;
    std::optional<std::int64_t> best_weight;  // lightest path within the hop budget, if any
    std::optional<std::size_t> best_hops;     // counted hops of that path
};

struct VerifyReport {
    bool ok = true;
    std::optional<Violation> witness;
};

// Checks every terminal pair; on failure reports the lexicographically
// smallest violating pair (a < b).
VerifyReport verify_spanner(const Spanner& s, const Rational& eps, std::size_t k,
                            const HopMode& mode = AllHops{});

// Same contract restricted to the listed pairs (checked in the given order).
VerifyReport verify_pairs(const Spanner& s, const Rational& eps, std::size_t k,
                          std::span<const std::pair<std::int64_t, std::int64_t>> pairs,
                          const HopMode& mode = AllHops{});

// Least k such that every terminal pair has a (1+eps)-path with <= k counted
// hops. Throws Error{InvalidArgument} for fewer than two terminals and
// Error{Unspannable} if some pair has no (1+eps)-path at all.
std::size_t hop_diameter(const Spanner& s, const Rational& eps, const HopMode& mode = AllHops{});

// Edges with both endpoints in [grid.l, grid.r] lying in different cells.
std::size_t count_global_edges(const Spanner& s, const SparseLineMetric& grid);

// {"terminals":[..],"steiner":[..],"edges":[[a,b],..]}, edges sorted.
std::string spanner_to_json(const Spanner& s);
Spanner spanner_from_json(const std::string& text);

}  // namespace hopspan
