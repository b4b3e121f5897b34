#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hopspan/rational.hpp"

namespace hopspan {

// A t-sparse line metric U((l, r), t): the integer range [l, r] is cut into
// n consecutive cells of exactly t integers, cell i (1-based) being
// [l + (i-1)t, l + it - 1], and each cell holds exactly one representative.
// Hence r = l + n*t - 1. With t = 1 this is the uniform metric on [l, r].
class SparseLineMetric {
public:
    std::int64_t l() const noexcept { return l_; }
    std::int64_t r() const noexcept { return l_ + static_cast<std::int64_t>(points_.size()) * t_ - 1; }
    std::int64_t t() const noexcept { return t_; }
    std::size_t n() const noexcept { return points_.size(); }
    const std::vector<std::int64_t>& points() const noexcept { return points_; }

    bool contains_coordinate(std::int64_t p) const noexcept { return l_ <= p && p <= r(); }

    // 1 + floor((p - l) / t). Throws Error{OutOfRange} outside [l, r].
    std::size_t interval_index(std::int64_t p) const;

    // True iff a and b sit in different cells. Throws Error{OutOfRange}.
    bool is_global_edge(std::int64_t a, std::int64_t b) const;

    static std::int64_t distance(std::int64_t a, std::int64_t b) noexcept {
        return a < b ? b - a : a - b;
    }

    friend bool operator==(const SparseLineMetric&, const SparseLineMetric&) = default;

private:
    friend SparseLineMetric sparse_metric(std::int64_t, std::int64_t, std::vector<std::int64_t>);

    SparseLineMetric(std::int64_t l, std::int64_t t, std::vector<std::int64_t> points)
        : l_(l), t_(t), points_(std::move(points)) {}

    std::int64_t l_;
    std::int64_t t_;
    std::vector<std::int64_t> points_;
};

// U(n): the points 1..n.
SparseLineMetric uniform_metric(std::size_t n);

// Validates that reps[i] lies in cell i+1. Throws Error{NotSorted} when reps
// is not strictly increasing, Error{OutOfInterval} when a representative
// misses its cell, Error{InvalidArgument} for t < 1 or an empty list.
SparseLineMetric sparse_metric(std::int64_t l, std::int64_t t, std::vector<std::int64_t> reps);

// A subset X of a metric's points.
class Subspace {
public:
    // Throws Error{InvalidArgument} if some member is not a point of base.
    Subspace(std::shared_ptr<const SparseLineMetric> base, std::vector<std::int64_t> members);

    const SparseLineMetric& base() const noexcept { return *base_; }
    const std::vector<std::int64_t>& members() const noexcept { return members_; }

    // |members| / |base points|
    Rational fraction() const;

private:
    std::shared_ptr<const SparseLineMetric> base_;
    std::vector<std::int64_t> members_;
};

// Window (i, j) inside [l, r]: any (1+eps)-stretch path between points a, b
// with i <= a < b <= j stays inside [l, r].
struct SeparationWindow {
    std::int64_t i;
    std::int64_t j;

    friend bool operator==(const SeparationWindow&, const SeparationWindow&) = default;
};

//   i = ceil(((1 + eps/2) l + (eps/2) r) / (1 + eps))
//   j = floor(((eps/2) l + (1 + eps/2) r) / (1 + eps))
// Throws Error{InvalidArgument} for l > r or eps < 0.
SeparationWindow separation_window(std::int64_t l, std::int64_t r, const Rational& eps);

// {"l":..,"t":..,"points":[..]} in that field order.
std::string metric_to_json(const SparseLineMetric& metric);
// Throws Error{Parse} on malformed JSON, or the sparse_metric errors.
SparseLineMetric metric_from_json(const std::string& text);

}  // namespace hopspan
