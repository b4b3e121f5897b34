#pragma once

// Ackermann-style hierarchies A(k, s), B(k, s) and their inverses.
//
//   A(0, s) = 2s          A(k, 0) = 1    A(k, s) = A(k-1, A(k, s-1))
//   B(0, s) = s^2         B(k, 0) = 2    B(k, s) = B(k-1, B(k, s-1))
//
// Values leave 64-bit range after a handful of steps, so nothing here ever
// materializes them: every query is a threshold comparison against a
// saturating evaluation.

#include <array>
#include <atomic>
#include <cstdint>

namespace hopspan::ackermann {

enum class Family { A, B };

// Memoized saturating evaluator. Entry (fam, k, s) holds min(fam(k, s), cap).
// Reads and inserts are lock-free and idempotent, so one table can be shared
// by concurrent callers.
class Table {
public:
    static constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 62;

    explicit Table(std::uint64_t cap = kDefaultCap);

    Table(const Table&) = delete;
    Table& operator=(const Table&) = delete;

    std::uint64_t cap() const noexcept { return cap_; }

    // min(fam(k, s), cap())
    std::uint64_t saturated(Family fam, std::uint64_t k, std::uint64_t s) const;

    // fam(k, s) >= target. Targets above cap() are answered by an uncached
    // evaluation capped at the target itself.
    bool reached(Family fam, std::uint64_t k, std::uint64_t s, std::uint64_t target) const;

private:
    // For k >= 1 and s >= 64, fam(k, s) >= 2^64 exceeds any cap. Levels above
    // kStableLevel agree with kStableLevel under any 64-bit cap.
    static constexpr std::size_t kMaxArg = 64;
    static constexpr std::size_t kStableLevel = 8;

    std::uint64_t eval(Family fam, std::uint64_t k, std::uint64_t s, std::uint64_t cap,
                       bool memo) const;

    std::uint64_t cap_;
    // 0 marks "not computed"; every memoized value (k >= 1) is at least 1.
    mutable std::array<std::atomic<std::uint64_t>, 2 * (kStableLevel + 1) * kMaxArg> memo_{};
};

// Process-wide table with the default cap.
const Table& default_table();

// fam(k, s) >= target, short-circuiting once the running value reaches target.
bool threshold_reached(Family fam, std::uint64_t k, std::uint64_t s, std::uint64_t target);

// alpha_k(n): least s with A(k/2, s) >= n for even k, B(k/2, s) >= n for odd k.
std::uint64_t alpha_k(std::uint64_t k, std::uint64_t n);

// Two-parameter inverse: min{ i >= 1 : A(i, 4*ceil(m/n)) > log2 n }.
// Throws Error{InvalidArgument} for m == 0 or n == 0.
std::uint64_t alpha_two_param(std::uint64_t m, std::uint64_t n);

// alpha(n) = min{ s >= 0 : A(s, s) >= n }.
std::uint64_t alpha_one(std::uint64_t n);

// j-fold composition of alpha_k(k, .) applied to n.
std::uint64_t alpha_iter(std::uint64_t k, std::uint64_t j, std::uint64_t n);

}  // namespace hopspan::ackermann
