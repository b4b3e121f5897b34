#pragma once

// Lower-bound and tradeoff formulas for hop-bounded spanners on line metrics,
// evaluated exactly, plus a report comparing them with constructions and the
// exact oracle.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hopspan/rational.hpp"

namespace hopspan {

using BigRational = boost::multiprecision::cpp_rational;

enum class LowerBoundKind {
    Uniform2,         // n log n / 16, hop diameter 2
    Uniform3,         // n log log n / 40, hop diameter 3
    Subspace2,        // n alpha_2(n) / 256
    Subspace3,        // n alpha_3(n) / 1024
    GeneralSubspace,  // n alpha_k(n) / 2^(6 floor(k/2) + 4)
    GeneralUniform,   // n alpha_k(n) / 2^(6 floor(k/2) + 2)
    MainEps,          // GeneralSubspace, divided by eps when eps > 1/2
};

std::string_view kind_name(LowerBoundKind kind) noexcept;
LowerBoundKind parse_kind(std::string_view name);

// Exact value of the formula. Logarithms are base 2 and floored. Throws
// KindMismatch when k does not fit the kind (2 or 3 for the fixed-k kinds,
// >= 2 otherwise), InvalidArgument for n = 0 or eps < 0.
BigRational lower_bound_edges(LowerBoundKind kind, std::uint64_t n, std::uint64_t k, const Rational& eps);

// Row metadata: the formulas are asymptotic and the subspace bounds assume
// n >= 1000 and a dense subspace.
struct Preconditions {
    std::uint64_t min_n = 1;
    Rational density{1};
    Rational max_eps{1, 2};
    bool asymptotic = true;
};
Preconditions preconditions(LowerBoundKind kind, std::uint64_t k);

// The unique k >= 1 with n*alpha_k(n) <= m < n*alpha_{k-1}(n). NoRegion when
// m >= n*alpha_0(n) or no level qualifies.
std::uint64_t unique_k_region(std::uint64_t m, std::uint64_t n);

// The unique k >= 1 with n*alpha_k(n)/2^(6 floor(k/2)+4) <= m below the same
// expression at k-1. Requires 32m < n^2 (InvalidArgument otherwise).
std::uint64_t slack_k_region(std::uint64_t m, std::uint64_t n);

enum class HopVariant { Stretch1, StretchEps };

// Stretch1: alpha(m, n). StretchEps: alpha(m, n) - 6 floor(k/2) - 4 with k
// from slack_k_region, floored at 0. Requires n >= 1 and m >= n; StretchEps
// also 32m < n^2.
std::int64_t hop_lower_bound_from_edges(std::uint64_t m, std::uint64_t n, HopVariant variant);

struct BoundsRow {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    Rational eps{0};
    std::uint64_t construction_edges = 0;
    std::optional<std::uint64_t> oracle_min;
    BigRational lb_value;
    LowerBoundKind lb_kind = LowerBoundKind::GeneralSubspace;
};

// Largest n the report will hand to the oracle.
inline constexpr std::uint64_t kReportOracleGuard = 10;

// One row per (n, k, eps), sorted in that order. The construction is
// build_general on 1..n; the oracle (branch-and-bound, no Steiner points)
// runs when with_oracle, throwing TooLarge for n above the guard.
std::vector<BoundsRow> make_report(std::span<const std::uint64_t> ns, std::span<const std::uint64_t> ks,
                                   std::span<const Rational> epss, bool with_oracle);

std::string format_big(const BigRational& value);  // always "p/q"
std::string report_csv(std::span<const BoundsRow> rows);
std::string report_json(std::span<const BoundsRow> rows);

}  // namespace hopspan
