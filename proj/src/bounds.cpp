#include "hopspan/bounds.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "hopspan/ackermann.hpp"
#include "hopspan/construct.hpp"
#include "hopspan/error.hpp"
#include "hopspan/oracle.hpp"

namespace hopspan {

namespace {

constexpr std::array<std::pair<LowerBoundKind, std::string_view>, 7> kKindNames{{
    {LowerBoundKind::Uniform2, "Uniform2"},
    {LowerBoundKind::Uniform3, "Uniform3"},
    {LowerBoundKind::Subspace2, "Subspace2"},
    {LowerBoundKind::Subspace3, "Subspace3"},
    {LowerBoundKind::GeneralSubspace, "GeneralSubspace"},
    {LowerBoundKind::GeneralUniform, "GeneralUniform"},
    {LowerBoundKind::MainEps, "MainEps"},
}};

// Levels searched for a region; alpha_k is constant well before this.
constexpr std::uint64_t kMaxRegionLevel = 64;

std::uint64_t floor_log2(std::uint64_t x) { return x == 0 ? 0 : std::bit_width(x) - 1; }

std::uint64_t slack_exponent(std::uint64_t k) { return 6 * (k / 2) + 4; }

BigRational to_big(const Rational& r) { return BigRational(r.numerator(), r.denominator()); }

BigRational power_of_two(std::uint64_t e) {
    boost::multiprecision::cpp_int p = 1;
    return BigRational(p << static_cast<unsigned>(e));
}

void require_k(bool ok, LowerBoundKind kind, std::uint64_t k) {
    if (!ok) {
        throw Error(Errc::KindMismatch,
                    std::string(kind_name(kind)) + " does not apply to k = " + std::to_string(k));
    }
}

}  // namespace

std::string_view kind_name(LowerBoundKind kind) noexcept {
    for (const auto& [k, name] : kKindNames) {
        if (k == kind) return name;
    }
    return "?";
}

LowerBoundKind parse_kind(std::string_view name) {
    for (const auto& [k, n] : kKindNames) {
        if (n == name) return k;
    }
    throw Error(Errc::Parse, "unknown lower-bound kind '" + std::string(name) + "'");
}

BigRational lower_bound_edges(LowerBoundKind kind, std::uint64_t n, std::uint64_t k, const Rational& eps) {
    if (n == 0) throw Error(Errc::InvalidArgument, "n must be at least 1");
    if (eps < 0) throw Error(Errc::InvalidArgument, "eps must be non-negative");
    const BigRational bn(n);
    switch (kind) {
    case LowerBoundKind::Uniform2:
        require_k(k == 2, kind, k);
        return bn * floor_log2(n) / 16;
    case LowerBoundKind::Uniform3:
        require_k(k == 3, kind, k);
        return bn * floor_log2(floor_log2(n)) / 40;
    case LowerBoundKind::Subspace2:
        require_k(k == 2, kind, k);
        return bn * ackermann::alpha_k(2, n) / 256;
    case LowerBoundKind::Subspace3:
        require_k(k == 3, kind, k);
        return bn * ackermann::alpha_k(3, n) / 1024;
    case LowerBoundKind::GeneralSubspace:
        require_k(k >= 2, kind, k);
        return bn * ackermann::alpha_k(k, n) / power_of_two(slack_exponent(k));
    case LowerBoundKind::GeneralUniform:
        require_k(k >= 2, kind, k);
        return bn * ackermann::alpha_k(k, n) / power_of_two(slack_exponent(k) - 2);
    case LowerBoundKind::MainEps: {
        require_k(k >= 2, kind, k);
        auto value = bn * ackermann::alpha_k(k, n) / power_of_two(slack_exponent(k));
        if (eps > Rational(1, 2)) value /= to_big(eps);
        return value;
    }
    }
    throw Error(Errc::InvalidArgument, "unknown lower-bound kind");
}

Preconditions preconditions(LowerBoundKind kind, std::uint64_t k) {
    Preconditions p;
    switch (kind) {
    case LowerBoundKind::Uniform2:
    case LowerBoundKind::Uniform3:
    case LowerBoundKind::GeneralUniform:
        break;
    case LowerBoundKind::Subspace2:
        p.min_n = 1000;
        p.density = Rational(31, 32);
        break;
    case LowerBoundKind::Subspace3:
        p.min_n = 1000;
        p.density = Rational(127, 128);
        break;
    case LowerBoundKind::GeneralSubspace:
        p.min_n = 1000;
        if (k + 4 < 63) {
            const std::int64_t d = std::int64_t{1} << (k + 4);
            p.density = Rational(d - 1, d);
        }
        break;
    case LowerBoundKind::MainEps:
        p.max_eps = Rational(1);
        break;
    }
    return p;
}

std::uint64_t unique_k_region(std::uint64_t m, std::uint64_t n) {
    if (n == 0) throw Error(Errc::InvalidArgument, "n must be at least 1");
    const auto level = [&](std::uint64_t k) {
        return static_cast<unsigned __int128>(n) * ackermann::alpha_k(k, n);
    };
    if (m >= level(0)) {
        throw Error(Errc::NoRegion, "m = " + std::to_string(m) + " is at least n*alpha_0(n)");
    }
    for (std::uint64_t k = 1; k <= kMaxRegionLevel; ++k) {
        if (level(k) <= m) return k;
    }
    throw Error(Errc::NoRegion, "no level k has n*alpha_k(n) <= " + std::to_string(m));
}

std::uint64_t slack_k_region(std::uint64_t m, std::uint64_t n) {
    if (n == 0) throw Error(Errc::InvalidArgument, "n must be at least 1");
    if (static_cast<unsigned __int128>(m) * 32 >= static_cast<unsigned __int128>(n) * n) {
        throw Error(Errc::InvalidArgument, "requires m < n^2/32");
    }
    for (std::uint64_t k = 1; k <= kMaxRegionLevel; ++k) {
        const BigRational level =
            BigRational(n) * ackermann::alpha_k(k, n) / power_of_two(slack_exponent(k));
        if (level <= BigRational(m)) return k;
    }
    throw Error(Errc::NoRegion, "no level k fits m = " + std::to_string(m));
}

std::int64_t hop_lower_bound_from_edges(std::uint64_t m, std::uint64_t n, HopVariant variant) {
    if (n == 0) throw Error(Errc::InvalidArgument, "n must be at least 1");
    if (m < n) throw Error(Errc::InvalidArgument, "requires m >= n");
    const auto alpha = static_cast<std::int64_t>(ackermann::alpha_two_param(m, n));
    if (variant == HopVariant::Stretch1) return alpha;
    const auto k = slack_k_region(m, n);
    return std::max<std::int64_t>(0, alpha - static_cast<std::int64_t>(slack_exponent(k)));
}

std::vector<BoundsRow> make_report(std::span<const std::uint64_t> ns, std::span<const std::uint64_t> ks,
                                   std::span<const Rational> epss, bool with_oracle) {
    std::vector<std::uint64_t> sorted_n(ns.begin(), ns.end());
    std::vector<std::uint64_t> sorted_k(ks.begin(), ks.end());
    std::vector<Rational> sorted_eps(epss.begin(), epss.end());
    std::sort(sorted_n.begin(), sorted_n.end());
    std::sort(sorted_k.begin(), sorted_k.end());
    std::sort(sorted_eps.begin(), sorted_eps.end());

    std::vector<BoundsRow> rows;
    for (const auto n : sorted_n) {
        if (n == 0) throw Error(Errc::InvalidArgument, "n must be at least 1");
        if (with_oracle && n > kReportOracleGuard) {
            throw Error(Errc::TooLarge, "oracle rows are limited to n <= " + std::to_string(kReportOracleGuard));
        }
        std::vector<std::int64_t> points(n);
        std::iota(points.begin(), points.end(), 1);
        for (const auto k : sorted_k) {
            const auto built = build_general(points, k);
            for (const auto& eps : sorted_eps) {
                BoundsRow row;
                row.n = n;
                row.k = k;
                row.eps = eps;
                row.construction_edges = built.stats.edge_count;
                row.lb_kind = eps > Rational(1, 2) ? LowerBoundKind::MainEps : LowerBoundKind::GeneralSubspace;
                row.lb_value = lower_bound_edges(row.lb_kind, n, k, eps);
                if (with_oracle) {
                    SearchConfig cfg;
                    cfg.eps = eps;
                    cfg.k = k;
                    cfg.max_points = kReportOracleGuard;
                    row.oracle_min = min_edges_bnb(points, cfg).minimum;
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

std::string format_big(const BigRational& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

std::string report_csv(std::span<const BoundsRow> rows) {
    std::ostringstream out;
    out << "n,k,eps,lb_kind,lb_value,construction_edges,oracle_min\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.k << ',' << format_ratio(r.eps) << ',' << kind_name(r.lb_kind) << ','
            << format_big(r.lb_value) << ',' << r.construction_edges << ',';
        if (r.oracle_min) out << *r.oracle_min;
        out << '\n';
    }
    return out.str();
}

std::string report_json(std::span<const BoundsRow> rows) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        const auto pre = preconditions(r.lb_kind, r.k);
        nlohmann::ordered_json row;
        row["n"] = r.n;
        row["k"] = r.k;
        row["eps"] = format_ratio(r.eps);
        row["lb_kind"] = kind_name(r.lb_kind);
        row["lb_value"] = format_big(r.lb_value);
        row["construction_edges"] = r.construction_edges;
        row["oracle_min"] = r.oracle_min ? nlohmann::ordered_json(*r.oracle_min) : nlohmann::ordered_json();
        row["asymptotic"] = pre.asymptotic;
        row["preconditions"] = {
            {"min_n", pre.min_n},
            {"n_satisfied", r.n >= pre.min_n},
            {"subspace_density", format_ratio(pre.density)},
            {"max_eps", format_ratio(pre.max_eps)},
            {"eps_satisfied", r.eps <= pre.max_eps},
        };
        out.push_back(std::move(row));
    }
    return out.dump(2) + "\n";
}

}  // namespace hopspan
