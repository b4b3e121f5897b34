#include "hopspan/ackermann.hpp"

#include <algorithm>
#include <bit>

#include "hopspan/error.hpp"

namespace hopspan::ackermann {

namespace {

std::uint64_t level_zero(Family fam, std::uint64_t s, std::uint64_t cap) {
    if (fam == Family::A) {
        return s > cap / 2 ? cap : std::min(2 * s, cap);
    }
    if (s >= (std::uint64_t{1} << 32)) return cap;
    return std::min(s * s, cap);
}

std::uint64_t base_value(Family fam) { return fam == Family::A ? 1 : 2; }

}  // namespace

Table::Table(std::uint64_t cap) : cap_(cap) {}

std::uint64_t Table::eval(Family fam, std::uint64_t k, std::uint64_t s, std::uint64_t cap,
                          bool memo) const {
    k = std::min<std::uint64_t>(k, kStableLevel);
    if (k == 0) return level_zero(fam, s, cap);
    if (s >= kMaxArg) return cap;

    const std::size_t slot =
        ((fam == Family::A ? 0 : 1) * (kStableLevel + 1) + k) * kMaxArg + s;
    if (memo) {
        if (const auto hit = memo_[slot].load(std::memory_order_relaxed); hit != 0) return hit;
    }

    std::uint64_t value = std::min(base_value(fam), cap);
    for (std::uint64_t step = 1; step <= s && value < cap; ++step) {
        value = eval(fam, k - 1, value, cap, memo);
    }
    value = std::min(value, cap);

    if (memo) memo_[slot].store(value, std::memory_order_relaxed);
    return value;
}

std::uint64_t Table::saturated(Family fam, std::uint64_t k, std::uint64_t s) const {
    return eval(fam, k, s, cap_, true);
}

bool Table::reached(Family fam, std::uint64_t k, std::uint64_t s, std::uint64_t target) const {
    if (target == 0) return true;
    if (target <= cap_) return saturated(fam, k, s) >= target;
    return eval(fam, k, s, target, false) >= target;
}

const Table& default_table() {
    static const Table table;
    return table;
}

bool threshold_reached(Family fam, std::uint64_t k, std::uint64_t s, std::uint64_t target) {
    return default_table().reached(fam, k, s, target);
}

std::uint64_t alpha_k(std::uint64_t k, std::uint64_t n) {
    const Family fam = (k % 2 == 0) ? Family::A : Family::B;
    const std::uint64_t level = k / 2;
    const auto ok = [&](std::uint64_t s) { return threshold_reached(fam, level, s, n); };

    if (ok(0)) return 0;
    // fam(level, .) is strictly increasing, so gallop then bisect.
    std::uint64_t lo = 0;
    std::uint64_t hi = 1;
    while (!ok(hi)) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        (ok(mid) ? hi : lo) = mid;
    }
    return hi;
}

std::uint64_t alpha_two_param(std::uint64_t m, std::uint64_t n) {
    if (m == 0 || n == 0) {
        throw Error(Errc::InvalidArgument, "alpha(m, n) requires m >= 1 and n >= 1");
    }
    const std::uint64_t quotient = m / n + (m % n != 0 ? 1 : 0);
    const std::uint64_t arg = std::min<std::uint64_t>(quotient, std::uint64_t{1} << 61) * 4;
    // x > log2 n  <=>  2^x > n  <=>  x >= bit_width(n)
    const auto target = static_cast<std::uint64_t>(std::bit_width(n));
    std::uint64_t i = 1;
    while (!threshold_reached(Family::A, i, arg, target)) ++i;
    return i;
}

std::uint64_t alpha_one(std::uint64_t n) {
    std::uint64_t s = 0;
    while (!threshold_reached(Family::A, s, s, n)) ++s;
    return s;
}

std::uint64_t alpha_iter(std::uint64_t k, std::uint64_t j, std::uint64_t n) {
    for (std::uint64_t step = 0; step < j; ++step) n = alpha_k(k, n);
    return n;
}

}  // namespace hopspan::ackermann
