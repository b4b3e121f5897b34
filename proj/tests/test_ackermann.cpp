#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "hopspan/ackermann.hpp"
#include "hopspan/error.hpp"

namespace ack = hopspan::ackermann;
using ack::Family;

namespace {

// Closed forms computed with plain integer arithmetic.
std::uint64_t ceil_log2(std::uint64_t n) {
    std::uint64_t r = 0;
    while ((std::uint64_t{1} << r) < n) ++r;
    return r;
}

std::uint64_t ceil_sqrt(std::uint64_t n) {
    std::uint64_t r = 0;
    while (r * r < n) ++r;
    return r;
}

std::uint64_t log_star(std::uint64_t n) {
    std::uint64_t count = 0;
    while (n > 1) {
        n = ceil_log2(n);
        ++count;
    }
    return count;
}

// Tower of s twos, saturating above 2^62.
std::uint64_t tower(std::uint64_t s) {
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < s; ++i) {
        if (v >= 62) return std::uint64_t{1} << 62;
        v = std::uint64_t{1} << v;
    }
    return v;
}

}  // namespace

TEST(Threshold, LevelZeroIsDoubling) {
    EXPECT_TRUE(ack::threshold_reached(Family::A, 0, 5, 10));
    EXPECT_FALSE(ack::threshold_reached(Family::A, 0, 5, 11));
}

TEST(Threshold, LevelOneIsPowerOfTwo) {
    EXPECT_TRUE(ack::threshold_reached(Family::A, 1, 4, 16));
    EXPECT_FALSE(ack::threshold_reached(Family::A, 1, 4, 17));
    for (std::uint64_t s = 0; s < 62; ++s) {
        EXPECT_EQ(ack::default_table().saturated(Family::A, 1, s), std::uint64_t{1} << s);
    }
}

TEST(Threshold, LevelTwoIsTower) {
    EXPECT_FALSE(ack::threshold_reached(Family::A, 2, 3, 17));
    EXPECT_TRUE(ack::threshold_reached(Family::A, 2, 4, 17));
    for (std::uint64_t s = 0; s < 8; ++s) {
        EXPECT_EQ(ack::default_table().saturated(Family::A, 2, s), tower(s)) << s;
    }
}

TEST(Threshold, BFamilyBaseCases) {
    const auto& t = ack::default_table();
    EXPECT_EQ(t.saturated(Family::B, 0, 7), 49u);
    EXPECT_EQ(t.saturated(Family::B, 1, 0), 2u);
    // B(1, s) = 2^(2^s)
    EXPECT_EQ(t.saturated(Family::B, 1, 1), 4u);
    EXPECT_EQ(t.saturated(Family::B, 1, 2), 16u);
    EXPECT_EQ(t.saturated(Family::B, 1, 5), std::uint64_t{1} << 32);
    EXPECT_EQ(t.saturated(Family::B, 2, 1), 16u);
}

TEST(Threshold, SaturatesInsteadOfOverflowing) {
    const auto& t = ack::default_table();
    EXPECT_EQ(t.saturated(Family::A, 3, 4), t.cap());
    EXPECT_EQ(t.saturated(Family::A, 40, 1000), t.cap());
    EXPECT_TRUE(ack::threshold_reached(Family::A, 2, 5, ~std::uint64_t{0}));
    EXPECT_FALSE(ack::threshold_reached(Family::A, 1, 63, ~std::uint64_t{0}));
    EXPECT_TRUE(ack::threshold_reached(Family::A, 1, 64, ~std::uint64_t{0}));
}

TEST(Threshold, SmallCapTable) {
    const ack::Table small(100);
    EXPECT_EQ(small.saturated(Family::A, 1, 6), 64u);
    EXPECT_EQ(small.saturated(Family::A, 1, 7), 100u);
    EXPECT_TRUE(small.reached(Family::A, 1, 7, 128));
    EXPECT_FALSE(small.reached(Family::A, 1, 7, 129));
}

TEST(Threshold, MonotoneInBothArguments) {
    const auto& t = ack::default_table();
    for (auto fam : {Family::A, Family::B}) {
        for (std::uint64_t k = 0; k < 6; ++k) {
            for (std::uint64_t s = 0; s < 40; ++s) {
                EXPECT_LE(t.saturated(fam, k, s), t.saturated(fam, k, s + 1));
                if (s >= 2) EXPECT_LE(t.saturated(fam, k, s), t.saturated(fam, k + 1, s));
            }
        }
    }
}

TEST(AlphaK, Examples) {
    EXPECT_EQ(ack::alpha_k(0, 7), 4u);
    EXPECT_EQ(ack::alpha_k(2, 8), 3u);
    EXPECT_EQ(ack::alpha_k(4, 17), 4u);
}

TEST(AlphaK, ClosedFormsSmallRange) {
    for (std::uint64_t n = 1; n <= 70000; ++n) {
        ASSERT_EQ(ack::alpha_k(0, n), (n + 1) / 2) << n;
        ASSERT_EQ(ack::alpha_k(1, n), ceil_sqrt(n)) << n;
        ASSERT_EQ(ack::alpha_k(2, n), ceil_log2(n)) << n;
        ASSERT_EQ(ack::alpha_k(3, n), ceil_log2(ceil_log2(n))) << n;
        ASSERT_EQ(ack::alpha_k(4, n), log_star(n)) << n;
    }
}

TEST(AlphaK, ZeroArgument) {
    for (std::uint64_t k = 0; k < 10; ++k) EXPECT_EQ(ack::alpha_k(k, 0), 0u);
}

TEST(AlphaK, LargeArguments) {
    const std::uint64_t big = ~std::uint64_t{0};
    EXPECT_EQ(ack::alpha_k(2, big), 64u);
    EXPECT_EQ(ack::alpha_k(4, big), 5u);
    EXPECT_EQ(ack::alpha_k(0, big), big / 2 + 1);
    EXPECT_EQ(ack::alpha_k(1, big), std::uint64_t{1} << 32);
}

TEST(AlphaK, NonIncreasingInK) {
    for (std::uint64_t n : {2ull, 3ull, 17ull, 1000ull, 65536ull, 1ull << 40}) {
        for (std::uint64_t k = 0; k < 12; ++k) {
            EXPECT_GE(ack::alpha_k(k, n), ack::alpha_k(k + 2, n)) << k << ' ' << n;
        }
    }
}

TEST(AlphaK, StepIdentity) {
    for (std::uint64_t k = 1; k <= 4; ++k) {
        for (std::uint64_t n = 2; n <= 20000; ++n) {
            ASSERT_EQ(ack::alpha_k(2 * k, n), 1 + ack::alpha_k(2 * k, ack::alpha_k(2 * k - 2, n))) << k << ' ' << n;
            if (n >= 3) {
                ASSERT_EQ(ack::alpha_k(2 * k + 1, n), 1 + ack::alpha_k(2 * k + 1, ack::alpha_k(2 * k - 1, n)))
                    << k << ' ' << n;
            }
        }
    }
}

TEST(AlphaTwoParam, Examples) {
    EXPECT_EQ(ack::alpha_two_param(1024, 1024), 1u);
    EXPECT_EQ(ack::alpha_two_param(1, 1), 1u);
    EXPECT_EQ(ack::alpha_two_param(256ull << 16, 1ull << 16), 1u);
}

TEST(AlphaTwoParam, BoundaryAtSixteen) {
    // A(1, 4) = 16 is not greater than log2(2^16) = 16.
    EXPECT_EQ(ack::alpha_two_param(65535, 65535), 1u);
    EXPECT_EQ(ack::alpha_two_param(65536, 65536), 2u);
    EXPECT_EQ(ack::alpha_two_param(65536 * 2, 65536), 1u);
}

TEST(AlphaTwoParam, MatchesDirectDefinition) {
    // min{i >= 1 : A(i, 4 ceil(m/n)) > log2 n}, with A(1, s) = 2^s and
    // A(2, s) a tower; for these n the answer is 1 or 2.
    for (std::uint64_t n = 1; n <= 5000; n += 7) {
        for (std::uint64_t m : {n, 2 * n, 3 * n + 1, 17 * n}) {
            const std::uint64_t s = 4 * ((m + n - 1) / n);
            const bool level_one = std::ldexp(1.0, static_cast<int>(s)) > std::log2(static_cast<double>(n));
            EXPECT_EQ(ack::alpha_two_param(m, n), level_one ? 1u : 2u) << m << ' ' << n;
        }
    }
}

TEST(AlphaTwoParam, NonIncreasingInM) {
    for (std::uint64_t n : {1ull, 2ull, 1ull << 16, 1ull << 40}) {
        std::uint64_t prev = ack::alpha_two_param(n, n);
        for (std::uint64_t m = n; m < 64 * n; m += n / 2 + 1) {
            const auto v = ack::alpha_two_param(m, n);
            EXPECT_LE(v, prev);
            EXPECT_GE(v, 1u);
            prev = v;
        }
    }
}

TEST(AlphaTwoParam, RejectsZero) {
    EXPECT_THROW(ack::alpha_two_param(0, 5), hopspan::Error);
    EXPECT_THROW(ack::alpha_two_param(5, 0), hopspan::Error);
    try {
        ack::alpha_two_param(0, 1);
    } catch (const hopspan::Error& e) {
        EXPECT_EQ(e.code(), hopspan::Errc::InvalidArgument);
    }
}

TEST(AlphaOne, Values) {
    // A(0,0)=0, A(1,1)=2, A(2,2)=4, A(3,3)=65536
    EXPECT_EQ(ack::alpha_one(0), 0u);
    EXPECT_EQ(ack::alpha_one(1), 1u);
    EXPECT_EQ(ack::alpha_one(2), 1u);
    EXPECT_EQ(ack::alpha_one(4), 2u);
    EXPECT_EQ(ack::alpha_one(5), 3u);
    EXPECT_EQ(ack::alpha_one(65536), 3u);
    EXPECT_EQ(ack::alpha_one(65537), 4u);
    EXPECT_EQ(ack::alpha_one(1000000), 4u);
    EXPECT_EQ(ack::alpha_one(~std::uint64_t{0}), 4u);
}

TEST(AlphaOne, BelowLogStar) {
    for (std::uint64_t n = 2; n <= 100000; n = n * 3 / 2 + 1) EXPECT_LE(ack::alpha_one(n), log_star(n)) << n;
}

TEST(AlphaIter, Examples) {
    EXPECT_EQ(ack::alpha_iter(2, 0, 100), 100u);
    EXPECT_EQ(ack::alpha_iter(2, 2, 256), 3u);
    EXPECT_EQ(ack::alpha_iter(0, 3, 16), 2u);
}

TEST(DoublingBound, DoubledArgumentDominated) {
    // A(i+1, j) >= A(i, 2j)
    for (std::uint64_t i = 0; i <= 3; ++i) {
        for (std::uint64_t j = 4; j <= 8; ++j) {
            for (std::uint64_t e = 0; e <= 62; ++e) {
                const std::uint64_t target = std::uint64_t{1} << e;
                if (ack::threshold_reached(Family::A, i, 2 * j, target)) {
                    EXPECT_TRUE(ack::threshold_reached(Family::A, i + 1, j, target)) << i << ' ' << j << ' ' << e;
                }
            }
        }
    }
}

TEST(DoublingBound, IteratedHierarchyBound) {
    for (std::uint64_t e = 1; e <= 20; ++e) {
        const std::uint64_t n = std::uint64_t{1} << e;
        EXPECT_LE(ack::alpha_k(2 * ack::alpha_one(n) + 2, n), 4u) << n;
    }
}
