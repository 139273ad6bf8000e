#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "zphi/kernel.hpp"

namespace {

using zphi::Int;
using Small = std::int64_t;

TEST(Isqrt, Examples) {
    EXPECT_EQ(zphi::isqrt(Int(0)), 0);
    EXPECT_EQ(zphi::isqrt(Int(24)), 4);
    EXPECT_EQ(zphi::isqrt(Int("10000000000000000000000000000000000000000")), Int("100000000000000000000"));
    EXPECT_THROW(zphi::isqrt(Int(-1)), zphi::DomainError);
    EXPECT_THROW(zphi::isqrt(Small(-1)), zphi::DomainError);
}

TEST(Isqrt, FloorRootProperty) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        Int n = 0;
        const int words = 1 + i % 6;
        for (int w = 0; w < words; ++w) n = (n << 64) | Int(rng());
        const Int k = zphi::isqrt(n);
        EXPECT_LE(k * k, n);
        EXPECT_GT((k + 1) * (k + 1), n);
    }
    for (Small n = 0; n < 5000; ++n) {
        const Small k = zphi::isqrt(n);
        EXPECT_TRUE(k * k <= n && (k + 1) * (k + 1) > n) << n;
    }
    // __int128 path above 64 bits
    const __int128 big = (static_cast<__int128>(1) << 100) + 12345;
    const __int128 k = zphi::isqrt(big);
    EXPECT_TRUE(k * k <= big && (k + 1) * (k + 1) > big);
}

TEST(SurdSign, Examples) {
    EXPECT_EQ(zphi::surd_sign(Int(0), Int(0)), 0);
    EXPECT_EQ(zphi::surd_sign(Int(-2), Int(1)), 1);
    EXPECT_EQ(zphi::surd_sign(Int(9), Int(-4)), 1);
    EXPECT_EQ(zphi::surd_sign(Int(-9), Int(4)), -1);
    EXPECT_EQ(zphi::surd_sign(Int(3), Int(0)), 1);
    EXPECT_EQ(zphi::surd_sign(Int(0), Int(-1)), -1);
}

TEST(SurdSign, ZeroOnlyAtOrigin) {
    for (Small p = -40; p <= 40; ++p)
        for (Small q = -40; q <= 40; ++q) {
            const int s = zphi::surd_sign(p, q);
            EXPECT_EQ(s == 0, p == 0 && q == 0);
            EXPECT_EQ(s, zphi::surd_sign(Int(p), Int(q)));
            EXPECT_EQ(zphi::surd_sign(Small(-p), Small(-q)), -s);
        }
}

TEST(Beatty, Examples) {
    EXPECT_EQ(zphi::beatty_f(Int(0)), 0);
    EXPECT_EQ(zphi::beatty_f(Int(5)), 8);
    EXPECT_EQ(zphi::beatty_f(Int(-3)), -5);
    EXPECT_EQ(zphi::fbar(Int(0)), 0);
    EXPECT_EQ(zphi::fbar(Int(5)), 13);
    EXPECT_EQ(zphi::fbar(Int(1)), 2);
}

TEST(Beatty, AgreesWithConvergentOracle) {
    for (Small x = -3000; x <= 3000; ++x) {
        const Int expected = oracle::beatty(Int(x));
        ASSERT_EQ(zphi::beatty_f(Int(x)), expected) << x;
        ASSERT_EQ(Int(zphi::beatty_f(x)), expected) << x;
    }
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        Int x = 0;
        for (int w = 0; w < 4; ++w) x = (x << 64) | Int(rng());
        x >>= static_cast<unsigned>(rng() % 250);
        if (i % 2) x = -x;
        ASSERT_EQ(zphi::beatty_f(x), oracle::beatty(x)) << x;
    }
}

TEST(Beatty, Int64AgreesWithIntNearAdmissibleLimit) {
    const Small limit = zphi::int_traits<Small>::max_magnitude;
    for (Small x : {limit, limit - 1, -limit, Small(1) << 40, Small(987654321987)}) {
        EXPECT_EQ(Int(zphi::beatty_f(x)), zphi::beatty_f(Int(x))) << x;
        EXPECT_EQ(zphi::frac_compare(x, Small(x - 1)), zphi::frac_compare(Int(x), Int(x - 1)));
    }
}

TEST(Beatty, StrictlyIncreasing) {
    for (Small x = -2000; x < 2000; ++x) ASSERT_LT(zphi::beatty_f(x), zphi::beatty_f(x + 1));
}

TEST(Inverses, Examples) {
    EXPECT_EQ(zphi::f_inverse(Int(12)), Int(8));
    EXPECT_FALSE(zphi::f_inverse(Int(2)).has_value());
    EXPECT_EQ(zphi::f_inverse(Int(0)), Int(0));
    EXPECT_EQ(zphi::fbar_inverse(Int(2)), Int(1));
    EXPECT_FALSE(zphi::fbar_inverse(Int(3)).has_value());
    EXPECT_EQ(zphi::fbar_inverse(Int(13)), Int(5));
}

TEST(Inverses, RoundTripAndPartition) {
    for (Small x = -3000; x <= 3000; ++x) {
        ASSERT_EQ(zphi::f_inverse(zphi::beatty_f(x)), x);
        ASSERT_EQ(zphi::fbar_inverse(zphi::fbar(x)), x);
        const auto fi = zphi::f_inverse(x);
        const auto bi = zphi::fbar_inverse(x);
        if (fi) {
            ASSERT_EQ(zphi::beatty_f(*fi), x);
        }
        if (bi) {
            ASSERT_EQ(zphi::fbar(*bi), x);
        }
        if (x == 0) {
            EXPECT_TRUE(fi && bi);
        } else if (x == -1) {
            EXPECT_TRUE(!fi && !bi);
        } else {
            ASSERT_NE(fi.has_value(), bi.has_value()) << x;
        }
    }
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        Int x = (Int(rng()) << 128) + (Int(rng()) << 64) + Int(rng());
        if (i % 2) x = -x;
        EXPECT_EQ(zphi::f_inverse(zphi::beatty_f(x)), x);
        EXPECT_EQ(zphi::fbar_inverse(zphi::fbar(x)), x);
        EXPECT_NE(zphi::f_inverse(x).has_value(), zphi::fbar_inverse(x).has_value());
    }
}

TEST(FracCompare, Examples) {
    EXPECT_EQ(zphi::frac_compare(Int(5), Int(2)), std::strong_ordering::less);
    EXPECT_EQ(zphi::frac_compare(Int(7), Int(7)), std::strong_ordering::equal);
    EXPECT_EQ(zphi::frac_compare(Int(1), Int(2)), std::strong_ordering::greater);
}

TEST(FracCompare, AgreesWithOracle) {
    for (Small x = -60; x <= 60; ++x)
        for (Small y = -60; y <= 60; ++y)
            ASSERT_EQ(zphi::frac_compare(x, y), oracle::frac_compare(Int(x), Int(y))) << x << ' ' << y;
}

TEST(FracCompare, ZeroIsTheMinimum) {
    for (Small x = -2000; x <= 2000; ++x)
        if (x != 0) {
            ASSERT_EQ(zphi::frac_compare(x, Small(0)), std::strong_ordering::greater);
        }
}

TEST(StarLess, Examples) {
    EXPECT_TRUE(zphi::star_less(Int(5), Int(2)));
    EXPECT_FALSE(zphi::star_less(Int(4), Int(4)));
    EXPECT_FALSE(zphi::star_less(Int(1), Int(2)));
}

TEST(StarLess, MatchesFracCompare) {
    for (Small x = -300; x <= 300; ++x)
        for (Small y = -300; y <= 300; ++y)
            ASSERT_EQ(zphi::star_less(x, y), zphi::frac_compare(x, y) < 0) << x << ' ' << y;
}

TEST(Kronecker, Examples) {
    EXPECT_EQ(zphi::kronecker_witness(Int(5), Int(2)), -3);
    EXPECT_EQ(zphi::kronecker_witness(Int(2), Int(9)), 20);
    // f(-8) + 5 = -13 + 5; the oracle confirms {phi 13} < {phi -8} < {phi 5}.
    EXPECT_EQ(zphi::kronecker_witness(Int(13), Int(5)), -8);
    EXPECT_TRUE(oracle::frac_compare(13, -8) < 0);
    EXPECT_TRUE(oracle::frac_compare(-8, 5) < 0);
    EXPECT_THROW(zphi::kronecker_witness(Int(2), Int(5)), zphi::DomainError);
    EXPECT_THROW(zphi::kronecker_witness(Int(3), Int(3)), zphi::DomainError);
}

TEST(Kronecker, WitnessLiesBetween) {
    for (Small x = -120; x <= 120; ++x)
        for (Small y = -120; y <= 120; ++y) {
            if (zphi::frac_compare(x, y) >= 0) continue;
            const Small w = zphi::kronecker_witness(x, y);
            ASSERT_TRUE(oracle::frac_compare(x, w) < 0);
            ASSERT_TRUE(oracle::frac_compare(w, y) < 0);
        }
}

TEST(Refine, Examples) {
    EXPECT_EQ(zphi::refine(Int(5), Int(2), 1), std::vector<Int>{-3});
    const auto two = zphi::refine(Int(5), Int(2), 2);
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0], -3);
    EXPECT_TRUE(oracle::frac_compare(5, two[1]) < 0);
    EXPECT_TRUE(oracle::frac_compare(two[1], -3) < 0);
    EXPECT_THROW(zphi::refine(Int(5), Int(2), 0), zphi::DomainError);
}

TEST(Refine, ChainsAreNested) {
    const auto chain = zphi::refine(Int(5), Int(2), 12);
    Int upper = 2;
    for (const auto& w : chain) {
        EXPECT_TRUE(oracle::frac_compare(5, w) < 0);
        EXPECT_TRUE(oracle::frac_compare(w, upper) < 0);
        upper = w;
    }
}

TEST(Integers, ParseIntAcceptsUnderscores) {
    EXPECT_EQ(zphi::parse_int("1_000_000"), 1000000);
    EXPECT_EQ(zphi::parse_int("-42"), -42);
    EXPECT_THROW(zphi::parse_int("1__0"), zphi::DomainError);
    EXPECT_THROW(zphi::parse_int("_1"), zphi::DomainError);
    EXPECT_THROW(zphi::parse_int("1_"), zphi::DomainError);
    EXPECT_THROW(zphi::parse_int("12a"), zphi::DomainError);
    EXPECT_THROW(zphi::parse_int(""), zphi::DomainError);
    EXPECT_THROW(zphi::parse_int("-"), zphi::DomainError);
}

TEST(Integers, FloorDivision) {
    EXPECT_EQ(zphi::floor_div(Int(-7), Int(2)), -4);
    EXPECT_EQ(zphi::floor_div(Int(7), Int(2)), 3);
    EXPECT_EQ(zphi::floor_div(Int(-8), Int(2)), -4);
    EXPECT_EQ(zphi::floor_mod(Int(-7), Int(3)), 2);
}

}  // namespace
