#include <gtest/gtest.h>

#include <chrono>
#include <numeric>
#include <random>

#include "sepcount/arith.hpp"
#include "support.hpp"

using namespace sepcount;

TEST(Factorize, SmallExamples) {
    EXPECT_EQ(factorize(120), (std::vector<PrimePower>{{2, 3}, {3, 1}, {5, 1}}));
    EXPECT_EQ(factorize(7), (std::vector<PrimePower>{{7, 1}}));
    EXPECT_EQ(factorize(2), (std::vector<PrimePower>{{2, 1}}));
    EXPECT_EQ(factorize(1024), (std::vector<PrimePower>{{2, 10}}));
}

TEST(Factorize, ProductOfFirstFifteenPrimes) {
    const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    std::vector<PrimePower> expected;
    for (auto p : primes) expected.push_back({p, 1});
    EXPECT_EQ(factorize(614889782588491410ULL), expected);
}

TEST(Factorize, LargePrimeAndSemiprime) {
    const auto start = std::chrono::steady_clock::now();
    EXPECT_EQ(factorize(2305843009213693951ULL), (std::vector<PrimePower>{{2305843009213693951ULL, 1}}));
    EXPECT_EQ(factorize(18446744073709551557ULL), (std::vector<PrimePower>{{18446744073709551557ULL, 1}}));
    // 1000003 * 1000033
    EXPECT_EQ(factorize(1000036000099ULL), (std::vector<PrimePower>{{1000003, 1}, {1000033, 1}}));
    EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(2));
}

TEST(Factorize, RejectsBelowTwo) {
    EXPECT_THROW(factorize(0), DomainError);
    EXPECT_THROW(factorize(1), DomainError);
    EXPECT_THROW(Modulus(1), DomainError);
}

TEST(Factorize, InvariantsUpToTenThousand) {
    for (std::uint64_t n = 2; n <= 10000; ++n) {
        const auto fs = factorize(n);
        std::uint64_t product = 1;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            ASSERT_TRUE(is_prime(fs[i].prime)) << n;
            ASSERT_GE(fs[i].exponent, 1U);
            if (i > 0) ASSERT_LT(fs[i - 1].prime, fs[i].prime) << n;
            product *= fs[i].value();
        }
        ASSERT_EQ(product, n);
    }
}

TEST(IsPrime, MatchesSieve) {
    constexpr std::size_t limit = 100000;
    std::vector<bool> composite(limit + 1, false);
    for (std::size_t i = 2; i * i <= limit; ++i) {
        if (!composite[i]) {
            for (std::size_t j = i * i; j <= limit; j += i) composite[j] = true;
        }
    }
    for (std::size_t n = 0; n <= limit; ++n) ASSERT_EQ(is_prime(n), n >= 2 && !composite[n]) << n;
    // Strong pseudoprimes to several small bases.
    EXPECT_FALSE(is_prime(3215031751ULL));
    EXPECT_FALSE(is_prime(3825123056546413051ULL));
}

TEST(Modulus, SignedInputIsCanonicalized) {
    EXPECT_EQ(Modulus::from_signed(-12).value(), 12U);
    EXPECT_EQ(Modulus::from_signed(12).value(), 12U);
    EXPECT_THROW(Modulus::from_signed(-1), DomainError);
    EXPECT_THROW(Modulus::from_signed(0), DomainError);
}

TEST(Modulus, ComponentsAndFields) {
    const Modulus m(360);  // 2^3 * 3^2 * 5
    ASSERT_EQ(m.component_count(), 3U);
    EXPECT_EQ(m.component(0).value(), 8U);
    EXPECT_EQ(m.component(1).value(), 9U);
    EXPECT_EQ(m.component(2).value(), 5U);
    EXPECT_EQ(m.residue_field(1).value(), 3U);
    EXPECT_TRUE(m.residue_field(0).is_prime());
    EXPECT_FALSE(m.is_prime_power());

    const Modulus q(27);
    EXPECT_EQ(q.component(0).value(), 27U);
    EXPECT_EQ(q.residue_field(0).value(), 3U);
    EXPECT_TRUE(Modulus(7).is_prime());
    EXPECT_EQ(Modulus(7).residue_field(0).value(), 7U);
}

TEST(Totient, Examples) {
    EXPECT_EQ(prime_power_totient(2, 3), 4);
    EXPECT_EQ(prime_power_totient(2, 0), 1);  // phi(1)
    EXPECT_EQ(totient(Modulus(8)), 4);
    EXPECT_EQ(totient(Modulus(15)), testutil::brute_totient(15));
    EXPECT_EQ(totient(Modulus(15)), 8);
}

TEST(Totient, MatchesUnitCountUpToTenThousand) {
    for (std::uint64_t n = 2; n <= 10000; ++n) {
        ASSERT_EQ(totient(Modulus(n)), testutil::brute_totient(n)) << n;
    }
}

TEST(TotientOfPower, Examples) {
    EXPECT_EQ(totient_of_power(Modulus(4), 2), 8);
    EXPECT_EQ(totient_of_power(Modulus(15), 2), testutil::brute_totient(225));
    EXPECT_EQ(totient_of_power(Modulus(15), 2), 120);
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
        for (unsigned d = 1; d <= 6; ++d) {
            EXPECT_EQ(totient_of_power(Modulus(p), d), pow(p, d) - pow(p, d - 1));
        }
    }
}

TEST(TotientOfPower, AgreesWithFactoringThePower) {
    for (std::uint64_t n = 2; n <= 100; ++n) {
        std::uint64_t power = 1;
        for (unsigned e = 1; e <= 4; ++e) {
            power *= n;
            ASSERT_EQ(totient_of_power(Modulus(n), e), totient(Modulus(power))) << n << "^" << e;
        }
    }
}

TEST(IsUnit, Examples) {
    EXPECT_FALSE(is_unit(Residue(3, Modulus(6))));
    EXPECT_TRUE(is_unit(Residue(5, Modulus(6))));
    EXPECT_FALSE(is_unit(Residue(0, Modulus(2))));
}

TEST(IsUnit, EquivalentToHavingAnInverse) {
    for (std::uint64_t n = 2; n <= 200; ++n) {
        const Modulus m(n);
        for (std::uint64_t a = 0; a < n; ++a) {
            bool invertible = false;
            for (std::uint64_t b = 0; b < n && !invertible; ++b) invertible = a * b % n == 1;
            ASSERT_EQ(is_unit(Residue(a, m)), invertible) << a << " mod " << n;
        }
    }
}

TEST(Residue, StoresCanonicalRepresentative) {
    EXPECT_EQ(Residue(17, Modulus(5)).value(), 2U);
    EXPECT_EQ(Residue(17, Modulus(5)), Residue(2, Modulus(5)));
    EXPECT_EQ(Modulus(5).reduce_signed(-3), 2U);
}

TEST(Crt, SplitExamples) {
    const auto parts = crt_split(Residue(7, Modulus(12)));
    ASSERT_EQ(parts.size(), 2U);
    EXPECT_EQ(parts[0], Residue(3, Modulus(4)));
    EXPECT_EQ(parts[1], Residue(1, Modulus(3)));

    for (const auto& r : crt_split(Residue(0, Modulus(360)))) EXPECT_EQ(r.value(), 0U);

    const auto p15 = crt_split(Residue(11, Modulus(15)));
    EXPECT_EQ(p15[0], Residue(2, Modulus(3)));
    EXPECT_EQ(p15[1], Residue(1, Modulus(5)));
}

TEST(Crt, CombineExamples) {
    const std::vector<Residue> parts{Residue(3, Modulus(4)), Residue(1, Modulus(3))};
    EXPECT_EQ(crt_combine(parts), Residue(7, Modulus(12)));
    const std::vector<Residue> single{Residue(9, Modulus(11))};
    EXPECT_EQ(crt_combine(single), Residue(9, Modulus(11)));
}

TEST(Crt, CombineRejectsSharedFactors) {
    const std::vector<Residue> parts{Residue(1, Modulus(4)), Residue(1, Modulus(6))};
    EXPECT_THROW(crt_combine(parts), DomainError);
    EXPECT_THROW(crt_combine(std::span<const Residue>{}), DomainError);
}

TEST(Crt, RoundTripRandomResidues) {
    std::mt19937_64 rng(360);
    const Modulus m(360);
    for (int i = 0; i < 1000; ++i) {
        const Residue a(rng() % 360, m);
        ASSERT_EQ(crt_combine(crt_split(a)), a);
    }
}

TEST(Crt, RoundTripExhaustiveSmallModuli) {
    for (std::uint64_t n = 2; n <= 300; ++n) {
        const Modulus m(n);
        for (std::uint64_t a = 0; a < n; ++a) ASSERT_EQ(crt_combine(crt_split(Residue(a, m))), Residue(a, m));
    }
}

TEST(ModArith, InverseAndPow) {
    EXPECT_EQ(inverse_mod(2, 5), 3U);
    EXPECT_FALSE(inverse_mod(2, 4).has_value());
    EXPECT_EQ(pow_mod(3, 4, 7), 81U % 7);
    const std::uint64_t big = 18446744073709551557ULL;
    const std::uint64_t a = big - 2;
    EXPECT_EQ(mul_mod(a, *inverse_mod(a, big), big), 1U);
}

TEST(Render, NaturalsAndRationals) {
    EXPECT_EQ(to_string(pow(std::uint64_t{10}, 20U)), "100000000000000000000");
    EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
}
