#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "berndenom/arith.hpp"
#include "berndenom/prime_sieve.hpp"
#include "brute_force.hpp"

using namespace berndenom;

TEST(DigitSum, Examples)
{
    EXPECT_EQ(digit_sum(0, 2), 0u);
    EXPECT_EQ(digit_sum(0, 97), 0u);
    EXPECT_EQ(digit_sum(10, 3), 2u);  // 10 = (101)_3
    EXPECT_EQ(digit_sum(7, 2), 3u);
    EXPECT_EQ(digit_sum(9, 5), 5u);
    for (std::uint64_t n = 0; n < 50; ++n) EXPECT_EQ(digit_sum(n, 53), n);
}

TEST(DigitSum, RejectsSmallBase)
{
    EXPECT_THROW(digit_sum(10, 0), std::invalid_argument);
    EXPECT_THROW(digit_sum(10, 1), std::invalid_argument);
}

TEST(DigitSum, MatchesExplicitExpansionAndIsCongruentModPMinusOne)
{
    std::mt19937_64 rng(20240611);
    const auto primes = brute::primes_upto(2000);
    std::uniform_int_distribution<std::uint64_t> nd(0, 1'000'000'000'000ull);
    std::uniform_int_distribution<std::size_t> pd(0, primes.size() - 1);
    for (int i = 0; i < 20000; ++i) {
        const std::uint64_t n = nd(rng) >> (rng() % 40);
        const std::uint64_t p = primes[pd(rng)];
        const std::uint64_t s = digit_sum(n, p);
        ASSERT_EQ(s, brute::digit_sum(n, p)) << n << " base " << p;
        if (p > 2) ASSERT_EQ(s % (p - 1), n % (p - 1)) << n << " base " << p;
    }
}

TEST(FloorCondition, Examples)
{
    EXPECT_TRUE(floor_condition(7, 3));
    EXPECT_FALSE(floor_condition(4, 3));
    EXPECT_TRUE(floor_condition(9, 5));
}

TEST(FloorCondition, EquivalentToDigitConditionAboveSqrt)
{
    const PrimeSieve sieve(10000);
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        for (std::uint32_t p : sieve.range(isqrt(n) + 1, n)) {
            ASSERT_EQ(floor_condition(n, p), digit_sum(n, p) >= p) << "n = " << n << ", p = " << p;
        }
    }
}

TEST(LambdaBound, Examples)
{
    EXPECT_EQ(lambda_prime_bound(7), 4u);
    EXPECT_EQ(lambda_prime_bound(8), 3u);
    EXPECT_EQ(lambda_prime_bound(1), 1u);
}

TEST(LambdaBound, NoQualifyingPrimeAboveIt)
{
    const PrimeSieve sieve(100000);
    for (std::uint64_t n = 1; n <= 100000; ++n) {
        // Primes above n have s_p(n) = n < p.
        for (std::uint32_t p : sieve.range(lambda_prime_bound(n) + 1, n))
            ASSERT_LT(digit_sum(n, p), p) << "n = " << n << ", p = " << p;
    }
}

TEST(FallingFactorial, Examples)
{
    EXPECT_EQ(falling_factorial(5, 2), 20);
    EXPECT_EQ(falling_factorial(0, 0), 1);
    EXPECT_EQ(falling_factorial(17, 0), 1);
    EXPECT_EQ(falling_factorial(3, 5), 0);
    EXPECT_EQ(falling_factorial(6, 6), 720);
    EXPECT_EQ(falling_factorial(30, 20).get_str(), "73096577329197271449600000");
}

TEST(FallingFactorial, DivisibilityMatchesValue)
{
    for (std::uint64_t n = 0; n <= 40; ++n)
        for (std::uint64_t k = 0; k <= 6; ++k)
            for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 37}) {
                const mpz_class v = falling_factorial(n, k);
                ASSERT_EQ(divides_falling_factorial(p, n, k), mpz_divisible_ui_p(v.get_mpz_t(), p) != 0)
                    << "(" << n << ")_" << k << " by " << p;
            }
}

TEST(IsPrime, AgreesWithTrialDivision)
{
    for (std::uint64_t n = 0; n <= 200000; ++n) ASSERT_EQ(is_prime_u64(n), brute::is_prime(n)) << n;
}

TEST(IsPrime, LargeValues)
{
    EXPECT_TRUE(is_prime_u64((std::uint64_t{1} << 61) - 1));
    EXPECT_TRUE(is_prime_u64(18446744073709551557ull));  // largest 64-bit prime
    EXPECT_FALSE(is_prime_u64(3215031751ull));           // strong pseudoprime to 2, 3, 5, 7
    EXPECT_FALSE(is_prime_u64(3825123056546413051ull));  // strong pseudoprime to bases up to 23
    EXPECT_FALSE(is_prime_u64(561));
    EXPECT_FALSE(is_prime_u64(4294967297ull));  // F5
}

TEST(Isqrt, ExactFloor)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100000; ++i) {
        const std::uint64_t n = rng() >> (rng() % 64);
        const std::uint64_t r = isqrt(n);
        ASSERT_LE(r * r, n);
        ASSERT_TRUE(r == 0xFFFFFFFFull || (r + 1) * (r + 1) > n) << n;
    }
    EXPECT_EQ(isqrt(0), 0u);
    EXPECT_EQ(isqrt(15), 3u);
    EXPECT_EQ(isqrt(16), 4u);
    EXPECT_EQ(isqrt(UINT64_MAX), 0xFFFFFFFFull);
}
