#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace berndenom {

/// Sum of the base-p digits of n. Throws std::invalid_argument for p < 2.
std::uint64_t digit_sum(std::uint64_t n, std::uint64_t p);

/// True iff floor((n-1)/(p-1)) > floor(n/p). For primes p > sqrt(n) this is
/// equivalent to digit_sum(n, p) >= p.
bool floor_condition(std::uint64_t n, std::uint64_t p);

/// floor((n+1)/lambda) with lambda = 2 for odd n and 3 for even n.
/// Every prime p with digit_sum(n, p) >= p satisfies p <= this bound.
std::uint64_t lambda_prime_bound(std::uint64_t n);

/// n (n-1) ... (n-k+1); (n)_0 = 1 and the product is 0 once it crosses zero.
mpz_class falling_factorial(std::uint64_t n, std::uint64_t k);

/// True iff d divides n (n-1) ... (n-k+1), tested factor by factor.
bool divides_falling_factorial(std::uint64_t d, std::uint64_t n, std::uint64_t k);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// floor(sqrt(n)) computed exactly.
std::uint64_t isqrt(std::uint64_t n);

}  // namespace berndenom
