#include "berndenom/arith.hpp"

#include <bit>
#include <stdexcept>

namespace berndenom {

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t p)
{
    if (p < 2) throw std::invalid_argument("digit_sum: base must be at least 2");
    std::uint64_t s = 0;
    while (n != 0) {
        s += n % p;
        n /= p;
    }
    return s;
}

bool floor_condition(std::uint64_t n, std::uint64_t p)
{
    return (n - 1) / (p - 1) > n / p;
}

std::uint64_t lambda_prime_bound(std::uint64_t n)
{
    return (n + 1) / ((n & 1) ? 2 : 3);
}

mpz_class falling_factorial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) return 0;
    mpz_class r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r *= static_cast<unsigned long>(n - i);
    return r;
}

bool divides_falling_factorial(std::uint64_t d, std::uint64_t n, std::uint64_t k)
{
    if (k > n) return true;  // (n)_k = 0
    if (d == 1) return true;
    // d is only ever a prime here, so it divides the product iff it divides a factor.
    for (std::uint64_t i = 0; i < k; ++i)
        if ((n - i) % d == 0) return true;
    return false;
}

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1;
    a %= m;
    while (e != 0) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % p == 0) return n == p;
    }
    const int s = std::countr_zero(n - 1);
    const std::uint64_t d = (n - 1) >> s;
    // These twelve bases are exact below 3.3e24.
    for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t isqrt(std::uint64_t n)
{
    std::uint64_t r = 0;
    for (int shift = 31; shift >= 0; --shift) {
        const std::uint64_t c = r | (std::uint64_t{1} << shift);
        if (c * c <= n && c <= 0xFFFFFFFFu) r = c;
    }
    return r;
}

}  // namespace berndenom
