#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace berndenom {

class PrimeSieve;

/// A squarefree positive integer held both as its sorted list of distinct
/// prime factors and as its exact value. The empty list is the value 1.
///
/// gcd, lcm and quotients work on the prime lists as set operations.
class SquarefreeProduct {
public:
    SquarefreeProduct() : value_(1) {}

    /// Throws std::invalid_argument unless primes is strictly increasing and
    /// every entry is prime.
    static SquarefreeProduct from_primes(std::vector<std::uint32_t> primes);

    /// Factors value over the sieve. Throws std::invalid_argument if value is
    /// not a positive squarefree integer, SizingError if the sieve is too small
    /// to split it completely.
    static SquarefreeProduct from_value(const mpz_class& value, const PrimeSieve& sieve);

    const std::vector<std::uint32_t>& primes() const noexcept { return primes_; }
    const mpz_class& value() const noexcept { return value_; }
    std::size_t omega() const noexcept { return primes_.size(); }
    bool is_one() const noexcept { return primes_.empty(); }
    bool contains(std::uint32_t p) const noexcept;
    bool is_even() const noexcept { return contains(2); }

    bool divides(const SquarefreeProduct& other) const noexcept;
    /// True iff this value divides n.
    bool divides(std::uint64_t n) const noexcept;

    std::string to_string() const { return value_.get_str(); }

    friend SquarefreeProduct gcd(const SquarefreeProduct& a, const SquarefreeProduct& b);
    friend SquarefreeProduct lcm(const SquarefreeProduct& a, const SquarefreeProduct& b);
    /// a / gcd(a, b).
    friend SquarefreeProduct without(const SquarefreeProduct& a, const SquarefreeProduct& b);
    /// Product of coprime factors; throws std::invalid_argument on overlap.
    friend SquarefreeProduct operator*(const SquarefreeProduct& a, const SquarefreeProduct& b);

    friend bool operator==(const SquarefreeProduct& a, const SquarefreeProduct& b) noexcept {
        return a.primes_ == b.primes_;
    }

private:
    struct Trusted {};
    SquarefreeProduct(Trusted, std::vector<std::uint32_t> primes);

    std::vector<std::uint32_t> primes_;
    mpz_class value_;

    friend class SquarefreeBuilder;
};

/// Accumulates primes in increasing order without re-validating each one.
/// Only for callers that enumerate primes from a PrimeSieve.
class SquarefreeBuilder {
public:
    void push(std::uint32_t p);
    SquarefreeProduct build() &&;

private:
    std::vector<std::uint32_t> primes_;
};

/// Squarefree kernel of n >= 1 by trial division; radical(1) = 1.
SquarefreeProduct radical(std::uint64_t n);

}  // namespace berndenom
