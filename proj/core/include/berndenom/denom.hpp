#pragma once

// Denominators of Bernoulli numbers, Bernoulli polynomials, their derivatives
// and the sum-of-powers polynomials, computed from prime/digit-sum conditions
// alone. No rational arithmetic happens here; see oracle.hpp for that.
//
// Notation used in names:
//   dd(n)            denom(B_n(x) - B_n) = prod of p with s_p(n) >= p
//   dd_minus/plus    the part of dd(n) over primes below / above sqrt(n)
//   dd_shared        primes p | n with s_p(n) >= p
//   dd_coprime       primes p not dividing n with s_p(n) >= p
//   dd_complement    primes p | n with s_p(n) < p
//   dn(n)            denom(B_n)
//   db(n)            denom(B_n(x))
//   db_k(n, k)       denom of the k-th derivative of B_n(x)
//   ds(n)            denom(S_n(x)), S_n(m) = 0^n + ... + (m-1)^n
//
// Every function taking a PrimeSieve throws SizingError when the sieve does
// not reach the primes it needs; required_sieve_limit() says how far that is.

#include <cstdint>

#include <gmpxx.h>

#include "berndenom/squarefree.hpp"

namespace berndenom {

class PrimeSieve;

struct SqrtSplit {
    SquarefreeProduct minus;
    SquarefreeProduct plus;
};

struct DivisibilitySplit {
    SquarefreeProduct shared;
    SquarefreeProduct coprime;
    SquarefreeProduct complement;
};

/// Everything attached to one index n >= 1.
struct DenomProfile {
    std::uint64_t n = 0;
    SquarefreeProduct dd;
    SquarefreeProduct dd_minus;
    SquarefreeProduct dd_plus;
    SquarefreeProduct dd_shared;
    SquarefreeProduct dd_coprime;
    SquarefreeProduct dd_complement;
    SquarefreeProduct dn;
    SquarefreeProduct db;
    mpz_class ds;
    SquarefreeProduct rad_n;
    SquarefreeProduct rad_n1;
    std::size_t omega_plus = 0;
    bool in_rad_set = false;  // dd == rad(n + 1)
};

/// Sieve limit sufficient for every operation below at indices up to n.
std::uint64_t required_sieve_limit(std::uint64_t n);

SquarefreeProduct dd(std::uint64_t n, const PrimeSieve& sieve);
SqrtSplit dd_split_sqrt(std::uint64_t n, const PrimeSieve& sieve);
DivisibilitySplit dd_split_divisibility(std::uint64_t n, const PrimeSieve& sieve);

/// von Staudt-Clausen for even n; dn(1) = 2 and dn(n) = 1 for odd n >= 3.
SquarefreeProduct dn(std::uint64_t n);

/// denom(B_n(x)) as dd_coprime(n+1) * rad(n+1); db(0) = 1.
SquarefreeProduct db(std::uint64_t n, const PrimeSieve& sieve);

// The other closed forms of db(n). They are not used by db() itself and
// exist so the identities can be checked against each other.
SquarefreeProduct db_via_complement(std::uint64_t n, const PrimeSieve& sieve);  // dd(n+1) * dd_complement(n+1)
SquarefreeProduct db_via_lcm_rad(std::uint64_t n, const PrimeSieve& sieve);     // lcm(dd(n+1), rad(n+1))
SquarefreeProduct db_via_lcm_dn(std::uint64_t n, const PrimeSieve& sieve);      // lcm(dd(n), dn(n)), n >= 1

/// (n + 1) * dd(n + 1); not squarefree in general.
mpz_class ds(std::uint64_t n, const PrimeSieve& sieve);

/// Denominator of the k-th derivative of B_n(x), k >= 1. Equal to 1 for
/// n <= k, otherwise dd_coprime(m) with every prime dividing (n)_{k-1}
/// removed, where m = n - k + 1.
SquarefreeProduct db_k(std::uint64_t n, std::uint64_t k, const PrimeSieve& sieve);

/// db(n-k) / gcd(db(n-k), (n)_k), evaluated on exact integer values.
SquarefreeProduct db_k_via_db(std::uint64_t n, std::uint64_t k, const PrimeSieve& sieve);

/// prod of p not dividing (n)_k with s_p(n-k+1) >= p.
SquarefreeProduct db_k_via_product(std::uint64_t n, std::uint64_t k, const PrimeSieve& sieve);

/// Number of primes p > sqrt(n) with floor((n-1)/(p-1)) > floor(n/p).
std::size_t omega_dd_plus(std::uint64_t n, const PrimeSieve& sieve);

DenomProfile profile(std::uint64_t n, const PrimeSieve& sieve);

}  // namespace berndenom
