#include "berndenom/denom.hpp"

#include <stdexcept>
#include <string>

#include "berndenom/arith.hpp"
#include "berndenom/prime_sieve.hpp"

namespace berndenom {

namespace {

void require_positive(std::uint64_t n, const char* who)
{
    if (n == 0) throw std::invalid_argument(std::string(who) + ": index must be >= 1");
}

/// Primes that can satisfy s_p(n) >= p.
std::span<const std::uint32_t> candidate_primes(std::uint64_t n, const PrimeSieve& sieve,
                                                const char* who)
{
    const std::uint64_t bound = lambda_prime_bound(n);
    sieve.require(bound, who);
    return sieve.range(2, bound);
}

bool digit_condition(std::uint64_t n, std::uint32_t p) { return digit_sum(n, p) >= p; }

}  // namespace

std::uint64_t required_sieve_limit(std::uint64_t n)
{
    // db and ds look at index n + 1; lambda_prime_bound(n + 1) <= (n + 2) / 2.
    return (n + 2) / 2;
}

SquarefreeProduct dd(std::uint64_t n, const PrimeSieve& sieve)
{
    require_positive(n, "dd");
    SquarefreeBuilder out;
    for (std::uint32_t p : candidate_primes(n, sieve, "dd"))
        if (digit_condition(n, p)) out.push(p);
    return std::move(out).build();
}

SqrtSplit dd_split_sqrt(std::uint64_t n, const PrimeSieve& sieve)
{
    require_positive(n, "dd_split_sqrt");
    SquarefreeBuilder minus, plus;
    for (std::uint32_t p : candidate_primes(n, sieve, "dd_split_sqrt")) {
        if (!digit_condition(n, p)) continue;
        const std::uint64_t pp = std::uint64_t{p} * p;
        // pp == n would need s_p(n) = 1 < p, so it never reaches here.
        if (pp < n)
            minus.push(p);
        else
            plus.push(p);
    }
    return {std::move(minus).build(), std::move(plus).build()};
}

DivisibilitySplit dd_split_divisibility(std::uint64_t n, const PrimeSieve& sieve)
{
    require_positive(n, "dd_split_divisibility");
    SquarefreeBuilder shared, coprime;
    for (std::uint32_t p : candidate_primes(n, sieve, "dd_split_divisibility")) {
        if (!digit_condition(n, p)) continue;
        if (n % p == 0)
            shared.push(p);
        else
            coprime.push(p);
    }
    DivisibilitySplit out{std::move(shared).build(), std::move(coprime).build(), {}};
    out.complement = without(radical(n), out.shared);
    return out;
}

SquarefreeProduct dn(std::uint64_t n)
{
    require_positive(n, "dn");
    if (n == 1) return SquarefreeProduct::from_primes({2});
    if (n & 1) return {};
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    SquarefreeBuilder out;
    auto visit = [&](std::uint64_t d) {
        if (is_prime_u64(d + 1)) out.push(static_cast<std::uint32_t>(d + 1));
    };
    for (std::uint64_t d : small) visit(d);
    for (auto it = large.rbegin(); it != large.rend(); ++it) visit(*it);
    return std::move(out).build();
}

SquarefreeProduct db(std::uint64_t n, const PrimeSieve& sieve)
{
    return dd_split_divisibility(n + 1, sieve).coprime * radical(n + 1);
}

SquarefreeProduct db_via_complement(std::uint64_t n, const PrimeSieve& sieve)
{
    return dd(n + 1, sieve) * dd_split_divisibility(n + 1, sieve).complement;
}

SquarefreeProduct db_via_lcm_rad(std::uint64_t n, const PrimeSieve& sieve)
{
    return lcm(dd(n + 1, sieve), radical(n + 1));
}

SquarefreeProduct db_via_lcm_dn(std::uint64_t n, const PrimeSieve& sieve)
{
    require_positive(n, "db_via_lcm_dn");
    return lcm(dd(n, sieve), dn(n));
}

mpz_class ds(std::uint64_t n, const PrimeSieve& sieve)
{
    return dd(n + 1, sieve).value() * static_cast<unsigned long>(n + 1);
}

SquarefreeProduct db_k(std::uint64_t n, std::uint64_t k, const PrimeSieve& sieve)
{
    require_positive(n, "db_k");
    require_positive(k, "db_k");
    if (n <= k) return {};
    const std::uint64_t m = n - k + 1;
    SquarefreeBuilder out;
    const SquarefreeProduct coprime = dd_split_divisibility(m, sieve).coprime;
    for (std::uint32_t p : coprime.primes())
        if (!divides_falling_factorial(p, n, k - 1)) out.push(p);
    return std::move(out).build();
}

SquarefreeProduct db_k_via_db(std::uint64_t n, std::uint64_t k, const PrimeSieve& sieve)
{
    require_positive(n, "db_k_via_db");
    require_positive(k, "db_k_via_db");
    if (n < k) return {};
    const SquarefreeProduct whole = db(n - k, sieve);
    mpz_class g;
    const mpz_class ff = falling_factorial(n, k);
    mpz_gcd(g.get_mpz_t(), whole.value().get_mpz_t(), ff.get_mpz_t());
    const mpz_class q = whole.value() / g;
    // q divides db(n - k), so its prime list is a sublist of that one.
    SquarefreeBuilder out;
    for (std::uint32_t p : whole.primes())
        if (mpz_divisible_ui_p(q.get_mpz_t(), p)) out.push(p);
    SquarefreeProduct result = std::move(out).build();
    if (result.value() != q) throw std::logic_error("db_k_via_db: quotient is not squarefree");
    return result;
}

SquarefreeProduct db_k_via_product(std::uint64_t n, std::uint64_t k, const PrimeSieve& sieve)
{
    require_positive(n, "db_k_via_product");
    require_positive(k, "db_k_via_product");
    if (n < k) return {};
    const std::uint64_t m = n - k + 1;
    SquarefreeBuilder out;
    for (std::uint32_t p : candidate_primes(m, sieve, "db_k_via_product"))
        if (digit_condition(m, p) && !divides_falling_factorial(p, n, k)) out.push(p);
    return std::move(out).build();
}

std::size_t omega_dd_plus(std::uint64_t n, const PrimeSieve& sieve)
{
    require_positive(n, "omega_dd_plus");
    const std::uint64_t bound = lambda_prime_bound(n);
    sieve.require(bound, "omega_dd_plus");
    std::size_t count = 0;
    for (std::uint32_t p : sieve.range(isqrt(n) + 1, bound))
        if (floor_condition(n, p)) ++count;
    return count;
}

DenomProfile profile(std::uint64_t n, const PrimeSieve& sieve)
{
    require_positive(n, "profile");
    DenomProfile out;
    out.n = n;
    out.dd = dd(n, sieve);
    auto [minus, plus] = dd_split_sqrt(n, sieve);
    out.dd_minus = std::move(minus);
    out.dd_plus = std::move(plus);
    auto split = dd_split_divisibility(n, sieve);
    out.dd_shared = std::move(split.shared);
    out.dd_coprime = std::move(split.coprime);
    out.dd_complement = std::move(split.complement);
    out.dn = dn(n);
    out.db = db(n, sieve);
    out.ds = ds(n, sieve);
    out.rad_n = radical(n);
    out.rad_n1 = radical(n + 1);
    out.omega_plus = omega_dd_plus(n, sieve);
    out.in_rad_set = out.dd == out.rad_n1;
    return out;
}

}  // namespace berndenom
