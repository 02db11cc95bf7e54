#include "berndenom/squarefree.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "berndenom/arith.hpp"
#include "berndenom/errors.hpp"
#include "berndenom/prime_sieve.hpp"

namespace berndenom {

namespace {

mpz_class product_of(const std::vector<std::uint32_t>& primes)
{
    mpz_class v = 1;
    for (std::uint32_t p : primes) v *= static_cast<unsigned long>(p);
    return v;
}

}  // namespace

SquarefreeProduct::SquarefreeProduct(Trusted, std::vector<std::uint32_t> primes)
    : primes_(std::move(primes)), value_(product_of(primes_))
{
}

SquarefreeProduct SquarefreeProduct::from_primes(std::vector<std::uint32_t> primes)
{
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (i > 0 && primes[i] <= primes[i - 1])
            throw std::invalid_argument("SquarefreeProduct: primes must be strictly increasing");
        if (!is_prime_u64(primes[i]))
            throw std::invalid_argument("SquarefreeProduct: " + std::to_string(primes[i]) +
                                        " is not prime");
    }
    return SquarefreeProduct(Trusted{}, std::move(primes));
}

SquarefreeProduct SquarefreeProduct::from_value(const mpz_class& value, const PrimeSieve& sieve)
{
    if (value < 1) throw std::invalid_argument("SquarefreeProduct: value must be positive");
    mpz_class rest = value;
    std::vector<std::uint32_t> primes;
    for (std::uint32_t p : sieve.primes()) {
        if (rest == 1) break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= static_cast<unsigned long>(p);
            if (mpz_divisible_ui_p(rest.get_mpz_t(), p))
                throw std::invalid_argument("SquarefreeProduct: " + value.get_str() +
                                            " is divisible by " + std::to_string(p) + "^2");
            primes.push_back(p);
        }
    }
    if (rest != 1)
        throw SizingError("SquarefreeProduct: cofactor " + rest.get_str() +
                          " has no prime factor up to " + std::to_string(sieve.limit()));
    return SquarefreeProduct(Trusted{}, std::move(primes));
}

bool SquarefreeProduct::contains(std::uint32_t p) const noexcept
{
    return std::binary_search(primes_.begin(), primes_.end(), p);
}

bool SquarefreeProduct::divides(const SquarefreeProduct& other) const noexcept
{
    return std::includes(other.primes_.begin(), other.primes_.end(), primes_.begin(), primes_.end());
}

bool SquarefreeProduct::divides(std::uint64_t n) const noexcept
{
    if (n == 0) return true;
    return std::all_of(primes_.begin(), primes_.end(), [n](std::uint32_t p) { return n % p == 0; });
}

SquarefreeProduct gcd(const SquarefreeProduct& a, const SquarefreeProduct& b)
{
    std::vector<std::uint32_t> out;
    std::set_intersection(a.primes_.begin(), a.primes_.end(), b.primes_.begin(), b.primes_.end(),
                          std::back_inserter(out));
    return SquarefreeProduct(SquarefreeProduct::Trusted{}, std::move(out));
}

SquarefreeProduct lcm(const SquarefreeProduct& a, const SquarefreeProduct& b)
{
    std::vector<std::uint32_t> out;
    std::set_union(a.primes_.begin(), a.primes_.end(), b.primes_.begin(), b.primes_.end(),
                   std::back_inserter(out));
    return SquarefreeProduct(SquarefreeProduct::Trusted{}, std::move(out));
}

SquarefreeProduct without(const SquarefreeProduct& a, const SquarefreeProduct& b)
{
    std::vector<std::uint32_t> out;
    std::set_difference(a.primes_.begin(), a.primes_.end(), b.primes_.begin(), b.primes_.end(),
                        std::back_inserter(out));
    return SquarefreeProduct(SquarefreeProduct::Trusted{}, std::move(out));
}

SquarefreeProduct operator*(const SquarefreeProduct& a, const SquarefreeProduct& b)
{
    std::vector<std::uint32_t> out;
    out.reserve(a.primes_.size() + b.primes_.size());
    std::merge(a.primes_.begin(), a.primes_.end(), b.primes_.begin(), b.primes_.end(),
               std::back_inserter(out));
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::invalid_argument("SquarefreeProduct: factors " + a.to_string() + " and " +
                                    b.to_string() + " are not coprime");
    return SquarefreeProduct(SquarefreeProduct::Trusted{}, std::move(out));
}

void SquarefreeBuilder::push(std::uint32_t p)
{
    if (!primes_.empty() && p <= primes_.back())
        throw std::invalid_argument("SquarefreeBuilder: primes must arrive in increasing order");
    primes_.push_back(p);
}

SquarefreeProduct SquarefreeBuilder::build() &&
{
    return SquarefreeProduct(SquarefreeProduct::Trusted{}, std::move(primes_));
}

SquarefreeProduct radical(std::uint64_t n)
{
    if (n == 0) throw std::invalid_argument("radical: n must be positive");
    std::vector<std::uint32_t> primes;
    auto strip = [&](std::uint64_t p) {
        if (n % p != 0) return;
        primes.push_back(static_cast<std::uint32_t>(p));
        do n /= p;
        while (n % p == 0);
    };
    strip(2);
    strip(3);
    for (std::uint64_t p = 5; p * p <= n; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) {
        if (n > 0xFFFFFFFFull)
            throw SizingError("radical: prime factor " + std::to_string(n) + " exceeds 32 bits");
        primes.push_back(static_cast<std::uint32_t>(n));
    }
    return SquarefreeProduct::from_primes(std::move(primes));
}

}  // namespace berndenom
