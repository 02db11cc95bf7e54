#include "berndenom/prime_sieve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "berndenom/arith.hpp"
#include "berndenom/errors.hpp"

namespace berndenom {

namespace {

constexpr std::uint64_t kSegmentBytes = std::uint64_t{1} << 18;

}  // namespace

std::size_t PrimeSieve::estimated_bytes(std::uint64_t limit) noexcept
{
    if (limit < 17) return 64;
    const double x = static_cast<double>(limit);
    // pi(x) < 1.25506 x / ln x (Rosser-Schoenfeld), plus one odd-only segment.
    const double count = 1.25506 * x / std::log(x);
    return static_cast<std::size_t>(count * sizeof(std::uint32_t)) + kSegmentBytes;
}

PrimeSieve::PrimeSieve(std::uint64_t limit, std::size_t memory_budget) : limit_(limit)
{
    if (limit > 0xFFFFFFFFull)
        throw SizingError("prime sieve limit " + std::to_string(limit) + " exceeds 2^32 - 1");
    if (estimated_bytes(limit) > memory_budget)
        throw SizingError("prime sieve up to " + std::to_string(limit) + " needs about " +
                          std::to_string(estimated_bytes(limit)) + " bytes, budget is " +
                          std::to_string(memory_budget));
    if (limit < 2) return;

    primes_.reserve(static_cast<std::size_t>(estimated_bytes(limit) / sizeof(std::uint32_t)));
    primes_.push_back(2);

    // Base primes up to sqrt(limit) with a plain sieve.
    const std::uint64_t root = isqrt(limit);
    std::vector<std::uint32_t> base;
    {
        std::vector<bool> composite(root + 1, false);
        for (std::uint64_t i = 3; i <= root; i += 2) {
            if (composite[i]) continue;
            base.push_back(static_cast<std::uint32_t>(i));
            for (std::uint64_t j = i * i; j <= root; j += 2 * i) composite[j] = true;
        }
    }

    // Odd-only segments: byte i of a segment stands for lo + 2i.
    std::vector<std::uint8_t> segment(kSegmentBytes);
    for (std::uint64_t lo = 3; lo <= limit; lo += 2 * kSegmentBytes) {
        const std::uint64_t hi = std::min(limit, lo + 2 * kSegmentBytes - 1);
        const std::size_t count = static_cast<std::size_t>((hi - lo) / 2 + 1);
        std::fill_n(segment.begin(), count, std::uint8_t{1});
        for (std::uint32_t p : base) {
            const std::uint64_t pp = std::uint64_t{p} * p;
            if (pp > hi) break;
            std::uint64_t start = std::max(pp, (lo + p - 1) / p * p);
            if ((start & 1) == 0) start += p;
            for (std::uint64_t j = (start - lo) / 2; j < count; j += p) segment[j] = 0;
        }
        for (std::size_t i = 0; i < count; ++i)
            if (segment[i]) primes_.push_back(static_cast<std::uint32_t>(lo + 2 * i));
    }
    primes_.shrink_to_fit();
}

bool PrimeSieve::is_prime(std::uint64_t n) const
{
    if (n > limit_)
        throw SizingError("is_prime(" + std::to_string(n) + ") beyond sieve limit " +
                          std::to_string(limit_));
    return std::binary_search(primes_.begin(), primes_.end(), static_cast<std::uint32_t>(n));
}

std::span<const std::uint32_t> PrimeSieve::range(std::uint64_t lo, std::uint64_t hi) const noexcept
{
    if (lo > hi || lo > limit_) return {};
    auto first = std::lower_bound(primes_.begin(), primes_.end(), lo);
    auto last = hi >= limit_ ? primes_.end() : std::upper_bound(first, primes_.end(), hi);
    return {first, last};
}

void PrimeSieve::require(std::uint64_t bound, const char* who) const
{
    if (bound > limit_)
        throw SizingError(std::string(who) + " needs primes up to " + std::to_string(bound) +
                          " but the sieve stops at " + std::to_string(limit_));
}

}  // namespace berndenom
