#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace berndenom {

/// Immutable table of all primes up to a limit. Safe to share across threads.
class PrimeSieve {
public:
    /// Default ceiling on the estimated table footprint.
    static constexpr std::size_t kDefaultMemoryBudget = std::size_t{1} << 30;

    /// Throws SizingError if limit >= 2^32 or the estimated footprint
    /// exceeds memory_budget bytes.
    explicit PrimeSieve(std::uint64_t limit,
                        std::size_t memory_budget = kDefaultMemoryBudget);

    std::uint64_t limit() const noexcept { return limit_; }
    std::span<const std::uint32_t> primes() const noexcept { return primes_; }
    std::size_t size() const noexcept { return primes_.size(); }

    /// Membership for n <= limit(); throws SizingError beyond it.
    bool is_prime(std::uint64_t n) const;

    /// Primes p with lo <= p <= hi, clipped to the table.
    std::span<const std::uint32_t> range(std::uint64_t lo, std::uint64_t hi) const noexcept;

    /// Throws SizingError unless every prime <= bound is in the table.
    void require(std::uint64_t bound, const char* who) const;

    /// Estimated bytes a table up to limit would occupy.
    static std::size_t estimated_bytes(std::uint64_t limit) noexcept;

private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> primes_;
};

}  // namespace berndenom
