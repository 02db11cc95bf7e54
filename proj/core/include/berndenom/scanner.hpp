#pragma once

// Range scans over omega(dd_plus(n)), the number of primes p > sqrt(n) with
// s_p(n) >= p, and the exceptional-set searches built on top of it.
//
// The scans enumerate per prime instead of per index: for p > sqrt(n) the
// base-p expansion is n = a1 p + a0, so s_p(n) >= p holds exactly for
// 1 <= a1 <= p - 1 and p - a1 <= a0 <= p - 1. Each prime therefore touches
// only the indices it actually divides into dd_plus, and total work is
// proportional to the sum of the counts rather than to (range x primes).

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace berndenom {

class PrimeSieve;

/// Per-index counts for one inclusive range [lo, hi].
struct ScanChunk {
    std::uint64_t lo = 1;
    std::uint64_t hi = 0;
    std::vector<std::uint16_t> omega_counts;  // omega_counts[n - lo]
    std::vector<std::uint64_t> exceptional;  // n with a zero count
    std::uint64_t checksum = 0;              // position-weighted digest of the counts

    std::uint16_t omega(std::uint64_t n) const { return omega_counts.at(n - lo); }
    friend bool operator==(const ScanChunk&, const ScanChunk&) = default;
};

/// Sieve limit scan_omega_plus needs to cover [lo, hi].
std::uint64_t scan_sieve_limit(std::uint64_t hi);

/// Throws std::invalid_argument unless 1 <= lo <= hi, SizingError when the
/// sieve stops below (hi + 1) / 2.
ScanChunk scan_omega_plus(std::uint64_t lo, std::uint64_t hi, const PrimeSieve& sieve);

/// Concatenates adjacent chunks; b.lo must equal a.hi + 1.
ScanChunk merge(const ScanChunk& a, const ScanChunk& b);

/// The part of a chunk that is kept once its counts are dropped. Summaries of
/// adjacent ranges combine into the summary of their union.
struct ChunkSummary {
    std::uint64_t lo = 1;
    std::uint64_t hi = 0;
    std::vector<std::uint64_t> exceptional;
    std::uint64_t omega_sum = 0;
    std::uint32_t omega_max = 0;
    std::uint64_t omega_max_at = 0;  // smallest n attaining omega_max
    std::uint64_t bound_violations = 0;  // n with omega^2 >= n
    std::uint64_t digest = 0;

    friend bool operator==(const ChunkSummary&, const ChunkSummary&) = default;
};

ChunkSummary summarize(const ScanChunk& chunk);
ChunkSummary combine(const ChunkSummary& a, const ChunkSummary& b);

struct ScanOptions {
    unsigned threads = 1;
    std::uint64_t chunk_size = std::uint64_t{1} << 20;
    std::optional<std::filesystem::path> checkpoint;
    /// Stop after this many newly computed chunks. Used to simulate an
    /// interrupted run; the report then has complete == false.
    std::optional<std::size_t> max_new_chunks;
    std::ostream* warnings = nullptr;
};

struct ScanReport {
    std::uint64_t limit = 0;
    bool complete = false;
    std::size_t chunks_total = 0;
    std::size_t chunks_done = 0;
    ChunkSummary totals;  // over every finished chunk, in index order

    /// Largest exceptional n, or 0 when there is none.
    std::uint64_t max_exceptional() const
    {
        return totals.exceptional.empty() ? 0 : totals.exceptional.back();
    }
    friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

/// Scans [1, limit] in chunks on a worker pool. With a checkpoint path the
/// finished chunks are logged and a later call with the same path, limit and
/// chunk size resumes from them. Throws CheckpointError on a corrupt or
/// mismatched checkpoint.
ScanReport run_scan(std::uint64_t limit, const PrimeSieve& sieve, const ScanOptions& options = {});

enum class SetKind {
    integral_derivative,  // n with denom of the k-th derivative of B_n(x) equal to 1
    rad,                  // n with dd(n) = rad(n + 1)
};

struct SetReport {
    SetKind kind = SetKind::integral_derivative;
    std::uint64_t k = 0;
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> members;
    std::size_t prefilter_survivors = 0;
};

/// {n <= limit : db_k(n, k) = 1}. Indices with m = n - k + 1 are kept by the
/// prefilter only when every prime of dd_plus(m) divides (n)_{k-1}; survivors
/// are then confirmed with db_k.
SetReport find_sets(std::uint64_t k, std::uint64_t limit, const PrimeSieve& sieve);

/// {n <= limit : dd(n) = rad(n + 1)}, prefiltered on dd_plus(n) | n + 1.
SetReport find_rad_set(std::uint64_t limit, const PrimeSieve& sieve);

struct KappaStats {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    double mean = 0;
    double min = 0;
    double max = 0;
};

/// Statistics of omega(dd_plus(n)) * ln(n) / sqrt(n) over [lo, hi], lo >= 2.
KappaStats kappa_ratio(std::uint64_t lo, std::uint64_t hi, const PrimeSieve& sieve);

/// Same statistic from an already computed chunk covering [lo, hi].
KappaStats kappa_ratio(const ScanChunk& chunk, std::uint64_t lo, std::uint64_t hi);

}  // namespace berndenom
