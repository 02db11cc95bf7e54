#include "berndenom/scanner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "berndenom/arith.hpp"
#include "berndenom/checkpoint.hpp"
#include "berndenom/denom.hpp"
#include "berndenom/errors.hpp"
#include "berndenom/prime_sieve.hpp"

namespace berndenom {

namespace {

// Digest: sum over n of (count + 1) * B^n mod 2^61 - 1. Additive over
// disjoint ranges, so it does not depend on how a range was chunked.
constexpr std::uint64_t kDigestModulus = (std::uint64_t{1} << 61) - 1;
constexpr std::uint64_t kDigestBase = 0x9E3779B97F4A7C15ull % kDigestModulus;

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod61(std::uint64_t a, std::uint64_t b)
{
    const u128 t = static_cast<u128>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(t & kDigestModulus) + static_cast<std::uint64_t>(t >> 61);
    if (r >= kDigestModulus) r -= kDigestModulus;
    return r;
}

std::uint64_t add_mod61(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r = a + b;
    if (r >= kDigestModulus) r -= kDigestModulus;
    return r;
}

std::uint64_t pow_mod61(std::uint64_t base, std::uint64_t e)
{
    std::uint64_t r = 1;
    while (e != 0) {
        if (e & 1) r = mul_mod61(r, base);
        base = mul_mod61(base, base);
        e >>= 1;
    }
    return r;
}

std::uint64_t digest_of(std::uint64_t lo, const std::vector<std::uint16_t>& counts)
{
    std::uint64_t w = pow_mod61(kDigestBase, lo);
    std::uint64_t acc = 0;
    for (std::uint16_t c : counts) {
        acc = add_mod61(acc, mul_mod61(w, std::uint64_t{c} + 1));
        w = mul_mod61(w, kDigestBase);
    }
    return acc;
}

void check_range(std::uint64_t lo, std::uint64_t hi, const char* who)
{
    if (lo < 1 || lo > hi)
        throw std::invalid_argument(std::string(who) + ": need 1 <= lo <= hi, got [" +
                                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

/// Calls visit(p, n) for every n in [lo, hi] and prime p > sqrt(n) with
/// s_p(n) >= p.
template <class Visit>
void for_each_plus_pair(std::uint64_t lo, std::uint64_t hi, const PrimeSieve& sieve, Visit&& visit)
{
    sieve.require(scan_sieve_limit(hi), "dd_plus scan");
    // Primes with p^2 <= lo only reach n < p^2 <= lo.
    for (std::uint32_t prime : sieve.range(isqrt(lo) + 1, (hi + 1) / 2)) {
        const std::uint64_t p = prime;
        // n = a1 p + a0 lies in [(a1 + 1) p - a1, (a1 + 1) p - 1].
        std::uint64_t a1 = std::max<std::uint64_t>(1, (lo + 1 + p - 1) / p - 1);
        for (; a1 <= p - 1; ++a1) {
            const std::uint64_t top = (a1 + 1) * p - 1;
            const std::uint64_t first = top - a1 + 1;
            if (first > hi) break;
            const std::uint64_t from = std::max(first, lo);
            const std::uint64_t to = std::min(top, hi);
            for (std::uint64_t n = from; n <= to; ++n) visit(prime, n);
        }
    }
}

}  // namespace

std::uint64_t scan_sieve_limit(std::uint64_t hi)
{
    return (hi + 1) / 2;
}

ScanChunk scan_omega_plus(std::uint64_t lo, std::uint64_t hi, const PrimeSieve& sieve)
{
    check_range(lo, hi, "scan_omega_plus");
    ScanChunk chunk;
    chunk.lo = lo;
    chunk.hi = hi;
    chunk.omega_counts.assign(hi - lo + 1, 0);
    std::uint16_t* counts = chunk.omega_counts.data();
    for_each_plus_pair(lo, hi, sieve, [counts, lo](std::uint32_t, std::uint64_t n) {
        std::uint16_t& c = counts[n - lo];
        // omega < sqrt(n) keeps this in range for every n < 2^32.
        if (c == std::numeric_limits<std::uint16_t>::max())
            throw std::overflow_error("scan_omega_plus: counter overflow at n = " + std::to_string(n));
        ++c;
    });
    for (std::size_t i = 0; i < chunk.omega_counts.size(); ++i)
        if (chunk.omega_counts[i] == 0) chunk.exceptional.push_back(lo + i);
    chunk.checksum = digest_of(lo, chunk.omega_counts);
    return chunk;
}

ScanChunk merge(const ScanChunk& a, const ScanChunk& b)
{
    if (b.lo != a.hi + 1)
        throw std::invalid_argument("merge: chunks [" + std::to_string(a.lo) + ", " +
                                    std::to_string(a.hi) + "] and [" + std::to_string(b.lo) + ", " +
                                    std::to_string(b.hi) + "] are not adjacent");
    ScanChunk out = a;
    out.hi = b.hi;
    out.omega_counts.insert(out.omega_counts.end(), b.omega_counts.begin(), b.omega_counts.end());
    out.exceptional.insert(out.exceptional.end(), b.exceptional.begin(), b.exceptional.end());
    out.checksum = add_mod61(a.checksum, b.checksum);
    return out;
}

ChunkSummary summarize(const ScanChunk& chunk)
{
    ChunkSummary s;
    s.lo = chunk.lo;
    s.hi = chunk.hi;
    s.exceptional = chunk.exceptional;
    s.digest = chunk.checksum;
    for (std::size_t i = 0; i < chunk.omega_counts.size(); ++i) {
        const std::uint64_t n = chunk.lo + i;
        const std::uint32_t w = chunk.omega_counts[i];
        s.omega_sum += w;
        if (s.omega_max_at == 0 || w > s.omega_max) {
            s.omega_max = w;
            s.omega_max_at = n;
        }
        if (std::uint64_t{w} * w >= n) ++s.bound_violations;
    }
    return s;
}

ChunkSummary combine(const ChunkSummary& a, const ChunkSummary& b)
{
    if (b.lo != a.hi + 1)
        throw std::invalid_argument("combine: summaries are not adjacent");
    ChunkSummary out = a;
    out.hi = b.hi;
    out.exceptional.insert(out.exceptional.end(), b.exceptional.begin(), b.exceptional.end());
    out.omega_sum += b.omega_sum;
    if (b.omega_max > a.omega_max) {
        out.omega_max = b.omega_max;
        out.omega_max_at = b.omega_max_at;
    }
    out.bound_violations += b.bound_violations;
    out.digest = add_mod61(a.digest, b.digest);
    return out;
}

ScanReport run_scan(std::uint64_t limit, const PrimeSieve& sieve, const ScanOptions& options)
{
    if (limit < 1) throw std::invalid_argument("run_scan: limit must be >= 1");
    if (options.chunk_size < 1) throw std::invalid_argument("run_scan: chunk size must be >= 1");
    sieve.require(scan_sieve_limit(limit), "run_scan");

    const std::uint64_t chunk_size = options.chunk_size;
    const std::size_t total = static_cast<std::size_t>((limit + chunk_size - 1) / chunk_size);
    const CheckpointConfig config{limit, chunk_size};

    CheckpointState state;
    if (options.checkpoint) {
        state = checkpoint_resume(*options.checkpoint, config, options.warnings);
        for (const auto& [lo, s] : state.chunks) {
            const bool aligned = (lo - 1) % chunk_size == 0 &&
                                 s.hi == std::min(limit, lo + chunk_size - 1);
            if (!aligned)
                throw CheckpointError("checkpoint record [" + std::to_string(s.lo) + ", " +
                                      std::to_string(s.hi) + "] does not match the chunk grid");
        }
        state.complete = state.chunks.size() == total;
        checkpoint_save(*options.checkpoint, config, state);
    }

    std::vector<std::uint64_t> pending;
    for (std::size_t i = 0; i < total; ++i) {
        const std::uint64_t lo = 1 + i * chunk_size;
        if (!state.chunks.contains(lo)) pending.push_back(lo);
    }
    std::size_t budget = pending.size();
    if (options.max_new_chunks) budget = std::min(budget, *options.max_new_chunks);

    std::optional<CheckpointWriter> writer;
    if (options.checkpoint && budget > 0) writer.emplace(*options.checkpoint, config);

    std::mutex mutex;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    auto work = [&] {
        try {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= budget) return;
                const std::uint64_t lo = pending[i];
                const std::uint64_t hi = std::min(limit, lo + chunk_size - 1);
                ChunkSummary s = summarize(scan_omega_plus(lo, hi, sieve));
                std::lock_guard lock(mutex);
                if (writer) writer->append(s);
                state.chunks.emplace(lo, std::move(s));
            }
        } catch (...) {
            std::lock_guard lock(mutex);
            if (!failure) failure = std::current_exception();
            next.store(budget);
        }
    };

    const unsigned workers = static_cast<unsigned>(
        std::max<std::size_t>(1, std::min<std::size_t>(std::max(1u, options.threads), budget)));
    if (budget > 0) {
        if (workers == 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        }
    }
    if (failure) std::rethrow_exception(failure);

    ScanReport report;
    report.limit = limit;
    report.chunks_total = total;
    report.chunks_done = state.chunks.size();
    report.complete = report.chunks_done == total;
    if (writer && report.complete) writer->finish();

    // Fold the longest contiguous prefix; an interrupted run may have gaps.
    bool first = true;
    for (const auto& [lo, s] : state.chunks) {
        if (first) {
            if (lo != 1) break;
            report.totals = s;
            first = false;
        } else if (lo == report.totals.hi + 1) {
            report.totals = combine(report.totals, s);
        } else {
            break;
        }
    }
    return report;
}

SetReport find_sets(std::uint64_t k, std::uint64_t limit, const PrimeSieve& sieve)
{
    if (k < 1) throw std::invalid_argument("find_sets: k must be >= 1");
    if (limit < 1) throw std::invalid_argument("find_sets: limit must be >= 1");
    SetReport report;
    report.kind = SetKind::integral_derivative;
    report.k = k;
    report.limit = limit;

    // n <= k: the k-th derivative is 0 or the constant n!.
    for (std::uint64_t n = 1; n <= std::min(k, limit); ++n) {
        ++report.prefilter_survivors;
        if (db_k(n, k, sieve).is_one()) report.members.push_back(n);
    }
    if (limit <= k) return report;

    // Remaining n correspond to m = n - k + 1 in [2, limit - k + 1].
    const std::uint64_t m_max = limit - k + 1;
    constexpr std::uint64_t kBlock = std::uint64_t{1} << 20;
    std::vector<std::uint8_t> rejected;
    for (std::uint64_t lo = 2; lo <= m_max; lo += kBlock) {
        const std::uint64_t hi = std::min(m_max, lo + kBlock - 1);
        rejected.assign(hi - lo + 1, 0);
        for_each_plus_pair(lo, hi, sieve, [&](std::uint32_t p, std::uint64_t m) {
            std::uint8_t& r = rejected[m - lo];
            if (r) return;
            // (n)_{k-1} = (m + k - 1) ... (m + 1)
            for (std::uint64_t i = 1; i < k; ++i)
                if ((m + i) % p == 0) return;
            r = 1;
        });
        for (std::uint64_t m = lo; m <= hi; ++m) {
            if (rejected[m - lo]) continue;
            ++report.prefilter_survivors;
            const std::uint64_t n = m + k - 1;
            if (db_k(n, k, sieve).is_one()) report.members.push_back(n);
        }
    }
    return report;
}

SetReport find_rad_set(std::uint64_t limit, const PrimeSieve& sieve)
{
    if (limit < 1) throw std::invalid_argument("find_rad_set: limit must be >= 1");
    SetReport report;
    report.kind = SetKind::rad;
    report.limit = limit;

    constexpr std::uint64_t kBlock = std::uint64_t{1} << 20;
    std::vector<std::uint8_t> rejected;
    for (std::uint64_t lo = 1; lo <= limit; lo += kBlock) {
        const std::uint64_t hi = std::min(limit, lo + kBlock - 1);
        rejected.assign(hi - lo + 1, 0);
        for_each_plus_pair(lo, hi, sieve, [&](std::uint32_t p, std::uint64_t n) {
            if ((n + 1) % p != 0) rejected[n - lo] = 1;
        });
        for (std::uint64_t n = lo; n <= hi; ++n) {
            if (rejected[n - lo]) continue;
            ++report.prefilter_survivors;
            if (dd(n, sieve) == radical(n + 1)) report.members.push_back(n);
        }
    }
    return report;
}

KappaStats kappa_ratio(const ScanChunk& chunk, std::uint64_t lo, std::uint64_t hi)
{
    if (lo < 2 || lo > hi) throw std::invalid_argument("kappa_ratio: need 2 <= lo <= hi");
    if (lo < chunk.lo || hi > chunk.hi) throw std::invalid_argument("kappa_ratio: chunk does not cover range");
    KappaStats st;
    st.lo = lo;
    st.hi = hi;
    st.min = std::numeric_limits<double>::infinity();
    st.max = -std::numeric_limits<double>::infinity();
    double sum = 0;
    for (std::uint64_t n = lo; n <= hi; ++n) {
        const double x = static_cast<double>(n);
        const double r = chunk.omega(n) * std::log(x) / std::sqrt(x);
        sum += r;
        st.min = std::min(st.min, r);
        st.max = std::max(st.max, r);
    }
    st.mean = sum / static_cast<double>(hi - lo + 1);
    return st;
}

KappaStats kappa_ratio(std::uint64_t lo, std::uint64_t hi, const PrimeSieve& sieve)
{
    if (lo < 2 || lo > hi) throw std::invalid_argument("kappa_ratio: need 2 <= lo <= hi");
    return kappa_ratio(scan_omega_plus(lo, hi, sieve), lo, hi);
}

}  // namespace berndenom
