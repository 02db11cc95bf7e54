// Acceptance suite: one line per criterion, exit status 1 if any fails.
//
// Set BERNDENOM_ACCEPTANCE_EXTENDED=1 to repeat the exceptional-index scan up to 10^7.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "berndenom/arith.hpp"
#include "berndenom/denom.hpp"
#include "berndenom/oracle.hpp"
#include "berndenom/prime_sieve.hpp"
#include "berndenom/scanner.hpp"
#include "brute_force.hpp"
#include "cli.hpp"

using namespace berndenom;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool passed = true;
    std::string note;
};

int failures = 0;

void criterion(const std::string& id, const std::string& title, double time_limit_s,
               const std::function<Outcome()>& body)
{
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs >= time_limit_s) {
        o.passed = false;
        o.note += (o.note.empty() ? "" : "; ") + std::string("over time limit");
    }
    if (!o.passed) ++failures;
    std::printf("[%s] %s %s (%.2f s, limit %.0f s)%s%s\n", o.passed ? "PASS" : "FAIL", id.c_str(), title.c_str(),
                secs, time_limit_s, o.note.empty() ? "" : ": ", o.note.c_str());
    std::fflush(stdout);
}

std::string cli_out(std::vector<std::string> args, int* code = nullptr)
{
    args.insert(args.begin(), "berndenom");
    std::ostringstream out, err;
    const int c = cli::run(args, out, err);
    if (code) *code = c;
    return out.str();
}

std::vector<std::uint64_t> first_column(const std::string& csv)
{
    std::vector<std::uint64_t> out;
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) out.push_back(std::stoull(line.substr(0, line.find(','))));
    return out;
}

std::vector<std::uint64_t> range(std::uint64_t a, std::uint64_t b)
{
    std::vector<std::uint64_t> v;
    for (std::uint64_t i = a; i <= b; ++i) v.push_back(i);
    return v;
}

std::vector<std::uint64_t> concat(std::initializer_list<std::vector<std::uint64_t>> parts)
{
    std::vector<std::uint64_t> v;
    for (const auto& p : parts) v.insert(v.end(), p.begin(), p.end());
    return v;
}

unsigned threads()
{
    if (const char* env = std::getenv("BERNDENOM_THREADS")) return std::max(1, std::atoi(env));
    return std::max(1u, std::thread::hardware_concurrency());
}

SquarefreeProduct radical_of(const mpz_class& v, const PrimeSieve& sieve)
{
    mpz_class rest = v;
    SquarefreeBuilder out;
    for (std::uint32_t p : sieve.primes()) {
        if (rest == 1) break;
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
        out.push(p);
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) rest /= static_cast<unsigned long>(p);
    }
    if (rest != 1) throw std::runtime_error("radical_of: sieve too small");
    return std::move(out).build();
}

}  // namespace

int main()
{
    std::printf("hardware threads: %u, scan threads: %u\n", std::thread::hardware_concurrency(), threads());

    criterion("AC1", "golden sequences dd, dn, db (n=1..10) and ds (n=0..9)", 1.0, [] {
        const PrimeSieve sieve(64);
        std::vector<std::string> d, n, b, s;
        for (std::uint64_t i = 1; i <= 10; ++i) {
            d.push_back(dd(i, sieve).to_string());
            n.push_back(dn(i).to_string());
            b.push_back(db(i, sieve).to_string());
            s.push_back(ds(i - 1, sieve).get_str());
        }
        using S = std::vector<std::string>;
        const bool ok = d == S{"1", "1", "2", "1", "6", "2", "6", "3", "10", "2"} &&
                        n == S{"2", "6", "1", "30", "1", "42", "1", "30", "1", "66"} &&
                        b == S{"2", "6", "2", "30", "6", "42", "6", "30", "10", "66"} &&
                        s == S{"1", "2", "6", "4", "30", "12", "42", "24", "90", "20"};
        return Outcome{ok, ok ? "" : "sequence mismatch"};
    });

    criterion("AC2", "set reproduction S_1, S_2, S_3 and R_S via the CLI (limit 10^4)", 30.0, [] {
        const std::vector<std::uint64_t> s1{1, 2, 4, 6, 10, 12, 28, 30, 36, 60};
        const auto s2 = concat({range(1, 7), range(9, 13), {15, 16, 21, 25}, range(28, 31),
                                {36, 37, 55, 57, 60, 61, 70, 121, 190}});
        const auto s3 = concat({range(1, 18), range(20, 22), {25, 26}, range(28, 32), range(35, 38),
                                {42, 50, 52}, range(55, 58), range(60, 62), {66}, range(70, 72),
                                {78, 80, 92, 110, 121, 122, 156, 176, 177, 190, 191, 210, 392}});
        const std::vector<std::uint64_t> rs{3, 5, 8, 9, 11, 27, 29, 35, 59};
        std::string bad;
        if (first_column(cli_out({"sets", "--k", "1", "--limit", "10000"})) != s1) bad += " S_1";
        if (first_column(cli_out({"sets", "--k", "2", "--limit", "10000"})) != s2) bad += " S_2";
        if (first_column(cli_out({"sets", "--k", "3", "--limit", "10000"})) != s3) bad += " S_3";
        if (first_column(cli_out({"radset", "--limit", "10000"})) != rs) bad += " R_S";
        return Outcome{bad.empty(), bad.empty() ? "" : "mismatch in" + bad};
    });

    criterion("AC3", "product formulas equal exact rational denominators, n <= 300, k <= 3", 60.0, [] {
        const PrimeSieve sieve(400);
        const BernoulliTable table(301);
        std::size_t mismatches = 0, checks = 0;
        std::string first;
        auto expect = [&](bool ok, const std::string& what) {
            ++checks;
            if (!ok && mismatches++ == 0) first = what;
        };
        expect(denominator_of(table.sum_of_powers(0)) == ds(0, sieve), "ds(0)");
        for (std::uint64_t n = 1; n <= 300; ++n) {
            const RationalPolynomial b = table.polynomial(n);
            const std::string at = " at n = " + std::to_string(n);
            expect(denominator_of(b) == db(n, sieve).value(), "db" + at);
            expect(denominator_of(b - RationalPolynomial::constant(table.number(n))) == dd(n, sieve).value(),
                   "dd" + at);
            expect(mpz_class(table.number(n).get_den()) == dn(n).value(), "dn" + at);
            expect(denominator_of(table.sum_of_powers(n)) == ds(n, sieve), "ds" + at);
            for (std::uint64_t k = 1; k <= 3; ++k)
                expect(denominator_of(b.derivative(k)) == db_k(n, k, sieve).value(),
                       "db_k(k=" + std::to_string(k) + ")" + at);
        }
        return Outcome{mismatches == 0, std::to_string(checks) + " comparisons, " + std::to_string(mismatches) +
                                            " mismatches" + (first.empty() ? "" : ", first: " + first)};
    });

    const bool extended = std::getenv("BERNDENOM_ACCEPTANCE_EXTENDED") != nullptr;
    for (std::uint64_t limit : extended ? std::vector<std::uint64_t>{1'000'000, 10'000'000}
                                        : std::vector<std::uint64_t>{1'000'000}) {
        criterion("AC4", "no n in (192, " + std::to_string(limit) + "] has omega(D+_n) = 0", 120.0, [limit] {
            const PrimeSieve sieve(scan_sieve_limit(limit));
            const ScanReport r = run_scan(limit, sieve, {.threads = threads()});
            const auto& ex = r.totals.exceptional;
            const auto above = std::count_if(ex.begin(), ex.end(), [](std::uint64_t n) { return n > 192; });
            return Outcome{r.complete && above == 0 && r.max_exceptional() == 192,
                           std::to_string(ex.size()) + " exceptional n, largest " +
                               std::to_string(r.max_exceptional())};
        });
    }

    criterion("AC5", "omega(D+_n) < sqrt(n) for all n <= 10^6", 120.0, [] {
        const PrimeSieve sieve(scan_sieve_limit(1'000'000));
        const ScanChunk c = scan_omega_plus(1, 1'000'000, sieve);
        std::uint64_t violations = 0, worst_n = 1;
        double worst = 0;
        for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
            const std::uint64_t w = c.omega(n);
            if (w * w >= n) ++violations;
            const double r = static_cast<double>(w) / std::sqrt(static_cast<double>(n));
            if (r > worst) {
                worst = r;
                worst_n = n;
            }
        }
        char note[128];
        std::snprintf(note, sizeof note, "%llu violations, max omega/sqrt(n) = %.4f at n = %llu",
                      static_cast<unsigned long long>(violations), worst, static_cast<unsigned long long>(worst_n));
        return Outcome{violations == 0, note};
    });

    criterion("AC6", "divisibility, parity and derivative properties, exhaustive for n <= 10^4", 60.0, [] {
        constexpr std::uint64_t N = 10000;
        const PrimeSieve sieve(N + 2);
        std::vector<SquarefreeProduct> d(N + 2), cop(N + 2), plus(N + 1);
        for (std::uint64_t n = 1; n <= N + 1; ++n) {
            d[n] = dd(n, sieve);
            cop[n] = dd_split_divisibility(n, sieve).coprime;
            if (n <= N) plus[n] = dd_split_sqrt(n, sieve).plus;
        }
        std::vector<std::string> failed;
        auto family = [&](const std::string& name, auto&& pred, std::uint64_t lo = 1, std::uint64_t hi = 10000) {
            for (std::uint64_t n = lo; n <= hi; ++n)
                if (!pred(n)) {
                    failed.push_back(name + "@" + std::to_string(n));
                    return;
                }
        };
        auto pow2 = [](std::uint64_t n) { return (n & (n - 1)) == 0; };
        family("dd parity", [&](auto n) { return d[n].is_even() != pow2(n); });
        family("rad divides coprime", [&](auto n) {
            if (brute::is_prime(n + 1)) return true;
            const auto r = radical(n + 1);
            return r.divides(d[n]) && r.divides(cop[n]);
        });
        family("odd lcm step", [&](auto n) { return n % 2 == 0 || d[n] == lcm(d[n + 1], radical(n + 1)); }, 3);
        family("plus divides coprime", [&](auto n) { return plus[n].divides(cop[n]); });
        family("ds radical", [&](auto n) { return radical_of(ds(n, sieve), sieve) == db(n, sieve); });
        family("db even", [&](auto n) { return db(n, sieve).is_even(); });
        family("coprime parity", [&](auto n) {
            if (n == 1) return cop[1].is_one();
            return cop[n].is_even() == (n % 2 == 1);
        });
        family("coprime one => prime", [&](auto n) { return !cop[n].is_one() || brute::is_prime(n + 1); });
        // k <= 3 across the whole range, every k <= 60 for small n
        family("no small primes in db_k", [&](auto n) {
            for (std::uint64_t k = 1; k <= (n <= 60 ? 60 : 3); ++k)
                for (std::uint32_t p : db_k(n, k, sieve).primes())
                    if (p <= k) return false;
            return true;
        });
        family("S_k nesting", [&](auto n) {
            for (std::uint64_t k = 1; k <= 2; ++k)
                if (db_k(n, k, sieve).is_one() && !db_k(n, k + 1, sieve).is_one()) return false;
            return true;
        });
        std::string note = "10 families";
        for (const auto& f : failed) note += ", failed " + f;
        return Outcome{failed.empty(), note};
    });

    criterion("AC7", "inverted enumeration = brute force; chunked, unchunked and resumed scans identical", 60.0, [] {
        const PrimeSieve sieve(scan_sieve_limit(200'000));
        const ScanChunk c = scan_omega_plus(1, 10000, sieve);
        std::uint64_t diff = 0;
        for (std::uint64_t n = 1; n <= 10000; ++n)
            if (c.omega(n) != brute::omega_plus(n)) ++diff;

        const ScanReport whole = run_scan(200'000, sieve, {.threads = 1, .chunk_size = 200'000});
        bool chunks_ok = true;
        for (std::uint64_t chunk : {999u, 4096u, 65536u})
            chunks_ok = chunks_ok && run_scan(200'000, sieve, {.threads = threads(), .chunk_size = chunk}).totals ==
                                         whole.totals;

        const auto ckpt = std::filesystem::temp_directory_path() / "berndenom_acceptance.ckpt";
        std::filesystem::remove(ckpt);
        const std::string uninterrupted = cli_out({"scan", "--limit", "200000", "--chunk", "10000"});
        cli_out({"scan", "--limit", "200000", "--chunk", "10000", "--checkpoint", ckpt.string(), "--stop-after", "7"});
        const std::string resumed =
            cli_out({"scan", "--limit", "200000", "--chunk", "10000", "--checkpoint", ckpt.string()});
        std::filesystem::remove(ckpt);
        const std::string unchunked = cli_out({"scan", "--limit", "200000", "--chunk", "200000", "--threads", "1"});
        const bool bytes_ok = resumed == uninterrupted && unchunked == uninterrupted;

        return Outcome{diff == 0 && chunks_ok && bytes_ok,
                       std::to_string(diff) + " per-n mismatches; chunk-invariant " + (chunks_ok ? "yes" : "no") +
                           "; resumed/unchunked byte-identical " + (bytes_ok ? "yes" : "no")};
    });

    criterion("AC8", "kappa ratio window means lie in (0.5, 4.0)", 60.0, [] {
        const PrimeSieve sieve(scan_sieve_limit(1'000'000));
        // calibration window straight from digit sums
        double sum = 0;
        for (std::uint64_t n = 9000; n <= 10000; ++n) {
            const double x = static_cast<double>(n);
            sum += static_cast<double>(brute::omega_plus(n)) * std::log(x) / std::sqrt(x);
        }
        const double small_mean = sum / 1001.0;
        const KappaStats big = kappa_ratio(1'000'000 - 1000, 1'000'000, sieve);
        const bool ok = small_mean > 0.5 && small_mean < 4.0 && big.mean > 0.5 && big.mean < 4.0;
        char note[200];
        std::snprintf(note, sizeof note, "mean on [9000, 10000] = %.4f; mean on [999000, 10^6] = %.4f (min %.4f, max %.4f)",
                      small_mean, big.mean, big.min, big.max);
        return Outcome{ok, note};
    });

    std::printf("%s: %d criterion failure(s)\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
