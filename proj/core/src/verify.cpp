#include "berndenom/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "berndenom/arith.hpp"
#include "berndenom/denom.hpp"
#include "berndenom/oracle.hpp"
#include "berndenom/prime_sieve.hpp"

namespace berndenom {

namespace {

class Family {
public:
    Family(std::string name, const std::optional<InjectedFault>& fault)
        : fault_(fault && fault->family == name ? std::optional<std::uint64_t>(fault->n) : std::nullopt)
    {
        result_.name = std::move(name);
    }

    /// Records one check at index n; returns ok so callers can bail early.
    bool check(std::uint64_t n, bool ok, const std::string& what = {})
    {
        ++result_.checked;
        if (fault_ && *fault_ == n) ok = false;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.witness = n;
            result_.detail = what.empty() ? "identity fails at n = " + std::to_string(n) : what;
        }
        return ok;
    }

    FamilyResult take() { return std::move(result_); }

private:
    std::optional<std::uint64_t> fault_;
    FamilyResult result_;
};

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// Radical of an arbitrary positive integer whose prime factors lie in the sieve.
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
    if (rest != 1) throw std::logic_error("radical_of: sieve too small");
    return std::move(out).build();
}

}  // namespace

const std::vector<std::string>& verification_families()
{
    static const std::vector<std::string> names{
        "decomposition",        "triple_product",    "omega_bound",
        "dd_parity",            "rad_divides_coprime", "odd_lcm_step",
        "plus_divides_coprime", "ds_radical",        "db_even",
        "coprime_parity",       "coprime_one_prime", "db_k_small_primes",
        "nesting",              "oracle_equivalence", "oracle_power_sums",
        "oracle_reflection",    "bernoulli_derivative",
    };
    return names;
}

std::vector<FamilyResult> run_verification(const VerifyOptions& options)
{
    if (options.limit < 1) throw std::invalid_argument("verify: limit must be >= 1");
    if (options.oracle_limit < 1 || options.oracle_limit > 1000)
        throw std::invalid_argument("verify: oracle limit must lie in [1, 1000]");

    const std::uint64_t N = options.limit;
    const std::uint64_t sieve_top = std::max({N, options.oracle_limit, std::uint64_t{50}}) + 2;
    const PrimeSieve sieve(sieve_top);
    const auto& fault = options.fault;
    std::vector<FamilyResult> out;

    // Per-index quantities reused by several families.
    std::vector<DivisibilitySplit> split(N + 2);
    std::vector<SqrtSplit> sqrt_split(N + 1);
    std::vector<SquarefreeProduct> dds(N + 2);
    for (std::uint64_t n = 1; n <= N + 1; ++n) {
        dds[n] = dd(n, sieve);
        split[n] = dd_split_divisibility(n, sieve);
        if (n <= N) sqrt_split[n] = dd_split_sqrt(n, sieve);
    }

    {
        Family f("decomposition", fault);
        for (std::uint64_t n = 1; n <= N; ++n) {
            const bool ok = dds[n] == sqrt_split[n].minus * sqrt_split[n].plus &&
                            dds[n] == split[n].shared * split[n].coprime &&
                            radical(n) == split[n].shared * split[n].complement;
            f.check(n, ok);
        }
        out.push_back(f.take());
    }
    {
        Family f("triple_product", fault);
        for (std::uint64_t n = 1; n <= N; ++n) {
            const auto& s = split[n + 1];
            const SquarefreeProduct triple = s.coprime * s.shared * s.complement;
            const SquarefreeProduct main = db(n, sieve);
            const bool ok = main == triple && main == db_via_complement(n, sieve) &&
                            main == db_via_lcm_rad(n, sieve) && main == db_via_lcm_dn(n, sieve);
            f.check(n, ok);
        }
        out.push_back(f.take());
    }
    {
        Family f("omega_bound", fault);
        for (std::uint64_t n = 1; n <= N; ++n) {
            const std::size_t w = omega_dd_plus(n, sieve);
            f.check(n, w == sqrt_split[n].plus.omega() && std::uint64_t{w} * w < n);
        }
        out.push_back(f.take());
    }
    {
        Family f("dd_parity", fault);
        for (std::uint64_t n = 1; n <= N; ++n) f.check(n, !dds[n].is_even() == is_power_of_two(n));
        out.push_back(f.take());
    }
    {
        Family f("rad_divides_coprime", fault);
        for (std::uint64_t n = 1; n <= N; ++n) {
            if (is_prime_u64(n + 1)) continue;
            const SquarefreeProduct r = radical(n + 1);
            f.check(n, r.divides(dds[n]) && r.divides(split[n].coprime));
        }
        out.push_back(f.take());
    }
    {
        Family f("odd_lcm_step", fault);
        for (std::uint64_t n = 3; n <= N; n += 2) f.check(n, dds[n] == lcm(dds[n + 1], radical(n + 1)));
        out.push_back(f.take());
    }
    {
        Family f("plus_divides_coprime", fault);
        for (std::uint64_t n = 1; n <= N; ++n) f.check(n, sqrt_split[n].plus.divides(split[n].coprime));
        out.push_back(f.take());
    }
    {
        Family f("ds_radical", fault);
        for (std::uint64_t n = 1; n <= N; ++n) f.check(n, radical_of(ds(n, sieve), sieve) == db(n, sieve));
        out.push_back(f.take());
    }
    {
        Family f("db_even", fault);
        for (std::uint64_t n = 1; n <= N; ++n) f.check(n, db(n, sieve).is_even());
        out.push_back(f.take());
    }
    {
        Family f("coprime_parity", fault);
        for (std::uint64_t n = 1; n <= N; ++n) {
            const bool even = split[n].coprime.is_even();
            const bool expected_even = n >= 3 && (n & 1);
            f.check(n, even == expected_even && (n != 1 || split[n].coprime.is_one()));
        }
        out.push_back(f.take());
    }
    {
        Family f("coprime_one_prime", fault);
        for (std::uint64_t n = 1; n <= N; ++n)
            if (split[n].coprime.is_one()) f.check(n, is_prime_u64(n + 1));
        out.push_back(f.take());
    }
    {
        Family f("db_k_small_primes", fault);
        const std::uint64_t top = std::min<std::uint64_t>(50, N);
        for (std::uint64_t n = 1; n <= top; ++n) {
            for (std::uint64_t k = 1; k <= 50; ++k) {
                const SquarefreeProduct v = db_k(n, k, sieve);
                bool ok = v == db_k_via_db(n, k, sieve) && v == db_k_via_product(n, k, sieve);
                for (std::uint32_t p : v.primes()) ok = ok && p > k;
                if (k == 1) ok = ok && v == split[n].coprime;
                if (!f.check(n, ok, "fails at n = " + std::to_string(n) + ", k = " + std::to_string(k)))
                    break;
            }
        }
        out.push_back(f.take());
    }
    {
        Family f("nesting", fault);
        const std::uint64_t top = std::min<std::uint64_t>(1000, N);
        for (std::uint64_t n = 1; n <= top; ++n) {
            for (std::uint64_t k = 1; k <= 2; ++k) {
                const bool in_k = db_k(n, k, sieve).is_one();
                const bool in_next = db_k(n, k + 1, sieve).is_one();
                if (!f.check(n, !in_k || in_next,
                             "n = " + std::to_string(n) + " lies in S_" + std::to_string(k) +
                                 " but not in S_" + std::to_string(k + 1)))
                    break;
            }
        }
        out.push_back(f.take());
    }

    const std::uint64_t M = options.oracle_limit;
    const BernoulliTable table(M + 1);
    {
        Family f("oracle_equivalence", fault);
        if (f.check(0, denominator_of(table.sum_of_powers(0)) == ds(0, sieve), "ds fails at n = 0")) {
            for (std::uint64_t n = 1; n <= M; ++n) {
                const RationalPolynomial b = table.polynomial(n);
                const mpq_class& bn = table.number(n);
                bool ok = denominator_of(b) == db(n, sieve).value() &&
                          denominator_of(b - RationalPolynomial::constant(bn)) == dd(n, sieve).value() &&
                          mpz_class(bn.get_den()) == dn(n).value() &&
                          denominator_of(table.sum_of_powers(n)) == ds(n, sieve);
                for (std::uint64_t k = 1; ok && k <= options.max_k; ++k)
                    ok = denominator_of(b.derivative(k)) == db_k(n, k, sieve).value();
                if (!f.check(n, ok)) break;
            }
        }
        out.push_back(f.take());
    }
    {
        Family f("oracle_power_sums", fault);
        const std::uint64_t top = std::min<std::uint64_t>(10, M);
        for (std::uint64_t n = 0; n <= top; ++n) {
            const RationalPolynomial s = table.sum_of_powers(n);
            mpz_class direct = 0;
            bool ok = true;
            for (unsigned long m = 0; m <= 20; ++m) {
                ok = ok && s.evaluate(mpq_class(m)) == mpq_class(direct);
                mpz_class term;
                mpz_ui_pow_ui(term.get_mpz_t(), m, n);
                direct += term;
            }
            f.check(n, ok);
        }
        out.push_back(f.take());
    }
    {
        Family f("oracle_reflection", fault);
        const std::uint64_t top = std::min<std::uint64_t>(50, M);
        for (std::uint64_t n = 0; n <= top; ++n) {
            const RationalPolynomial b = table.polynomial(n);
            const RationalPolynomial reflected = b.compose_affine(-1, 1);
            f.check(n, reflected == ((n & 1) ? b * mpq_class(-1) : b));
        }
        out.push_back(f.take());
    }
    {
        Family f("bernoulli_derivative", fault);
        for (std::uint64_t n = 1; n <= M; ++n) {
            const RationalPolynomial lhs = table.polynomial(n).derivative(1);
            const RationalPolynomial rhs = table.polynomial(n - 1) * mpq_class(static_cast<unsigned long>(n));
            f.check(n, lhs == rhs);
        }
        out.push_back(f.take());
    }
    return out;
}

}  // namespace berndenom
