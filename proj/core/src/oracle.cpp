#include "berndenom/oracle.hpp"

#include <stdexcept>
#include <string>

namespace berndenom {

namespace {

mpz_class binomial(std::size_t n, std::size_t k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

std::vector<mpq_class> bernoulli_numbers(std::size_t N)
{
    std::vector<mpq_class> b(N + 1);
    b[0] = 1;
    // Row n + 1 of Pascal's triangle, built up incrementally.
    std::vector<mpz_class> row{1, 1};
    for (std::size_t n = 1; n <= N; ++n) {
        std::vector<mpz_class> next(row.size() + 1);
        next.front() = next.back() = 1;
        for (std::size_t i = 1; i < row.size(); ++i) next[i] = row[i - 1] + row[i];
        row = std::move(next);  // row[k] = C(n + 1, k)
        mpq_class acc = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (b[k] != 0) acc += b[k] * row[k];
        b[n] = -acc / row[n];
        b[n].canonicalize();
    }
    return b;
}

BernoulliTable::BernoulliTable(std::size_t N) : numbers_(bernoulli_numbers(N)) {}

const mpq_class& BernoulliTable::number(std::size_t n) const
{
    if (n >= numbers_.size())
        throw std::out_of_range("BernoulliTable: index " + std::to_string(n) + " beyond " +
                                std::to_string(max_index()));
    return numbers_[n];
}

RationalPolynomial BernoulliTable::polynomial(std::size_t n) const
{
    if (n >= numbers_.size())
        throw std::out_of_range("BernoulliTable: degree " + std::to_string(n) + " beyond " +
                                std::to_string(max_index()));
    std::vector<mpq_class> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = numbers_[n - k] * binomial(n, k);
    return RationalPolynomial(std::move(c));
}

RationalPolynomial BernoulliTable::sum_of_powers(std::size_t n) const
{
    RationalPolynomial p = polynomial(n + 1);
    p -= RationalPolynomial::constant(number(n + 1));
    p *= mpq_class(1, static_cast<unsigned long>(n + 1));
    return p;
}

RationalPolynomial bernoulli_polynomial(std::size_t n)
{
    return BernoulliTable(n).polynomial(n);
}

RationalPolynomial sum_of_powers_polynomial(std::size_t n)
{
    return BernoulliTable(n + 1).sum_of_powers(n);
}

}  // namespace berndenom
