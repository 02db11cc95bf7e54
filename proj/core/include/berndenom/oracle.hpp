#pragma once

// Exact rational Bernoulli numbers and polynomials. This is the slow,
// independent route used to cross-check the prime-product formulas in
// denom.hpp at desk-scale indices.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "berndenom/rational_polynomial.hpp"

namespace berndenom {

/// B_0 .. B_N with B_1 = -1/2, solved from
/// sum_{k=0}^{n} C(n+1, k) B_k = 0.
std::vector<mpq_class> bernoulli_numbers(std::size_t N);

/// Holds B_0..B_N once so polynomials up to degree N can be built cheaply.
class BernoulliTable {
public:
    explicit BernoulliTable(std::size_t N);

    std::size_t max_index() const noexcept { return numbers_.size() - 1; }
    const mpq_class& number(std::size_t n) const;

    /// B_n(x) = sum_k C(n, k) B_{n-k} x^k. Throws std::out_of_range past N.
    RationalPolynomial polynomial(std::size_t n) const;

    /// S_n(x) = (B_{n+1}(x) - B_{n+1}) / (n + 1); needs n + 1 <= N.
    RationalPolynomial sum_of_powers(std::size_t n) const;

private:
    std::vector<mpq_class> numbers_;
};

RationalPolynomial bernoulli_polynomial(std::size_t n);
RationalPolynomial sum_of_powers_polynomial(std::size_t n);

}  // namespace berndenom
