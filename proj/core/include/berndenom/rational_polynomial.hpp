#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace berndenom {

/// Polynomial over Q with coefficients in ascending powers of x.
///
/// Coefficients are kept canonical (lowest terms, positive denominator) and
/// trailing zeros are trimmed, so the zero polynomial has no coefficients.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<mpq_class> coefficients);

    static RationalPolynomial constant(const mpq_class& c);
    static RationalPolynomial x();

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; 0 for the zero polynomial as well as for nonzero constants.
    std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }
    /// Coefficient of x^i, zero past the degree.
    mpq_class coefficient(std::size_t i) const;
    mpq_class leading() const;

    mpq_class evaluate(const mpq_class& at) const;

    /// k-fold formal derivative.
    RationalPolynomial derivative(std::size_t k = 1) const;

    /// p(a x + b).
    RationalPolynomial compose_affine(const mpq_class& a, const mpq_class& b) const;

    RationalPolynomial& operator+=(const RationalPolynomial& rhs);
    RationalPolynomial& operator-=(const RationalPolynomial& rhs);
    RationalPolynomial& operator*=(const mpq_class& scalar);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const mpq_class& s) { return a *= s; }
    friend RationalPolynomial operator*(const mpq_class& s, RationalPolynomial a) { return a *= s; }
    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b);

    std::string to_string() const;

private:
    void normalize();

    std::vector<mpq_class> coeffs_;
};

/// lcm of the reduced denominators of the coefficients; 1 for Z[x].
mpz_class denominator_of(const RationalPolynomial& poly);

}  // namespace berndenom
