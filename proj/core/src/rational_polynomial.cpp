#include "berndenom/rational_polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace berndenom {

RationalPolynomial::RationalPolynomial(std::vector<mpq_class> coefficients)
    : coeffs_(std::move(coefficients))
{
    normalize();
}

RationalPolynomial RationalPolynomial::constant(const mpq_class& c)
{
    return RationalPolynomial(std::vector<mpq_class>{c});
}

RationalPolynomial RationalPolynomial::x()
{
    return RationalPolynomial(std::vector<mpq_class>{0, 1});
}

void RationalPolynomial::normalize()
{
    for (auto& c : coeffs_) c.canonicalize();
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class RationalPolynomial::coefficient(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : mpq_class(0);
}

mpq_class RationalPolynomial::leading() const
{
    return coeffs_.empty() ? mpq_class(0) : coeffs_.back();
}

mpq_class RationalPolynomial::evaluate(const mpq_class& at) const
{
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

RationalPolynomial RationalPolynomial::derivative(std::size_t k) const
{
    if (k == 0) return *this;
    if (k > degree() || is_zero()) return {};
    std::vector<mpq_class> out(coeffs_.size() - k);
    for (std::size_t i = k; i < coeffs_.size(); ++i) {
        // d^k/dx^k x^i = (i)_k x^(i-k)
        mpz_class ff = 1;
        for (std::size_t j = 0; j < k; ++j) ff *= static_cast<unsigned long>(i - j);
        out[i - k] = coeffs_[i] * ff;
    }
    return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::compose_affine(const mpq_class& a, const mpq_class& b) const
{
    // Horner over polynomials: acc = acc * (a x + b) + c_i.
    std::vector<mpq_class> acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        std::vector<mpq_class> next(acc.size() + 1, mpq_class(0));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i] += acc[i] * b;
            next[i + 1] += acc[i] * a;
        }
        next[0] += *it;
        acc = std::move(next);
    }
    return RationalPolynomial(std::move(acc));
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpq_class(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), mpq_class(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const mpq_class& scalar)
{
    for (auto& c : coeffs_) c *= scalar;
    normalize();
    return *this;
}

bool operator==(const RationalPolynomial& a, const RationalPolynomial& b)
{
    return a.coeffs_ == b.coeffs_;
}

std::string RationalPolynomial::to_string() const
{
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const mpq_class& c = coeffs_[i];
        if (c == 0) continue;
        mpq_class mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (!unit || i == 0) os << mag.get_str();
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

mpz_class denominator_of(const RationalPolynomial& poly)
{
    mpz_class l = 1;
    for (const auto& c : poly.coefficients())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

}  // namespace berndenom
