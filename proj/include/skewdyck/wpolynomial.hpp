#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "skewdyck/rational.hpp"

namespace skew {

/// Polynomial in the edge-colour marker w with exact rational coefficients.
///
/// Coefficients are indexed by the power of w and trailing zeros are always
/// trimmed, so the zero polynomial has no stored coefficients.
class WPolynomial
{
public:
    WPolynomial() = default;
    WPolynomial(int constant) : WPolynomial(Rational(constant)) {}
    WPolynomial(const Rational& constant);
    WPolynomial(std::initializer_list<Rational> coeffs);
    explicit WPolynomial(std::vector<Rational> coeffs);

    /// The marker itself.
    static WPolynomial w();

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int k) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational evaluate(const Rational& at) const;
    WPolynomial derivative() const;

    WPolynomial& operator+=(const WPolynomial& other);
    WPolynomial& operator-=(const WPolynomial& other);
    WPolynomial& operator*=(const WPolynomial& other);

    friend WPolynomial operator+(WPolynomial a, const WPolynomial& b) { return a += b; }
    friend WPolynomial operator-(WPolynomial a, const WPolynomial& b) { return a -= b; }
    friend WPolynomial operator*(WPolynomial a, const WPolynomial& b) { return a *= b; }
    WPolynomial operator-() const;

    friend bool operator==(const WPolynomial& a, const WPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    // "w^2+4*w+5"
    std::string to_string() const;
    // Ordered coefficient list, lowest power first: "[5,4,1]".
    std::string to_list_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

}  // namespace skew
