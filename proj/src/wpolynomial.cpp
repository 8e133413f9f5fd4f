#include "skewdyck/wpolynomial.hpp"

#include <algorithm>
#include <sstream>

namespace skew {

WPolynomial::WPolynomial(const Rational& constant) : coeffs_{constant} { trim(); }

WPolynomial::WPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

WPolynomial::WPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

WPolynomial WPolynomial::w() { return WPolynomial{Rational(0), Rational(1)}; }

void WPolynomial::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

Rational WPolynomial::coeff(int k) const
{
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational WPolynomial::evaluate(const Rational& at) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

WPolynomial WPolynomial::derivative() const
{
    std::vector<Rational> out;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        out.push_back(coeffs_[k] * static_cast<long>(k));
    }
    return WPolynomial(std::move(out));
}

WPolynomial& WPolynomial::operator+=(const WPolynomial& other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
        coeffs_[k] += other.coeffs_[k];
    }
    trim();
    return *this;
}

WPolynomial& WPolynomial::operator-=(const WPolynomial& other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
        coeffs_[k] -= other.coeffs_[k];
    }
    trim();
    return *this;
}

WPolynomial& WPolynomial::operator*=(const WPolynomial& other)
{
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

WPolynomial WPolynomial::operator-() const
{
    WPolynomial out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

std::string WPolynomial::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (sgn(c) == 0) {
            continue;
        }
        Rational mag = abs(c);
        if (!first || sgn(c) < 0) {
            os << (sgn(c) < 0 ? "-" : "+");
        }
        first = false;
        const bool unit = (mag == 1);
        if (k == 0 || !unit) {
            os << skew::to_string(mag);
            if (k > 0) {
                os << '*';
            }
        }
        if (k >= 1) {
            os << 'w';
        }
        if (k >= 2) {
            os << '^' << k;
        }
    }
    return os.str();
}

std::string WPolynomial::to_list_string() const
{
    std::string out = "[";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k > 0) {
            out += ',';
        }
        out += skew::to_string(coeffs_[k]);
    }
    if (coeffs_.empty()) {
        out += '0';
    }
    return out + "]";
}

}  // namespace skew
