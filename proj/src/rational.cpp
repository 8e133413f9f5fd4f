#include "skewdyck/rational.hpp"

#include <stdexcept>

namespace skew {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw std::domain_error("make_rational: zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value)
{
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integral(const Rational& value) { return value.get_den() == 1; }

Integer binomial(long n, long k)
{
    if (k < 0) {
        return 0;
    }
    Integer out;
    if (n >= 0) {
        if (k > n) {
            return 0;
        }
        mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return out;
    }
    const long m = -n;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m + k - 1), static_cast<unsigned long>(k));
    return (k % 2 == 0) ? out : Integer(-out);
}

Rational pow2(long e)
{
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(p) : make_rational(1, p);
}

}  // namespace skew
