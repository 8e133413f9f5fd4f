#pragma once

#include <stdexcept>
#include <vector>

#include "skewdyck/series.hpp"

namespace skew {

/// numerator(u) / (den0 + den1*u), with numerator a polynomial in u whose
/// coefficients are series in z. This is the shape every bivariate
/// generating function takes once the non-analytic kernel root has been
/// cancelled.
template <SeriesRing R>
struct ULinearRational {
    std::vector<TruncatedSeries<R>> numerator;  // numerator[i] multiplies u^i
    TruncatedSeries<R> den0;
    TruncatedSeries<R> den1;
};

/// [u^j] of r, expanding 1/(den0 + den1 u) geometrically in -den1/den0 * u.
template <SeriesRing R>
TruncatedSeries<R> extract_u(const ULinearRational<R>& r, int j)
{
    if (j < 0) {
        throw std::invalid_argument("extract_u: negative u-power");
    }
    if (!ring_traits<R>::is_unit(r.den0[0])) {
        throw series_error("extract_u: den0 must have a unit constant term");
    }
    int order = std::min(r.den0.order(), r.den1.order());
    for (const auto& c : r.numerator) {
        order = std::min(order, c.order());
    }
    const auto inv0 = div(TruncatedSeries<R>::constant(R(1), order), r.den0);
    const auto ratio = -mul(r.den1, inv0);

    // powers[k] = inv0 * ratio^k
    const int top = j;
    std::vector<TruncatedSeries<R>> powers;
    powers.reserve(static_cast<std::size_t>(top) + 1);
    powers.push_back(inv0);
    for (int k = 1; k <= top; ++k) {
        powers.push_back(mul(powers.back(), ratio));
    }

    TruncatedSeries<R> out(order);
    for (int i = 0; i < static_cast<int>(r.numerator.size()) && i <= j; ++i) {
        out += mul(r.numerator[static_cast<std::size_t>(i)], powers[static_cast<std::size_t>(j - i)]);
    }
    return out;
}

}  // namespace skew
