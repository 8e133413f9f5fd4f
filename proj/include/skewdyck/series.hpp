#pragma once

#include <algorithm>
#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skewdyck/rational.hpp"
#include "skewdyck/wpolynomial.hpp"

namespace skew {

class series_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// A division by a power of z left a remainder. Every closed form in this
// library divides exactly, so this always means a transcription error.
class exactness_error : public series_error
{
public:
    using series_error::series_error;
};

template <typename R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static bool is_zero(const Rational& a) { return sgn(a) == 0; }
    static bool is_unit(const Rational& a) { return sgn(a) != 0; }
    static Rational inverse(const Rational& a) { return Rational(1) / a; }
    static std::string name() { return "Q"; }
};

template <>
struct ring_traits<WPolynomial> {
    static bool is_zero(const WPolynomial& a) { return a.is_zero(); }
    // Units of Q[w] are the nonzero constants.
    static bool is_unit(const WPolynomial& a) { return a.degree() == 0; }
    static WPolynomial inverse(const WPolynomial& a) { return WPolynomial(Rational(1) / a.coeff(0)); }
    static std::string name() { return "Q[w]"; }
};

template <typename R>
concept SeriesRing = requires(const R& a, const Rational& q) {
    { R(q) };
    { a + a } -> std::convertible_to<R>;
    { a * a } -> std::convertible_to<R>;
    { ring_traits<R>::is_unit(a) } -> std::convertible_to<bool>;
    { ring_traits<R>::inverse(a) } -> std::convertible_to<R>;
};

/// Truncated formal power series c_0 + c_1 z + ... + c_N z^N + O(z^{N+1}).
///
/// The order N is part of the value: coefficients up to z^N are exact and
/// nothing beyond is ever reported. Binary operations return the minimum of
/// the operand orders.
template <SeriesRing R>
class TruncatedSeries
{
public:
    using ring_type = R;

    explicit TruncatedSeries(int order = 0) : coeffs_(checked_size(order), R(0)) {}

    // Missing trailing coefficients are exact zeros; surplus ones are dropped.
    TruncatedSeries(std::vector<R> coeffs, int order) : coeffs_(std::move(coeffs))
    {
        coeffs_.resize(checked_size(order), R(0));
    }

    static TruncatedSeries constant(const R& c, int order)
    {
        TruncatedSeries out(order);
        out.coeffs_[0] = c;
        return out;
    }

    // c * z^power
    static TruncatedSeries monomial(const R& c, int power, int order)
    {
        TruncatedSeries out(order);
        if (power < 0) {
            throw std::invalid_argument("monomial: negative power");
        }
        if (power <= order) {
            out.coeffs_[static_cast<std::size_t>(power)] = c;
        }
        return out;
    }

    static TruncatedSeries variable(int order) { return monomial(R(1), 1, order); }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const R& operator[](int n) const
    {
        if (n < 0 || n > order()) {
            throw std::out_of_range("coefficient z^" + std::to_string(n) + " is beyond truncation order " +
                                    std::to_string(order()));
        }
        return coeffs_[static_cast<std::size_t>(n)];
    }

    const std::vector<R>& coefficients() const { return coeffs_; }

    TruncatedSeries truncated(int new_order) const
    {
        if (new_order > order()) {
            throw series_error("cannot raise truncation order from " + std::to_string(order()) + " to " +
                               std::to_string(new_order));
        }
        return TruncatedSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + new_order + 1), new_order);
    }

    TruncatedSeries& operator+=(const TruncatedSeries& b)
    {
        coeffs_.resize(static_cast<std::size_t>(std::min(order(), b.order()) + 1));
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            coeffs_[n] += b.coeffs_[n];
        }
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& b)
    {
        coeffs_.resize(static_cast<std::size_t>(std::min(order(), b.order()) + 1));
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            coeffs_[n] -= b.coeffs_[n];
        }
        return *this;
    }

    TruncatedSeries operator-() const
    {
        TruncatedSeries out = *this;
        for (auto& c : out.coeffs_) {
            c = R(0) - c;
        }
        return out;
    }

    TruncatedSeries& operator*=(const R& scalar)
    {
        for (auto& c : coeffs_) {
            c = c * scalar;
        }
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const R& s) { return a *= s; }
    friend TruncatedSeries operator*(const R& s, TruncatedSeries a) { return a *= s; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    static std::size_t checked_size(int order)
    {
        if (order < 0) {
            throw std::invalid_argument("truncation order must be nonnegative");
        }
        return static_cast<std::size_t>(order) + 1;
    }

    std::vector<R> coeffs_;
};

using QSeries = TruncatedSeries<Rational>;
using WSeries = TruncatedSeries<WPolynomial>;

template <SeriesRing R>
TruncatedSeries<R> add(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b)
{
    return a + b;
}

// Cauchy product truncated at the smaller order.
template <SeriesRing R>
TruncatedSeries<R> mul(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b)
{
    const int order = std::min(a.order(), b.order());
    std::vector<R> out(static_cast<std::size_t>(order) + 1, R(0));
    for (int i = 0; i <= order; ++i) {
        const R& ai = a[i];
        if (ring_traits<R>::is_zero(ai)) {
            continue;
        }
        for (int j = 0; i + j <= order; ++j) {
            out[static_cast<std::size_t>(i + j)] += ai * b[j];
        }
    }
    return TruncatedSeries<R>(std::move(out), order);
}

template <SeriesRing R>
TruncatedSeries<R> operator*(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b)
{
    return mul(a, b);
}

template <SeriesRing R>
TruncatedSeries<R> div(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b)
{
    if (!ring_traits<R>::is_unit(b[0])) {
        throw series_error("division by a series whose constant term is not a unit");
    }
    const int order = std::min(a.order(), b.order());
    const R inv0 = ring_traits<R>::inverse(b[0]);
    std::vector<R> q(static_cast<std::size_t>(order) + 1, R(0));
    for (int n = 0; n <= order; ++n) {
        R acc = a[n];
        for (int i = 1; i <= n; ++i) {
            if (!ring_traits<R>::is_zero(b[i])) {
                acc -= b[i] * q[static_cast<std::size_t>(n - i)];
            }
        }
        q[static_cast<std::size_t>(n)] = acc * inv0;
    }
    return TruncatedSeries<R>(std::move(q), order);
}

template <SeriesRing R>
TruncatedSeries<R> operator/(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b)
{
    return div(a, b);
}

// Square root with s(0) = 1; requires a(0) = 1.
template <SeriesRing R>
TruncatedSeries<R> sqrt_one(const TruncatedSeries<R>& a)
{
    if (!(a[0] == R(1))) {
        throw series_error("sqrt_one: constant term must be exactly 1");
    }
    const int order = a.order();
    const R half(Rational(1, 2));
    std::vector<R> s(static_cast<std::size_t>(order) + 1, R(0));
    s[0] = R(1);
    for (int n = 1; n <= order; ++n) {
        R acc = a[n];
        for (int i = 1; i < n; ++i) {
            acc -= s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(n - i)];
        }
        s[static_cast<std::size_t>(n)] = acc * half;
    }
    return TruncatedSeries<R>(std::move(s), order);
}

// a / z^k. The low coefficients must vanish exactly; the order drops by k.
template <SeriesRing R>
TruncatedSeries<R> shift_divide(const TruncatedSeries<R>& a, int k)
{
    if (k < 0) {
        throw std::invalid_argument("shift_divide: negative shift");
    }
    if (k > a.order()) {
        throw series_error("shift_divide: z^" + std::to_string(k) + " exceeds known order " +
                           std::to_string(a.order()));
    }
    for (int i = 0; i < k; ++i) {
        if (!ring_traits<R>::is_zero(a[i])) {
            throw exactness_error("shift_divide: coefficient of z^" + std::to_string(i) +
                                  " is nonzero, division by z^" + std::to_string(k) + " is not exact");
        }
    }
    const auto& c = a.coefficients();
    return TruncatedSeries<R>(std::vector<R>(c.begin() + k, c.end()), a.order() - k);
}

// z^k * a; the order grows by k.
template <SeriesRing R>
TruncatedSeries<R> shift_multiply(const TruncatedSeries<R>& a, int k)
{
    if (k < 0) {
        throw std::invalid_argument("shift_multiply: negative shift");
    }
    std::vector<R> out(static_cast<std::size_t>(k), R(0));
    out.insert(out.end(), a.coefficients().begin(), a.coefficients().end());
    return TruncatedSeries<R>(std::move(out), a.order() + k);
}

template <SeriesRing R>
TruncatedSeries<R> power(const TruncatedSeries<R>& a, int n)
{
    if (n < 0) {
        throw std::invalid_argument("power: negative exponent");
    }
    TruncatedSeries<R> result = TruncatedSeries<R>::constant(R(1), a.order());
    TruncatedSeries<R> base = a;
    while (n > 0) {
        if (n & 1) {
            result = mul(result, base);
        }
        n >>= 1;
        if (n > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

// f(g(z)); requires g(0) = 0.
template <SeriesRing R>
TruncatedSeries<R> compose(const TruncatedSeries<R>& f, const TruncatedSeries<R>& g)
{
    if (!ring_traits<R>::is_zero(g[0])) {
        throw series_error("compose: inner series must have zero constant term");
    }
    const int order = std::min(f.order(), g.order());
    const TruncatedSeries<R> inner = g.truncated(order);
    TruncatedSeries<R> result = TruncatedSeries<R>::constant(f[order], order);
    for (int i = order - 1; i >= 0; --i) {
        result = mul(result, inner);
        result = result + TruncatedSeries<R>::constant(f[i], order);
    }
    return result;
}

// Compositional inverse h with g(h(z)) = z, by Lagrange inversion:
// [z^n] h = (1/n) [t^{n-1}] (t / g(t))^n.
template <SeriesRing R>
TruncatedSeries<R> reversion(const TruncatedSeries<R>& g)
{
    if (g.order() < 1) {
        throw series_error("reversion: need at least the linear coefficient");
    }
    if (!ring_traits<R>::is_zero(g[0])) {
        throw series_error("reversion: g(0) must be zero");
    }
    if (!ring_traits<R>::is_unit(g[1])) {
        throw series_error("reversion: g'(0) must be a unit");
    }
    const int order = g.order();
    const TruncatedSeries<R> phi =
        div(TruncatedSeries<R>::constant(R(1), order - 1), shift_divide(g, 1));
    std::vector<R> h(static_cast<std::size_t>(order) + 1, R(0));
    TruncatedSeries<R> phi_n = TruncatedSeries<R>::constant(R(1), order - 1);
    for (int n = 1; n <= order; ++n) {
        phi_n = mul(phi_n, phi);
        h[static_cast<std::size_t>(n)] = phi_n[n - 1] * R(Rational(1, n));
    }
    return TruncatedSeries<R>(std::move(h), order);
}

template <SeriesRing S, SeriesRing R, typename Fn>
TruncatedSeries<S> map_coefficients(const TruncatedSeries<R>& a, Fn&& fn)
{
    std::vector<S> out;
    out.reserve(a.coefficients().size());
    for (const auto& c : a.coefficients()) {
        out.push_back(S(fn(c)));
    }
    return TruncatedSeries<S>(std::move(out), a.order());
}

// w := value, coefficientwise.
inline QSeries evaluate_w(const WSeries& a, const Rational& value)
{
    return map_coefficients<Rational>(a, [&](const WPolynomial& p) { return p.evaluate(value); });
}

// The series of [w^k] coefficients.
inline QSeries w_slice(const WSeries& a, int k)
{
    return map_coefficients<Rational>(a, [&](const WPolynomial& p) { return p.coeff(k); });
}

inline WSeries lift_to_w(const QSeries& a)
{
    return map_coefficients<WPolynomial>(a, [](const Rational& c) { return WPolynomial(c); });
}

// First index up to the common order where a and b differ.
template <SeriesRing R>
std::optional<int> first_mismatch(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b)
{
    const int order = std::min(a.order(), b.order());
    for (int n = 0; n <= order; ++n) {
        if (!(a[n] == b[n])) {
            return n;
        }
    }
    return std::nullopt;
}

template <SeriesRing R>
bool agree(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b)
{
    return !first_mismatch(a, b).has_value();
}

// True iff [z^n]a = 0 whenever n is not congruent to residue mod 2.
template <SeriesRing R>
bool parity_vanishes(const TruncatedSeries<R>& a, int residue)
{
    for (int n = 0; n <= a.order(); ++n) {
        if (((n - residue) % 2 + 2) % 2 != 0 && !ring_traits<R>::is_zero(a[n])) {
            return false;
        }
    }
    return true;
}

// a(z) with only even powers, rewritten in x = z^2.
template <SeriesRing R>
TruncatedSeries<R> even_to_x(const TruncatedSeries<R>& a)
{
    if (!parity_vanishes(a, 0)) {
        throw exactness_error("even_to_x: series has odd powers");
    }
    std::vector<R> out;
    for (int n = 0; n <= a.order(); n += 2) {
        out.push_back(a[n]);
    }
    return TruncatedSeries<R>(std::move(out), a.order() / 2);
}

// Rational coefficients as integers; throws if any is fractional.
std::vector<Integer> integer_coefficients(const QSeries& a);

// Coefficients rendered for diagnostics: "1 + 2*z^2 + ..." is avoided in
// favour of a plain list.
std::string to_list_string(const QSeries& a);
std::string to_list_string(const WSeries& a);

}  // namespace skew
