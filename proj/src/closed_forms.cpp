#include "skewdyck/closed_forms.hpp"

#include <stdexcept>

namespace skew::closed {

namespace {

QSeries poly(std::initializer_list<long> cs, int order)
{
    std::vector<Rational> v;
    for (long c : cs) {
        v.emplace_back(c);
    }
    return QSeries(std::move(v), order);
}

WSeries wpoly(std::vector<WPolynomial> cs, int order) { return WSeries(std::move(cs), order); }

QSeries constant(const Rational& c, int order) { return QSeries::constant(c, order); }

QSeries zpow(int k, int order) { return QSeries::monomial(1, k, order); }

template <SeriesRing R>
TruncatedSeries<R> inverse(const TruncatedSeries<R>& a)
{
    return TruncatedSeries<R>::constant(R(1), a.order()) / a;
}

void require_level(int j, const char* where)
{
    if (j < 0) {
        throw std::invalid_argument(std::string(where) + ": level must be nonnegative");
    }
}

const Rational half(1, 2);

}  // namespace

KernelBundle kernel_bundle(int order, bool with_w)
{
    KernelBundle kb;
    kb.order = order;
    kb.W = sqrt_one(poly({1, 0, -6, 0, 5}, order));
    const QSeries one_z2 = poly({1, 0, 1}, order);
    kb.P = (one_z2 + kb.W) * half;
    kb.Q = (one_z2 - kb.W) * half;
    if (with_w) {
        const WPolynomial w = WPolynomial::w();
        const WSeries radicand = wpoly({1, 0, -(4 + 2 * w), 0, 4 * w + w * w}, order);
        kb.Ww = sqrt_one(radicand);
        const WSeries one_wz2 = wpoly({1, 0, w}, order);
        kb.Pw = (one_wz2 + *kb.Ww) * WPolynomial(half);
        kb.Qw = (one_wz2 - *kb.Ww) * WPolynomial(half);
    }
    return kb;
}

// ---- primal ----

namespace {

QSeries primal_numerator(PrimalClass cls, const KernelBundle& kb)
{
    const int N = kb.order;
    switch (cls) {
    case PrimalClass::f:
        return poly({1, 0, 1}, N) + kb.W;
    case PrimalClass::g:
        return poly({1, 0, -1}, N) - kb.W;
    case PrimalClass::h:
        return poly({1, 0, -3}, N) - kb.W;
    case PrimalClass::total:
        break;
    }
    return poly({3, 0, -3}, N) - kb.W;
}

}  // namespace

// [u^j] (num / (2z(r1 - u))) = z^j num / (2 P^{j+1})
QSeries primal_level_series(int j, PrimalClass cls, int order)
{
    require_level(j, "primal_level_series");
    const KernelBundle kb = kernel_bundle(order);
    const QSeries body = primal_numerator(cls, kb) * power(inverse(kb.P), j + 1) * half;
    return shift_multiply(body, j).truncated(order);
}

ULinearRational<Rational> primal_bivariate(PrimalClass cls, int order)
{
    const KernelBundle kb = kernel_bundle(order);
    return {{primal_numerator(cls, kb)}, kb.P * Rational(2), poly({0, -2}, order)};
}

QSeries primal_open_ended(int order)
{
    const KernelBundle kb = kernel_bundle(order + 1);
    // -((z+1)(z^2+3z-2) + (z+2)W) / (2z(z^2+2z-1))
    const QSeries num = -(poly({-2, 1, 4, 1}, order + 1) + poly({2, 1}, order + 1) * kb.W);
    return shift_divide(num, 1) / poly({-2, 4, 2}, order);
}

WSeries red_level_series(int j, int order)
{
    require_level(j, "red_level_series");
    const KernelBundle kb = kernel_bundle(order, true);
    const WPolynomial w = WPolynomial::w();
    const WSeries num = wpoly({2 + w, 0, -(2 * w + w * w)}, order) - WSeries(*kb.Ww) * w;
    const WSeries body = num * power(inverse(*kb.Pw), j + 1) * WPolynomial(half);
    return shift_multiply(body, j).truncated(order);
}

WSeries red_return_series_x(int order)
{
    const WPolynomial w = WPolynomial::w();
    const WSeries root = sqrt_one(wpoly({1, -(4 + 2 * w), 4 * w + w * w}, order + 1));
    return shift_divide(wpoly({1, -w}, order + 1) - root, 1) * WPolynomial(half);
}

IdentityReport substitution_identity_check(int order, Middle middle)
{
    IdentityReport report;
    if (middle == Middle::two_plus_w) {
        const WSeries s0 = red_return_series_x(order);
        const WSeries xv = WSeries::variable(order) / wpoly({1, WPolynomial::w() + 2, 1}, order);
        report.first_mismatch = first_mismatch(compose(s0, xv), wpoly({1, 1}, order));
    } else {
        const QSeries s0 = even_to_x(primal_level_series(0, PrimalClass::total, 2 * order));
        const QSeries xv = QSeries::variable(order) / poly({1, 3, 1}, order);
        report.first_mismatch = first_mismatch(compose(s0, xv), poly({1, 1}, order));
    }
    report.holds = !report.first_mismatch;
    return report;
}

// (-1+6x-5x^2+(1-3x)R) / (2(1-x)(1-5x)), R = sqrt(1-6x+5x^2)
QSeries average_red_series(int order)
{
    const QSeries R = sqrt_one(poly({1, -6, 5}, order));
    const QSeries num = poly({-1, 6, -5}, order) + poly({1, -3}, order) * R;
    return num / poly({2, -12, 10}, order);
}

QSeries average_red_by_derivative(int order)
{
    return map_coefficients<Rational>(red_return_series_x(order),
                                      [](const WPolynomial& p) { return p.derivative().evaluate(1); });
}

QSeries red_slice_closed(int k, int order)
{
    const QSeries R = sqrt_one(poly({1, -4}, order + 1));
    const QSeries inv = inverse(R).truncated(order);
    switch (k) {
    case 0:
        return shift_divide(constant(1, order + 1) - R, 1) * half;
    case 1:
        return (poly({1, -2}, order) - R.truncated(order)) * inv * half;
    case 2:
        return shift_multiply(power(inv, 3), 3).truncated(order);
    case 3:
        return shift_multiply(poly({1, -2}, order) * power(inv, 5), 4).truncated(order);
    case 4:
        return shift_multiply(poly({1, -4, 5}, order) * power(inv, 7), 5).truncated(order);
    default:
        break;
    }
    throw std::invalid_argument("red_slice_closed: closed forms exist only for k <= 4");
}

QSeries red_slice_extracted(int k, int order)
{
    if (k < 0) {
        throw std::invalid_argument("red_slice_extracted: negative k");
    }
    return w_slice(red_return_series_x(order), k);
}

QSeries red_w_power_slice(int k, int order)
{
    return k >= 0 && k <= 4 ? red_slice_closed(k, order) : red_slice_extracted(k, order);
}

// ---- dual ----

// z^j (3z^2-3+W) S^{j+1} / (2(z^2-2)), S = Q/z^2
QSeries dual_level_series(int j, DualClass cls, int order)
{
    require_level(j, "dual_level_series");
    if (cls != DualClass::total) {
        return extract_u(dual_bivariate(cls, order), j);
    }
    const KernelBundle kb = kernel_bundle(order + 2);
    const QSeries S = shift_divide(kb.Q, 2);
    const QSeries front = (poly({-3, 0, 3}, order) + kb.W.truncated(order)) / poly({-4, 0, 2}, order);
    return shift_multiply(front * power(S, j + 1), j).truncated(order);
}

// numerator / (-1 + (Q/z) u)
ULinearRational<Rational> dual_bivariate(DualClass cls, int order)
{
    const KernelBundle kb = kernel_bundle(order + 2);
    const QSeries qz = shift_divide(kb.Q, 1).truncated(order);
    const QSeries zero(order);
    const QSeries a0 = constant(-1, order);
    const QSeries a1 = zpow(1, order);
    const QSeries b0 = shift_divide((poly({1, 0, -2}, order + 2) - kb.W) * kb.Q, 2) / poly({-2, 0, 1}, order);
    const QSeries c1 = -zpow(1, order);

    std::vector<QSeries> num;
    switch (cls) {
    case DualClass::a:
        num = {a0, a1};
        break;
    case DualClass::b:
        num = {b0};
        break;
    case DualClass::c:
        num = {zero, c1};
        break;
    case DualClass::total:
        num = {a0 + b0, a1 + c1};
        break;
    }
    return {std::move(num), constant(-1, order), qz};
}

// ((1+z)(1-3z) - W) / (2z(z^2+2z-1))
QSeries dual_open_ended(int order)
{
    const KernelBundle kb = kernel_bundle(order + 1);
    return shift_divide(poly({1, -2, -3}, order + 1) - kb.W, 1) / poly({-2, 4, 2}, order);
}

WSeries dual_blue_g0(int order)
{
    const KernelBundle kb = kernel_bundle(order + 2, true);
    return shift_divide(wpoly({1, 0, -WPolynomial::w()}, order + 2) - *kb.Ww, 2) * WPolynomial(half);
}

// ---- below the axis ----

namespace {

struct Axis {
    QSeries f0, g0, h0;
};

// h0 = f0 z^4 / (Q(z^2-1) + 1 - 2z^2), g0 = (z^2 f0 + h0) / (1 - z^2)
Axis complete_axis(const QSeries& f0, const KernelBundle& kb)
{
    const int N = f0.order();
    const QSeries Q = kb.Q.truncated(N);
    const QSeries h0 = shift_multiply(f0, 4).truncated(N) / (Q * poly({-1, 0, 1}, N) + poly({1, 0, -2}, N));
    const QSeries g0 = (shift_multiply(f0, 2).truncated(N) + h0) / poly({1, 0, -1}, N);
    return {f0, g0, h0};
}

Axis true_axis(int order)
{
    const KernelBundle kb = kernel_bundle(order);
    const QSeries f0 = (poly({1, 0, -3}, order) + kb.W) / (kb.W * kb.P * Rational(2));
    return complete_axis(f0, kb);
}

QSeries pick(const Axis& a, AxisClass cls)
{
    switch (cls) {
    case AxisClass::f0:
        return a.f0;
    case AxisClass::g0:
        return a.g0;
    case AxisClass::h0:
        return a.h0;
    case AxisClass::sum:
        break;
    }
    return a.f0 + a.g0 + a.h0;
}

}  // namespace

QSeries negative_axis_series(AxisClass cls, int order) { return pick(true_axis(order), cls); }

QSeries negative_axis_reference_series(AxisClass cls, int order)
{
    const KernelBundle kb = kernel_bundle(order + 4);
    const QSeries two_minus_z2 = poly({4, 0, -2}, order);
    if (cls == AxisClass::sum) {
        return shift_divide(poly({1, 0, -3, 0, 2}, order + 4) - kb.W, 4) / two_minus_z2;
    }
    const QSeries f0 = shift_divide(poly({1, 0, 1}, order + 4) - kb.W, 2).truncated(order) / two_minus_z2;
    return pick(complete_axis(f0, kb), cls);
}

// numerator / (-P + z u)
ULinearRational<Rational> negative_upper_bivariate(PrimalClass cls, int order)
{
    const KernelBundle kb = kernel_bundle(order);
    const Axis ax = true_axis(order);
    const QSeries z2 = zpow(2, order);
    const QSeries sum = ax.f0 + ax.g0 + ax.h0;
    QSeries num(order);
    switch (cls) {
    case PrimalClass::f:
        num = z2 * sum - ax.f0;
        break;
    case PrimalClass::g:
        num = -(z2 * sum);
        break;
    case PrimalClass::h:
        num = -(z2 * (ax.g0 + ax.h0));
        break;
    case PrimalClass::total:
        num = z2 * sum - ax.f0 - z2 * sum - z2 * (ax.g0 + ax.h0);
        break;
    }
    return {{num}, -kb.P, zpow(1, order)};
}

// Level -i in u^i. s is the small kernel root z/P; the denominator is
// s(z^3-2z) + 1 + z^2 + (z^3-2z) u, whose constant part equals P.
ULinearRational<Rational> negative_lower_bivariate(PrimalClass cls, int order)
{
    const KernelBundle kb = kernel_bundle(order);
    const Axis ax = true_axis(order);
    const QSeries& f0 = ax.f0;
    const QSeries& g0 = ax.g0;
    const QSeries& h0 = ax.h0;
    const QSeries z = zpow(1, order);
    const QSeries z2 = zpow(2, order);
    const QSeries z3 = zpow(3, order);
    const QSeries s = shift_multiply(inverse(kb.P), 1).truncated(order);
    const QSeries one = constant(1, order);

    const std::vector<QSeries> A{Rational(2) * z2 * f0 + z2 * g0 + z2 * h0 + one - Rational(2) * s * z,
                                 Rational(-2) * z};
    const QSeries x0 = s * s * z2 - s * z - s * z3 * f0 - s * z3 * g0 + s * z * g0 - s * z * h0 + z2 * f0 - g0 +
                       z2 * h0;
    const QSeries x1 = s * z2 - z - z3 * f0 - z3 * g0 + z * g0 - z * h0;
    const std::vector<QSeries> B{-x0, -x1, -z2};
    const QSeries c0 = s * s * z2 - s * z3 * f0 - s * z3 * g0 + s * z * g0 - s * z * h0 + h0 - z2 * g0;
    const QSeries c1 = s * z2 - z3 * f0 - z3 * g0 + z * g0 - z * h0;
    const std::vector<QSeries> C{c0, c1, z2};

    std::vector<QSeries> num;
    switch (cls) {
    case PrimalClass::f:
        num = A;
        break;
    case PrimalClass::g:
        num = B;
        break;
    case PrimalClass::h:
        num = C;
        break;
    case PrimalClass::total:
        num = {A[0] + B[0] + C[0], A[1] + B[1] + C[1], B[2] + C[2]};
        break;
    }
    const QSeries k = z3 - Rational(2) * z;
    return {std::move(num), s * k + poly({1, 0, 1}, order), k};
}

QSeries negative_level_series(int j, PrimalClass cls, int order)
{
    if (j >= 0) {
        return extract_u(negative_upper_bivariate(cls, order), j);
    }
    return extract_u(negative_lower_bivariate(cls, order), -j);
}

std::string class_name(PrimalClass cls)
{
    switch (cls) {
    case PrimalClass::f:
        return "f";
    case PrimalClass::g:
        return "g";
    case PrimalClass::h:
        return "h";
    case PrimalClass::total:
        break;
    }
    return "total";
}

std::string class_name(DualClass cls)
{
    switch (cls) {
    case DualClass::a:
        return "a";
    case DualClass::b:
        return "b";
    case DualClass::c:
        return "c";
    case DualClass::total:
        break;
    }
    return "total";
}

}  // namespace skew::closed
