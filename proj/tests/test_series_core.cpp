#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewdyck/rational.hpp"
#include "skewdyck/series.hpp"
#include "skewdyck/ulinear.hpp"
#include "skewdyck/wpolynomial.hpp"

using namespace skew;

namespace {

QSeries q(std::initializer_list<long> cs, int order)
{
    std::vector<Rational> v;
    for (long c : cs) {
        v.emplace_back(c);
    }
    return QSeries(std::move(v), order);
}

QSeries kernel_radicand(int order) { return q({1, 0, -6, 0, 5}, order); }

}  // namespace

TEST_CASE("rational basics")
{
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS(make_rational(1, 0));
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(-3, 2) == 6);  // (-3)(-4)/2
    CHECK(binomial(4, 7) == 0);
    CHECK(pow2(-3) == Rational(1, 8));
}

TEST_CASE("wpolynomial")
{
    const WPolynomial w = WPolynomial::w();
    const WPolynomial p = w * w + 4 * w + 5;
    CHECK(p.degree() == 2);
    CHECK(p.to_list_string() == "[5,4,1]");
    CHECK(p.to_string() == "w^2+4*w+5");
    CHECK((p - p).is_zero());
    CHECK((p * (w + 1)).degree() == 3);
    CHECK(p.evaluate(1) == 10);
    CHECK(p.derivative() == 2 * w + 4);
    // evaluation is multiplicative
    const WPolynomial r = 3 * w - 2;
    for (int at : {0, 1, -2}) {
        CHECK((p * r).evaluate(at) == p.evaluate(at) * r.evaluate(at));
    }
}

TEST_CASE("add")
{
    CHECK(q({1, 1}, 4) + q({1, -1}, 4) == q({2}, 4));
    const QSeries s = kernel_radicand(6);
    CHECK(s + QSeries(6) == s);
    CHECK(q({1, 0, 1}, 6) + q({1, 0, -3, 0, -2}, 6) == q({2, 0, -2, 0, -2}, 6));
    // order is the minimum
    CHECK((q({1}, 3) + q({1}, 5)).order() == 3);
}

TEST_CASE("mul")
{
    CHECK(q({1, 3, 1}, 6) * q({1, 3, 1}, 6) == q({1, 6, 11, 6, 1}, 6));
    const QSeries s = kernel_radicand(8);
    CHECK(s * QSeries::constant(1, 8) == s);
    const QSeries z = QSeries::variable(5);
    CHECK(z * z == QSeries::monomial(1, 2, 5));
    CHECK((z * QSeries::variable(3)).order() == 3);
}

TEST_CASE("div")
{
    const QSeries geo = QSeries::constant(1, 6) / q({1, -1}, 6);
    for (int n = 0; n <= 6; ++n) {
        CHECK(geo[n] == 1);
    }
    CHECK(kernel_radicand(10) / q({1, 0, -1}, 10) == q({1, 0, -5}, 10));
    const QSeries a = q({2, -1, 7, 0, 3}, 9);
    const QSeries b = q({3, 1, 0, -4}, 9);
    CHECK(a / b * b == a);
    CHECK_THROWS_AS(a / q({0, 1}, 9), series_error);
}

TEST_CASE("sqrt_one")
{
    CHECK(sqrt_one(QSeries::constant(1, 5)) == QSeries::constant(1, 5));
    const QSeries W = sqrt_one(kernel_radicand(16));
    CHECK(W * W == kernel_radicand(16));
    CHECK(W.coefficients()[2] == -3);
    CHECK(W.coefficients()[4] == -2);
    CHECK(W.coefficients()[6] == -6);
    const QSeries c = sqrt_one(q({1, -4}, 10));
    CHECK(c * c == q({1, -4}, 10));
    CHECK(c[1] == -2);
    CHECK(c[2] == -2);
    CHECK_THROWS_AS(sqrt_one(q({4, 1}, 3)), series_error);
}

TEST_CASE("shift_divide")
{
    CHECK(shift_divide(q({0, 0, 1, 0, 1}, 8), 2) == q({1, 0, 1}, 6));
    const QSeries W = sqrt_one(kernel_radicand(12));
    const QSeries s = shift_divide(q({1, 0, 1}, 12) - W, 2) * QSeries::constant(Rational(1, 2), 10);
    CHECK(s.order() == 10);
    CHECK(integer_coefficients(s) == std::vector<Integer>{2, 0, 1, 0, 3, 0, 10, 0, 36, 0, 137});
    CHECK_THROWS_AS(shift_divide(QSeries::constant(3, 4), 1), exactness_error);
}

TEST_CASE("compose")
{
    const QSeries f = q({4, -1, 2, 7}, 6);
    CHECK(compose(f, QSeries::variable(6)) == f);
    // 1/(1-x) at x = v/(1+3v+v^2): 1 + v - 2v^2 + ...
    const QSeries geo = QSeries::constant(1, 2) / q({1, -1}, 2);
    const QSeries xv = QSeries::monomial(1, 1, 2) / q({1, 3, 1}, 2);
    CHECK(compose(geo, xv) == q({1, 1, -2}, 2));
    CHECK_THROWS_AS(compose(f, q({1, 1}, 6)), series_error);
}

TEST_CASE("reversion")
{
    CHECK(reversion(QSeries::variable(7)) == QSeries::variable(7));
    const QSeries xv = QSeries::monomial(1, 1, 12) / q({1, 3, 1}, 12);
    const QSeries h = reversion(xv);
    CHECK(h[1] == 1);
    CHECK(h[2] == 3);
    CHECK(h[3] == 10);
    CHECK(compose(xv, h) == QSeries::variable(12));
    CHECK(reversion(h) == xv);

    const WPolynomial m = WPolynomial::w() + 2;
    const WSeries denom(std::vector<WPolynomial>{1, m, 1}, 8);
    const WSeries xw = WSeries::monomial(1, 1, 8) / denom;
    CHECK(compose(xw, reversion(xw)) == WSeries::variable(8));
    CHECK_THROWS_AS(reversion(q({0, 0, 1}, 4)), series_error);
}

TEST_CASE("w-evaluation commutes with arithmetic")
{
    const WPolynomial w = WPolynomial::w();
    const WSeries a(std::vector<WPolynomial>{1, w, 2 * w + 1, w * w}, 7);
    const WSeries b(std::vector<WPolynomial>{1, 0, -4 - w}, 7);
    for (int at : {0, 1, 3}) {
        CHECK(evaluate_w(a * b, at) == evaluate_w(a, at) * evaluate_w(b, at));
        CHECK(evaluate_w(a / b, at) == evaluate_w(a, at) / evaluate_w(b, at));
        CHECK(evaluate_w(sqrt_one(b), at) == sqrt_one(evaluate_w(b, at)));
    }
}

TEST_CASE("kernel roots multiply to z^2(2-z^2)")
{
    const int N = 20;
    const QSeries W = sqrt_one(kernel_radicand(N));
    const QSeries half = QSeries::constant(Rational(1, 2), N);
    const QSeries P = (q({1, 0, 1}, N) + W) * half;
    const QSeries Q = (q({1, 0, 1}, N) - W) * half;
    CHECK(P * Q == q({0, 0, 2, 0, -1}, N));
    CHECK(P + Q == q({1, 0, 1}, N));
}

TEST_CASE("extract_u")
{
    const int N = 16;
    ULinearRational<Rational> geo{{QSeries::constant(1, N)}, QSeries::constant(1, N), QSeries::constant(-1, N)};
    for (int j = 0; j < 5; ++j) {
        CHECK(extract_u(geo, j) == QSeries::constant(1, N));
    }
    CHECK_THROWS(extract_u(geo, -1));

    // S(u) = (3-3z^2-W)/(2P - 2zu)
    const QSeries W = sqrt_one(kernel_radicand(N));
    const QSeries num = q({3, 0, -3}, N) - W;
    const QSeries twoP = q({1, 0, 1}, N) + W;
    ULinearRational<Rational> S{{num}, twoP, q({0, -2}, N)};
    CHECK(integer_coefficients(extract_u(S, 0)) ==
          std::vector<Integer>{1, 0, 1, 0, 3, 0, 10, 0, 36, 0, 137, 0, 543, 0, 2219, 0, 9285});
    const auto s2 = integer_coefficients(extract_u(S, 2));
    CHECK(s2[2] == 1);
    CHECK(s2[4] == 3);
    CHECK(s2[6] == 10);
    CHECK(s2[8] == 37);

    ULinearRational<Rational> bad{{QSeries::constant(1, N)}, q({0, 1}, N), QSeries::constant(1, N)};
    CHECK_THROWS_AS(extract_u(bad, 0), series_error);
}

TEST_CASE("parity and x-rewrite")
{
    const QSeries a = q({1, 0, 3, 0, 5}, 5);
    CHECK(parity_vanishes(a, 0));
    CHECK_FALSE(parity_vanishes(a, 1));
    CHECK(even_to_x(a) == q({1, 3, 5}, 2));
    CHECK_THROWS_AS(even_to_x(q({1, 1}, 3)), exactness_error);
    CHECK_THROWS_AS(integer_coefficients(q({1}, 2) * QSeries::constant(Rational(1, 3), 2)), exactness_error);
}
