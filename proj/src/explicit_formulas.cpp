#include "skewdyck/explicit_formulas.hpp"

#include <array>
#include <string>

namespace skew::formulas {

namespace {

void require(bool ok, const char* what)
{
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

}  // namespace

Rational lambda_coeff(int j, int k)
{
    if (k < 0) {
        return 0;
    }
    // (1+v)^2(1+2v)(1-v) = -9 + 27(v+2) - 29(v+2)^2 + 13(v+2)^3 - 2(v+2)^4
    static constexpr std::array<long, 5> c{-9, 27, -29, 13, -2};
    Rational sum = 0;
    for (long i = 0; i < 5; ++i) {
        const long e = j + 1 - i;  // (v+2)^{-e}
        sum += Rational(c[static_cast<std::size_t>(i)]) * pow2(-(e + k)) * Rational(binomial(-e, k));
    }
    return sum;
}

Integer primal_kernel_coeff(int j, int k)
{
    if (k < 0) {
        return 0;
    }
    // (1+v)^2(1-v) = 1 + v - v^2 - v^3, times sum_i C(-j, i) (2v)^i
    static constexpr std::array<long, 4> c{1, 1, -1, -1};
    Integer sum = 0;
    for (int d = 0; d < 4 && d <= k; ++d) {
        const int i = k - d;
        Integer term = binomial(-j, i);
        term <<= static_cast<mp_bitcnt_t>(i);
        sum += c[static_cast<std::size_t>(d)] * term;
    }
    return sum;
}

Integer primal_coeff_explicit(int j, int m)
{
    require(j >= 0, "primal_coeff_explicit: level must be nonnegative");
    require(m >= 1, "primal_coeff_explicit: m must be at least 1");
    TrinomialTable<Rational> t(3);
    Rational sum = 0;
    for (int k = 0; k <= m; ++k) {
        sum += Rational(primal_kernel_coeff(j, k)) * t.coefficient(m - 1 + j, m - k);
    }
    if (!is_integral(sum)) {
        throw exactness_error("primal_coeff_explicit: sum " + to_string(sum) + " is not an integer");
    }
    return sum.get_num();
}

Rational primal_coeff_lambda_sum(int j, int m)
{
    require(j >= 0 && m >= 1, "primal_coeff_lambda_sum: need j >= 0, m >= 1");
    TrinomialTable<Rational> t(3);
    Rational sum = 0;
    for (int k = 0; k <= m + j + 1; ++k) {
        sum += lambda_coeff(j, k) * t.coefficient(m - 1 + j, m + j + 1 - k);
    }
    return sum;
}

Integer mu_coeff(int j, int k)
{
    if (k < 0) {
        return 0;
    }
    static constexpr std::array<long, 4> c{3, -7, 5, -1};
    Integer sum = 0;
    for (int i = 0; i < 4; ++i) {
        const int e = j + i;
        if (k > e) {
            continue;
        }
        Integer term = binomial(e, k);
        term <<= static_cast<mp_bitcnt_t>(e - k);
        sum += c[static_cast<std::size_t>(i)] * term;
    }
    return sum;
}

Integer dual_coeff_explicit(int j, int N, DualSumBound bound)
{
    require(j >= 0, "dual_coeff_explicit: level must be nonnegative");
    require(N >= 1, "dual_coeff_explicit: N must be at least 1");
    TrinomialTable<Rational> t(3);
    const int top = bound == DualSumBound::through_n ? N : N - 1;
    Integer sum = 0;
    for (int k = 0; k <= top; ++k) {
        sum += mu_coeff(j, k) * t.coefficient(N - 1, N - k).get_num();
    }
    return sum;
}

WPolynomial red_coeff_explicit(int n)
{
    require(n >= 1, "red_coeff_explicit: n must be at least 1");
    TrinomialTable<WPolynomial> t(WPolynomial::w() + 2);
    return t.coefficient(n - 1, n) + t.coefficient(n - 1, n - 1) - t.coefficient(n - 1, n - 2) -
           t.coefficient(n - 1, n - 3);
}

}  // namespace skew::formulas
