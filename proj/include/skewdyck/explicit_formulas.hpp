#pragma once

#include <stdexcept>
#include <vector>

#include "skewdyck/rational.hpp"
#include "skewdyck/series.hpp"
#include "skewdyck/wpolynomial.hpp"

namespace skew::formulas {

/// (1 + m t + t^2)^n with middle weight m (3, 2 or 2+w in practice).
template <SeriesRing R>
struct TrinomialSpec {
    int n = 0;
    R middle;
};

/// Rows of [t^k](1 + m t + t^2)^n for one fixed m, built on demand.
template <SeriesRing R>
class TrinomialTable
{
public:
    explicit TrinomialTable(R middle) : middle_(std::move(middle)), rows_{{R(1)}} {}

    const R& middle() const { return middle_; }

    R coefficient(int n, int k)
    {
        if (n < 0) {
            throw std::invalid_argument("trinomial: negative exponent");
        }
        if (k < 0 || k > 2 * n) {
            return R(0);
        }
        while (static_cast<int>(rows_.size()) <= n) {
            const auto& prev = rows_.back();
            std::vector<R> next(prev.size() + 2, R(0));
            for (std::size_t i = 0; i < prev.size(); ++i) {
                next[i] += prev[i];
                next[i + 1] += prev[i] * middle_;
                next[i + 2] += prev[i];
            }
            rows_.push_back(std::move(next));
        }
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

private:
    R middle_;
    std::vector<std::vector<R>> rows_;
};

template <SeriesRing R>
R trinomial(const TrinomialSpec<R>& spec, int k)
{
    TrinomialTable<R> table(spec.middle);
    return table.coefficient(spec.n, k);
}

/// lambda_{j;k} = [v^k] (1+v)^2 (1+2v)(1-v) / (v+2)^{j+1}, evaluated by the
/// five-term binomial expansion around v = -2 with
/// C(-m, k) = (-1)^k C(m+k-1, k).
Rational lambda_coeff(int j, int k);

/// [v^k] (1+v)^2 (1-v) (1+2v)^{-j}; always an integer.
Integer primal_kernel_coeff(int j, int k);

/// [z^{2m+j}] of the level-j generating function,
/// sum_{k<=m} kappa_{j;k} trinomial(m-1+j; 3; m-k). Requires m >= 1.
Integer primal_coeff_explicit(int j, int m);

/// The lambda-weighted sum sum_{k<=m+j+1} lambda_{j;k} trinomial(m-1+j; 3; m+j+1-k).
/// Kept for comparison only: it is not the path count (j=0, m=3 gives -73/32).
Rational primal_coeff_lambda_sum(int j, int m);

/// mu_{j;k} = [v^k] (3(v+2)^j - 7(v+2)^{j+1} + 5(v+2)^{j+2} - (v+2)^{j+3}).
Integer mu_coeff(int j, int k);

enum class DualSumBound { through_n, through_n_minus_one };

/// [z^{j+2N}] of the dual level-j generating function,
/// sum_k mu_{j;k} trinomial(N-1; 3; N-k). Only the inclusive bound k <= N
/// gives the path count; the other is selectable for comparison.
Integer dual_coeff_explicit(int j, int N, DualSumBound bound = DualSumBound::through_n);

/// [x^n] S(0) with red marker: T(n) + T(n-1) - T(n-2) - T(n-3),
/// T(k) = trinomial(n-1; 2+w; k). Requires n >= 1.
WPolynomial red_coeff_explicit(int n);

}  // namespace skew::formulas
