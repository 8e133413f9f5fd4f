#pragma once

#include <optional>
#include <string>

#include "skewdyck/series.hpp"
#include "skewdyck/ulinear.hpp"

namespace skew::closed {

inline constexpr int default_order = 40;
inline constexpr int default_negative_order = 24;

enum class PrimalClass { f, g, h, total };  // last step up, black down, red down
enum class DualClass { a, b, c, total };    // last step black up, down, blue up
enum class AxisClass { f0, g0, h0, sum };

/// W = sqrt(1-6z^2+5z^4), P = (1+z^2+W)/2, Q = (1+z^2-W)/2; P = z r1 and
/// Q = z r2 for the two kernel roots r1, r2. With the red marker:
/// W_w = sqrt(1-(4+2w)z^2+(4w+w^2)z^4), P_w, Q_w likewise.
struct KernelBundle {
    int order = 0;
    QSeries W, P, Q;
    std::optional<WSeries> Ww, Pw, Qw;
};

KernelBundle kernel_bundle(int order, bool with_w = false);

// ---- decorated Dyck paths, never below the axis ----

/// [u^j] of the level generating function, per class of the last step.
QSeries primal_level_series(int j, PrimalClass cls, int order = default_order);

/// The same family as one u-linear rational function, for extract_u.
ULinearRational<Rational> primal_bivariate(PrimalClass cls, int order = default_order);

/// Paths ending anywhere (u = 1).
QSeries primal_open_ended(int order = default_order);

/// Level j with red steps marked by w.
WSeries red_level_series(int j, int order = default_order);

/// S(0) with red marker, in x = z^2, straight from the radical.
WSeries red_return_series_x(int order = default_order);

enum class Middle { three, two_plus_w };

struct IdentityReport {
    bool holds = true;
    std::optional<int> first_mismatch;
};

/// S(0) at x = v/(1+m v+v^2) must be 1+v, m = 3 (plain) or 2+w (marked).
IdentityReport substitution_identity_check(int order, Middle middle = Middle::two_plus_w);

/// Total red steps over all paths returning to the axis, in x. The closed
/// form and d/dw S(0) at w = 1 are separate routes.
QSeries average_red_series(int order = default_order);
QSeries average_red_by_derivative(int order = default_order);

/// [w^k] S(0) in x. Closed forms exist for k <= 4; extraction works for any k.
QSeries red_slice_closed(int k, int order = default_order);
QSeries red_slice_extracted(int k, int order = default_order);
QSeries red_w_power_slice(int k, int order = default_order);

// ---- dual paths (black/blue up, down) ----

QSeries dual_level_series(int j, DualClass cls, int order = default_order);
ULinearRational<Rational> dual_bivariate(DualClass cls, int order = default_order);
QSeries dual_open_ended(int order = default_order);

/// G(0) with blue steps marked by w, in z.
WSeries dual_blue_g0(int order = default_order);

// ---- walks allowed below the axis ----

/// Generating functions of the walks ending at level 0, per last-step class.
QSeries negative_axis_series(AxisClass cls, int order = default_negative_order);

/// f0 = (1+z^2-W)/(2z^2(2-z^2)) and the sum (1-3z^2+2z^4-W)/(2z^4(2-z^2)),
/// g0 and h0 from the same level-0 relations as above. These do not count
/// the walks (they start 1,1,2,6,21 where the walks give 1,1,3,13,59) but
/// the sum reproduces A033321.
QSeries negative_axis_reference_series(AxisClass cls, int order = default_negative_order);

/// Any integer level. j >= 0 uses the upper u-linear forms, j <= 0 the lower
/// ones in u = level^-1.
QSeries negative_level_series(int j, PrimalClass cls, int order = default_negative_order);
ULinearRational<Rational> negative_upper_bivariate(PrimalClass cls, int order = default_negative_order);
ULinearRational<Rational> negative_lower_bivariate(PrimalClass cls, int order = default_negative_order);

std::string class_name(PrimalClass cls);
std::string class_name(DualClass cls);

}  // namespace skew::closed
