#include "skewdyck/series.hpp"

namespace skew {

std::vector<Integer> integer_coefficients(const QSeries& a)
{
    std::vector<Integer> out;
    out.reserve(a.coefficients().size());
    for (int n = 0; n <= a.order(); ++n) {
        if (!is_integral(a[n])) {
            throw exactness_error("coefficient of z^" + std::to_string(n) + " is not integral: " + to_string(a[n]));
        }
        out.push_back(a[n].get_num());
    }
    return out;
}

std::string to_list_string(const QSeries& a)
{
    std::string out = "[";
    for (int n = 0; n <= a.order(); ++n) {
        out += (n ? "," : "") + to_string(a[n]);
    }
    return out + "]";
}

std::string to_list_string(const WSeries& a)
{
    std::string out = "[";
    for (int n = 0; n <= a.order(); ++n) {
        out += (n ? "," : "") + a[n].to_list_string();
    }
    return out + "]";
}

}  // namespace skew
