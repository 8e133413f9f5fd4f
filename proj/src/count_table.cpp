#include "skewdyck/count_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace skew {

CountTable::CountTable(Family family, int max_length, bool colored)
    : family_(family), max_length_(max_length), colored_(colored), levels_(0)
{
    if (max_length < 0) {
        throw std::invalid_argument("CountTable: negative max_length");
    }
    levels_ = max_level() - min_level() + 1;
    cells_.resize(static_cast<std::size_t>(max_length + 1) * static_cast<std::size_t>(levels_) * 3);
}

const std::vector<Integer>* CountTable::cell(int n, int level, int layer) const
{
    if (n < 0 || n > max_length_ || level < min_level() || level > max_level()) {
        return nullptr;
    }
    const auto idx = (static_cast<std::size_t>(n) * static_cast<std::size_t>(levels_) +
                      static_cast<std::size_t>(level - min_level())) * 3 + static_cast<std::size_t>(layer);
    return &cells_[idx];
}

std::vector<Integer>* CountTable::cell(int n, int level, int layer)
{
    return const_cast<std::vector<Integer>*>(std::as_const(*this).cell(n, level, layer));
}

void CountTable::add(int n, int level, StepKind last, int k, const Integer& amount)
{
    if (!belongs_to(family_, last)) {
        throw std::invalid_argument("CountTable::add: step kind not in family");
    }
    auto* c = cell(n, level, layer_of(last));
    if (c == nullptr) {
        throw std::out_of_range("CountTable::add: (n, level) outside table");
    }
    const int slot = colored_ ? k : 0;
    if (slot < 0) {
        throw std::invalid_argument("CountTable::add: negative colored count");
    }
    if (static_cast<int>(c->size()) <= slot) {
        c->resize(static_cast<std::size_t>(slot) + 1);
    }
    (*c)[static_cast<std::size_t>(slot)] += amount;
}

Integer CountTable::count(int n, int level, std::optional<StepKind> last, std::optional<int> k) const
{
    if (k && !colored_) {
        throw std::logic_error("CountTable::count: table does not track colored edges");
    }
    Integer total = 0;
    for (int layer = 0; layer < 3; ++layer) {
        if (last && layer_of(*last) != layer) {
            continue;
        }
        const auto* c = cell(n, level, layer);
        if (c == nullptr) {
            continue;
        }
        if (k) {
            if (*k >= 0 && *k < static_cast<int>(c->size())) {
                total += (*c)[static_cast<std::size_t>(*k)];
            }
        } else {
            for (const auto& v : *c) {
                total += v;
            }
        }
    }
    return total;
}

WPolynomial CountTable::colored_count(int n, int level, std::optional<StepKind> last) const
{
    std::vector<Rational> coeffs;
    for (int layer = 0; layer < 3; ++layer) {
        if (last && layer_of(*last) != layer) {
            continue;
        }
        const auto* c = cell(n, level, layer);
        if (c == nullptr) {
            continue;
        }
        if (coeffs.size() < c->size()) {
            coeffs.resize(c->size());
        }
        for (std::size_t k = 0; k < c->size(); ++k) {
            coeffs[k] += Rational((*c)[k]);
        }
    }
    return WPolynomial(std::move(coeffs));
}

QSeries CountTable::level_series(int level, std::optional<StepKind> last) const
{
    std::vector<Rational> coeffs;
    for (int n = 0; n <= max_length_; ++n) {
        coeffs.emplace_back(count(n, level, last));
    }
    return QSeries(std::move(coeffs), max_length_);
}

WSeries CountTable::colored_level_series(int level, std::optional<StepKind> last) const
{
    std::vector<WPolynomial> coeffs;
    for (int n = 0; n <= max_length_; ++n) {
        coeffs.push_back(colored_count(n, level, last));
    }
    return WSeries(std::move(coeffs), max_length_);
}

std::optional<std::string> first_difference(const CountTable& a, const CountTable& b)
{
    if (a.family() != b.family()) {
        return std::string("family mismatch");
    }
    const bool by_k = a.colored() && b.colored();
    const int top = std::min(a.max_length(), b.max_length());
    const int lo = std::min(a.min_level(), b.min_level());
    for (int n = 0; n <= top; ++n) {
        for (int level = lo; level <= top; ++level) {
            for (int layer = 0; layer < 3; ++layer) {
                const StepKind cls = layer_step(a.family(), layer);
                const auto ca = a.colored_count(n, level, cls);
                const auto cb = b.colored_count(n, level, cls);
                const bool same = by_k ? (ca == cb) : (a.count(n, level, cls) == b.count(n, level, cls));
                if (!same) {
                    return "n=" + std::to_string(n) + " j=" + std::to_string(level) + " class=" +
                           std::string(1, step_letter(a.family(), cls)) + ": " +
                           (by_k ? ca.to_list_string() : to_string(a.count(n, level, cls))) + " vs " +
                           (by_k ? cb.to_list_string() : to_string(b.count(n, level, cls)));
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace skew
