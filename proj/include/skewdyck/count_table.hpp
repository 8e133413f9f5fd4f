#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewdyck/paths.hpp"
#include "skewdyck/rational.hpp"
#include "skewdyck/series.hpp"
#include "skewdyck/wpolynomial.hpp"

namespace skew {

/// Exact path counts indexed by (length n, end level j, last-step class,
/// colored-edge count k). Levels outside the table window count zero.
///
/// An uncolored table keeps everything at k = 0 and refuses queries that
/// name a specific k.
class CountTable
{
public:
    CountTable(Family family, int max_length, bool colored);

    Family family() const { return family_; }
    int max_length() const { return max_length_; }
    bool colored() const { return colored_; }
    int min_level() const { return family_ == Family::UnboundedSkew ? -max_length_ : 0; }
    int max_level() const { return max_length_; }

    /// Count with nullopt meaning "summed over".
    Integer count(int n, int level, std::optional<StepKind> last = std::nullopt,
                  std::optional<int> k = std::nullopt) const;

    /// Counts by colored-edge number as a polynomial in w.
    WPolynomial colored_count(int n, int level, std::optional<StepKind> last = std::nullopt) const;

    void add(int n, int level, StepKind last, int k, const Integer& amount);

    /// sum_n count(n, level, last) z^n, order max_length.
    QSeries level_series(int level, std::optional<StepKind> last = std::nullopt) const;
    WSeries colored_level_series(int level, std::optional<StepKind> last = std::nullopt) const;

    friend bool operator==(const CountTable&, const CountTable&) = default;

private:
    const std::vector<Integer>* cell(int n, int level, int layer) const;
    std::vector<Integer>* cell(int n, int level, int layer);

    Family family_;
    int max_length_;
    bool colored_;
    int levels_;
    std::vector<std::vector<Integer>> cells_;  // [(n * levels + level - min) * 3 + layer] -> counts by k
};

/// Describes the first entry (over lengths up to the smaller table, every
/// level, every class, and every k when both are colored) where the tables
/// differ; nullopt when they agree.
std::optional<std::string> first_difference(const CountTable& a, const CountTable& b);

}  // namespace skew
