#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewdyck/level_dp.hpp"
#include "skewdyck/path_oracle.hpp"

using namespace skew;

TEST_CASE("dp examples")
{
    CHECK(dp::dp_table(Family::BoundedSkew, 12, false).count(12, 0) == 543);
    CHECK(dp::dp_table(Family::DualSkew, 6, false).count(6, 2) == 29);
    // walks that may dip below the axis: 1,2,7,29,127 at even lengths
    const CountTable neg = dp::dp_table(Family::UnboundedSkew, 8, false);
    CHECK(neg.count(8, 0) == 127);
    CHECK(neg.count(4, 0) == 7);
}

TEST_CASE("dp matches brute force")
{
    for (Family f : all_families) {
        const CountTable brute = oracle::count_table(f, 12);
        const CountTable dp = dp::dp_table(f, 12, true);
        CHECK_MESSAGE(!first_difference(brute, dp).has_value(), family_name(f));
    }
}

TEST_CASE("w = 1 specialization equals plain table")
{
    const CountTable marked = dp::dp_table(Family::BoundedSkew, 18, true);
    const CountTable plain = dp::dp_table(Family::BoundedSkew, 18, false);
    for (int n = 0; n <= 18; ++n) {
        for (int j = 0; j <= n; ++j) {
            CHECK(marked.colored_count(n, j).evaluate(1) == Rational(plain.count(n, j)));
            // each red step needs a matching descent
            CHECK(marked.colored_count(n, j).degree() <= n / 2);
        }
    }
}

TEST_CASE("check_recursions")
{
    for (bool colored : {false, true}) {
        const auto r = dp::check_recursions(dp::dp_table(Family::BoundedSkew, 20, colored), 20);
        CHECK(r.holds);
        CHECK(r.checked > 0);
    }
    CHECK(dp::check_recursions(dp::dp_table(Family::UnboundedSkew, 16, false), 16).holds);
    CHECK(dp::check_recursions(dp::dp_table(Family::DualSkew, 16, true), 16).holds);
    const auto trivial = dp::check_recursions(dp::dp_table(Family::BoundedSkew, 0, false), 0);
    CHECK(trivial.holds);

    CountTable broken = dp::dp_table(Family::BoundedSkew, 10, false);
    broken.add(6, 2, StepKind::DownBlack, 0, 1);
    const auto r = dp::check_recursions(broken, 10);
    CHECK_FALSE(r.holds);
    REQUIRE(r.first_violation.has_value());
}
