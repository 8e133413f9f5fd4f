#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "skewdyck/path_oracle.hpp"

using namespace skew;

namespace {

PathWord primal(std::string_view letters) { return parse_path_word(Family::BoundedSkew, letters); }

}  // namespace

TEST_CASE("is_valid")
{
    CHECK(is_valid(primal("")));
    CHECK(is_valid(primal("UD")));
    CHECK(is_valid(primal("UUDR")));
    CHECK_FALSE(is_valid(primal("UR")));
    CHECK_FALSE(is_valid(primal("UUDRU")));
    CHECK_FALSE(is_valid(primal("D")));
    CHECK(is_valid(parse_path_word(Family::UnboundedSkew, "DU")));
    CHECK_FALSE(is_valid(parse_path_word(Family::UnboundedSkew, "R")));
    CHECK(is_valid(parse_path_word(Family::DualSkew, "Uud")));
    CHECK_FALSE(is_valid(parse_path_word(Family::DualSkew, "Ud")));
    CHECK_FALSE(is_valid(parse_path_word(Family::DualSkew, "udU")));
    CHECK_FALSE(is_valid(parse_path_word(Family::DualSkew, "uUd")));
}

TEST_CASE("enumerate")
{
    CHECK(oracle::enumerate(Family::BoundedSkew, 6, 0).size() == 10);
    CHECK(oracle::enumerate(Family::DualSkew, 6, 0).size() == 10);
    const auto empty = oracle::enumerate(Family::BoundedSkew, 0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].steps.empty());

    const auto words = oracle::enumerate(Family::BoundedSkew, 8);
    for (std::size_t i = 0; i < words.size(); ++i) {
        CHECK(is_valid(words[i]));
        if (i > 0) {
            CHECK(std::lexicographical_compare(words[i - 1].steps.begin(), words[i - 1].steps.end(),
                                               words[i].steps.begin(), words[i].steps.end()));
        }
    }
    CHECK_THROWS_AS(oracle::enumerate(Family::BoundedSkew, 17), oracle::cap_exceeded);
    CHECK(oracle::enumerate(Family::BoundedSkew, 17, std::nullopt, 17).size() > 0);
}

TEST_CASE("count_table")
{
    const CountTable primal_table = oracle::count_table(Family::BoundedSkew, 10);
    CHECK(primal_table.count(7, 1) == 21);
    CHECK(primal_table.colored_count(6, 0) == WPolynomial{5, 4, 1});
    const CountTable neg = oracle::count_table(Family::UnboundedSkew, 8);
    CHECK(neg.count(4, 0, StepKind::DownRed) == 1);
    CHECK(neg.min_level() == -8);
    CHECK_THROWS_AS(oracle::count_table(Family::DualSkew, 20), oracle::cap_exceeded);

    // class and k refinements add up
    for (int n = 0; n <= 10; ++n) {
        for (int j = 0; j <= n; ++j) {
            Integer by_class = 0;
            for (StepKind s : alphabet(Family::BoundedSkew)) {
                by_class += primal_table.count(n, j, s);
            }
            Integer by_k = 0;
            for (int k = 0; k <= n; ++k) {
                by_k += primal_table.count(n, j, std::nullopt, k);
            }
            CHECK(by_class == primal_table.count(n, j));
            CHECK(by_k == primal_table.count(n, j));
        }
    }
}

TEST_CASE("level 0 totals and parity")
{
    const CountTable p = oracle::count_table(Family::BoundedSkew, 14);
    const CountTable d = oracle::count_table(Family::DualSkew, 14);
    const std::vector<long> a002212{1, 1, 3, 10, 36, 137, 543, 2219};
    for (int m = 0; m < 8; ++m) {
        CHECK(p.count(2 * m, 0) == a002212[static_cast<std::size_t>(m)]);
        CHECK(d.count(2 * m, 0) == a002212[static_cast<std::size_t>(m)]);
    }
    // w = 0 gives Catalan numbers
    const std::vector<long> catalan{1, 1, 2, 5, 14, 42, 132, 429};
    for (int m = 0; m < 8; ++m) {
        CHECK(p.count(2 * m, 0, std::nullopt, 0) == catalan[static_cast<std::size_t>(m)]);
    }
    for (int n = 0; n <= 14; ++n) {
        for (int j = 0; j <= 14; ++j) {
            if ((n - j) % 2 != 0) {
                CHECK(p.count(n, j) == 0);
                CHECK(d.count(n, j) == 0);
            }
        }
    }
}

TEST_CASE("reversal duality")
{
    for (int n = 0; n <= 12; n += 2) {
        const auto primal_words = oracle::enumerate(Family::BoundedSkew, n, 0);
        const auto dual_words = oracle::enumerate(Family::DualSkew, n, 0);
        std::set<std::string> images;
        for (const auto& w : primal_words) {
            const PathWord d = oracle::reverse_to_dual(w);
            CHECK(is_valid(d));
            CHECK(d.end_level() == 0);
            images.insert(d.letters());
        }
        std::set<std::string> targets;
        for (const auto& w : dual_words) {
            targets.insert(w.letters());
        }
        CHECK(images == targets);
    }
}

TEST_CASE("render_ascii")
{
    CHECK(oracle::render_ascii(primal("UD")) == "/\\\n==\n");
    CHECK(oracle::render_ascii(primal("")) == "=\n");
    CHECK(oracle::render_ascii(primal("UUDR")) == " /\\\n/  R\n====\n");
    CHECK(oracle::render_ascii(parse_path_word(Family::UnboundedSkew, "DU")) == "==\n\\/\n");
    CHECK(oracle::render_ascii(parse_path_word(Family::DualSkew, "Uu")).find('B') != std::string::npos);

    std::set<std::string> pictures;
    for (const auto& w : oracle::enumerate(Family::BoundedSkew, 6, 0)) {
        pictures.insert(oracle::render_ascii(w));
    }
    CHECK(pictures.size() == 10);
}
