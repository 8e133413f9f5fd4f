#pragma once

#include <optional>
#include <string>

#include "skewdyck/count_table.hpp"
#include "skewdyck/paths.hpp"

namespace skew::dp {

/// Forward step-by-step counting over (level, class of last step). Same
/// semantics as the brute-force table but usable at any length. With the
/// color marker the table also records the number of colored steps.
CountTable dp_table(Family family, int max_length, bool with_color_marker = false);

struct RecursionReport {
    bool holds = true;
    long checked = 0;  // coefficient identities tested
    std::optional<std::string> first_violation;
};

/// Re-checks the level recursions of the table's family coefficientwise,
/// e.g. g_i = z f_{i+1} + z g_{i+1} + z h_{i+1} for the primal family, up to
/// z^max_length. Colored tables pick up a factor w on the colored class.
RecursionReport check_recursions(const CountTable& table, int max_length);

}  // namespace skew::dp
