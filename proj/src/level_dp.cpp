#include "skewdyck/level_dp.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace skew::dp {

namespace {

struct Transition {
    int from;  // layer
    StepKind step;
};

// Allowed continuations out of each layer, written from the state diagrams.
std::vector<Transition> transitions(Family family)
{
    if (family == Family::DualSkew) {
        return {
            {0, StepKind::UpBlack}, {0, StepKind::UpBlue}, {0, StepKind::Down},
            {1, StepKind::UpBlack}, {1, StepKind::Down},
            {2, StepKind::UpBlack}, {2, StepKind::UpBlue},
        };
    }
    return {
        {0, StepKind::Up}, {0, StepKind::DownBlack},
        {1, StepKind::Up}, {1, StepKind::DownBlack}, {1, StepKind::DownRed},
        {2, StepKind::DownBlack}, {2, StepKind::DownRed},
    };
}

using Cell = std::vector<Integer>;  // by colored count

void accumulate(Cell& into, const Cell& from, int shift)
{
    if (into.size() < from.size() + static_cast<std::size_t>(shift)) {
        into.resize(from.size() + static_cast<std::size_t>(shift));
    }
    for (std::size_t k = 0; k < from.size(); ++k) {
        into[k + static_cast<std::size_t>(shift)] += from[k];
    }
}

}  // namespace

CountTable dp_table(Family family, int max_length, bool with_color_marker)
{
    if (max_length < 0) {
        throw std::invalid_argument("dp_table: negative max_length");
    }
    CountTable table(family, max_length, with_color_marker);
    const int lo = table.min_level();
    const int hi = table.max_level();
    const auto width = static_cast<std::size_t>(hi - lo + 1);
    const bool bounded = family != Family::UnboundedSkew;
    const auto moves = transitions(family);

    // state[level - lo][layer]
    std::vector<std::array<Cell, 3>> state(width);
    state[static_cast<std::size_t>(-lo)][0] = Cell{1};

    for (int n = 0;; ++n) {
        for (int level = lo; level <= hi; ++level) {
            const auto& here = state[static_cast<std::size_t>(level - lo)];
            for (int layer = 0; layer < 3; ++layer) {
                const Cell& c = here[static_cast<std::size_t>(layer)];
                for (std::size_t k = 0; k < c.size(); ++k) {
                    if (c[k] != 0) {
                        table.add(n, level, layer_step(family, layer), static_cast<int>(k), c[k]);
                    }
                }
            }
        }
        if (n == max_length) {
            break;
        }
        std::vector<std::array<Cell, 3>> next(width);
        for (int level = lo; level <= hi; ++level) {
            const auto& here = state[static_cast<std::size_t>(level - lo)];
            for (const auto& t : moves) {
                const Cell& c = here[static_cast<std::size_t>(t.from)];
                if (c.empty()) {
                    continue;
                }
                const int to = level + level_delta(t.step);
                if ((bounded && to < 0) || to < lo || to > hi) {
                    continue;
                }
                const int shift = with_color_marker && is_colored(t.step) ? 1 : 0;
                accumulate(next[static_cast<std::size_t>(to - lo)][static_cast<std::size_t>(layer_of(t.step))], c,
                           shift);
            }
        }
        state = std::move(next);
    }
    return table;
}

namespace {

// X_i = seed [i=0] + z * sum of sources at level i + offset.
struct Rule {
    int target;
    int offset;
    std::vector<int> sources;
    bool seeded;
};

std::vector<Rule> level_rules(Family family)
{
    if (family == Family::DualSkew) {
        return {
            {0, -1, {0, 1, 2}, true},  // a_{i+1} = z a_i + z b_i + z c_i, a_0 = 1
            {1, +1, {0, 1}, false},    // b_i = z a_{i+1} + z b_{i+1}
            {2, -1, {0, 2}, false},    // c_{i+1} = z a_i + z c_i
        };
    }
    return {
        {0, -1, {0, 1}, true},      // f_i = [i=0] + z f_{i-1} + z g_{i-1}
        {1, +1, {0, 1, 2}, false},  // g_i = z f_{i+1} + z g_{i+1} + z h_{i+1}
        {2, +1, {1, 2}, false},     // h_i = z g_{i+1} + z h_{i+1}
    };
}

}  // namespace

RecursionReport check_recursions(const CountTable& table, int max_length)
{
    if (max_length > table.max_length()) {
        throw std::invalid_argument("check_recursions: table shorter than requested length");
    }
    const Family family = table.family();
    const auto rules = level_rules(family);
    RecursionReport report;

    for (const auto& rule : rules) {
        const StepKind target = layer_step(family, rule.target);
        const WPolynomial marker = table.colored() && is_colored(target) ? WPolynomial::w() : WPolynomial(1);
        for (int level = table.min_level(); level <= table.max_level(); ++level) {
            for (int n = 0; n <= max_length; ++n) {
                WPolynomial rhs = rule.seeded && level == 0 && n == 0 ? WPolynomial(1) : WPolynomial(0);
                if (n > 0) {
                    WPolynomial sum;
                    for (int s : rule.sources) {
                        sum += table.colored_count(n - 1, level + rule.offset, layer_step(family, s));
                    }
                    rhs += marker * sum;
                }
                const WPolynomial lhs = table.colored_count(n, level, target);
                ++report.checked;
                if (lhs != rhs && report.holds) {
                    report.holds = false;
                    report.first_violation = std::string(family_name(family)) + " class " +
                                             std::string(1, step_letter(family, target)) + " level " +
                                             std::to_string(level) + " z^" + std::to_string(n) + ": table " +
                                             lhs.to_string() + ", recursion " + rhs.to_string();
                }
            }
        }
    }
    return report;
}

}  // namespace skew::dp
