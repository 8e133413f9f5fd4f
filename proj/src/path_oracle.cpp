#include "skewdyck/path_oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>

namespace skew::oracle {

namespace {

void check_cap(int length, int cap)
{
    if (length < 0) {
        throw std::invalid_argument("negative path length");
    }
    if (length > cap) {
        throw cap_exceeded("brute-force length " + std::to_string(length) + " exceeds cap " + std::to_string(cap) +
                           "; use the level dp instead");
    }
}

// Depth-first generation with pruning on forbidden adjacency, the level
// floor of the bounded families and, when a target level is given, on
// whether it is still reachable.
template <typename Visit>
void walk(Family family, int max_length, std::optional<int> target, Visit&& visit)
{
    const bool bounded = family != Family::UnboundedSkew;
    const auto steps = alphabet(family);
    std::vector<StepKind> word;
    word.reserve(static_cast<std::size_t>(max_length));

    auto rec = [&](auto&& self, StepKind prev, int level, int colored) -> void {
        visit(word, prev, level, colored);
        const int len = static_cast<int>(word.size());
        if (len == max_length) {
            return;
        }
        for (StepKind s : steps) {
            if (is_forbidden_pair(family, prev, s)) {
                continue;
            }
            const int next = level + level_delta(s);
            if (bounded && next < 0) {
                continue;
            }
            if (target && std::abs(*target - next) > max_length - len - 1) {
                continue;
            }
            word.push_back(s);
            self(self, s, next, colored + (is_colored(s) ? 1 : 0));
            word.pop_back();
        }
    };
    rec(rec, layer_step(family, 0), 0, 0);
}

}  // namespace

std::vector<PathWord> enumerate(Family family, int length, std::optional<int> end_level, int cap)
{
    check_cap(length, cap);
    std::vector<PathWord> out;
    walk(family, length, end_level, [&](const std::vector<StepKind>& w, StepKind, int level, int) {
        if (static_cast<int>(w.size()) == length && (!end_level || *end_level == level)) {
            out.push_back(PathWord{family, w});
        }
    });
    return out;
}

CountTable count_table(Family family, int max_length, int cap)
{
    check_cap(max_length, cap);
    const int lo = family == Family::UnboundedSkew ? -max_length : 0;
    const int levels = max_length - lo + 1;
    // counts[((n * levels + level - lo) * 3 + layer) * (max_length + 1) + k]
    const auto k_dim = static_cast<std::size_t>(max_length + 1);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_length + 1) * static_cast<std::size_t>(levels) * 3 *
                                      k_dim);
    walk(family, max_length, std::nullopt, [&](const std::vector<StepKind>& w, StepKind last, int level, int colored) {
        const auto n = w.size();
        const auto idx = ((n * static_cast<std::size_t>(levels) + static_cast<std::size_t>(level - lo)) * 3 +
                          static_cast<std::size_t>(layer_of(last))) * k_dim + static_cast<std::size_t>(colored);
        ++counts[idx];
    });

    CountTable table(family, max_length, true);
    for (int n = 0; n <= max_length; ++n) {
        for (int level = lo; level <= max_length; ++level) {
            for (int layer = 0; layer < 3; ++layer) {
                for (int k = 0; k <= max_length; ++k) {
                    const auto idx = ((static_cast<std::size_t>(n) * static_cast<std::size_t>(levels) +
                                       static_cast<std::size_t>(level - lo)) * 3 + static_cast<std::size_t>(layer)) *
                                         k_dim + static_cast<std::size_t>(k);
                    if (counts[idx] != 0) {
                        table.add(n, level, layer_step(family, layer), k, Integer(static_cast<unsigned long>(counts[idx])));
                    }
                }
            }
        }
    }
    return table;
}

std::string render_ascii(const PathWord& word)
{
    const int n = word.length();
    int level = 0;
    int top = 0;
    int bottom = 0;
    // Step i occupies column i in band row min(level before, level after).
    std::vector<std::pair<int, char>> marks;
    for (StepKind s : word.steps) {
        const int next = level + level_delta(s);
        const int band = std::min(level, next);
        char glyph = level_delta(s) > 0 ? '/' : '\\';
        if (s == StepKind::DownRed) {
            glyph = 'R';
        } else if (s == StepKind::UpBlue) {
            glyph = 'B';
        }
        marks.emplace_back(band, glyph);
        top = std::max(top, band + 1);
        bottom = std::min(bottom, band);
        level = next;
    }

    std::string out;
    auto emit_row = [&](int band) {
        std::string row(static_cast<std::size_t>(n), ' ');
        for (int i = 0; i < n; ++i) {
            if (marks[static_cast<std::size_t>(i)].first == band) {
                row[static_cast<std::size_t>(i)] = marks[static_cast<std::size_t>(i)].second;
            }
        }
        while (!row.empty() && row.back() == ' ') {
            row.pop_back();
        }
        out += row;
        out += '\n';
    };
    for (int band = top - 1; band >= 0; --band) {
        emit_row(band);
    }
    out += std::string(static_cast<std::size_t>(std::max(n, 1)), '=');
    out += '\n';
    for (int band = -1; band >= bottom; --band) {
        emit_row(band);
    }
    return out;
}

PathWord reverse_to_dual(const PathWord& word)
{
    if (word.family != Family::BoundedSkew) {
        throw std::invalid_argument("reverse_to_dual expects a primal word");
    }
    PathWord out{Family::DualSkew, {}};
    for (auto it = word.steps.rbegin(); it != word.steps.rend(); ++it) {
        switch (*it) {
        case StepKind::Up:
            out.steps.push_back(StepKind::Down);
            break;
        case StepKind::DownBlack:
            out.steps.push_back(StepKind::UpBlack);
            break;
        case StepKind::DownRed:
            out.steps.push_back(StepKind::UpBlue);
            break;
        default:
            throw std::invalid_argument("reverse_to_dual: not a primal step");
        }
    }
    return out;
}

}  // namespace skew::oracle
