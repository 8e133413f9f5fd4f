#include "skewdyck/paths.hpp"

#include <stdexcept>

namespace skew {

namespace {

constexpr std::array<StepKind, 3> primal_alphabet{StepKind::Up, StepKind::DownBlack, StepKind::DownRed};
constexpr std::array<StepKind, 3> dual_alphabet{StepKind::UpBlack, StepKind::UpBlue, StepKind::Down};

bool is_dual_step(StepKind step)
{
    return step == StepKind::UpBlack || step == StepKind::UpBlue || step == StepKind::Down;
}

}  // namespace

std::span<const StepKind> alphabet(Family family)
{
    return family == Family::DualSkew ? std::span<const StepKind>(dual_alphabet)
                                      : std::span<const StepKind>(primal_alphabet);
}

int level_delta(StepKind step)
{
    switch (step) {
    case StepKind::Up:
    case StepKind::UpBlack:
    case StepKind::UpBlue:
        return 1;
    case StepKind::DownBlack:
    case StepKind::DownRed:
    case StepKind::Down:
        return -1;
    }
    return 0;
}

bool is_colored(StepKind step) { return step == StepKind::DownRed || step == StepKind::UpBlue; }

int layer_of(StepKind step)
{
    switch (step) {
    case StepKind::Up:
    case StepKind::UpBlack:
        return 0;
    case StepKind::DownBlack:
    case StepKind::Down:
        return 1;
    case StepKind::DownRed:
    case StepKind::UpBlue:
        return 2;
    }
    return 0;
}

StepKind layer_step(Family family, int layer)
{
    static constexpr std::array<StepKind, 3> primal{StepKind::Up, StepKind::DownBlack, StepKind::DownRed};
    static constexpr std::array<StepKind, 3> dual{StepKind::UpBlack, StepKind::Down, StepKind::UpBlue};
    if (layer < 0 || layer > 2) {
        throw std::out_of_range("layer index");
    }
    return family == Family::DualSkew ? dual[static_cast<std::size_t>(layer)]
                                      : primal[static_cast<std::size_t>(layer)];
}

bool belongs_to(Family family, StepKind step) { return (family == Family::DualSkew) == is_dual_step(step); }

bool is_forbidden_pair(Family family, StepKind prev, StepKind next)
{
    if (family == Family::DualSkew) {
        return (prev == StepKind::Down && next == StepKind::UpBlue) ||
               (prev == StepKind::UpBlue && next == StepKind::Down);
    }
    return (prev == StepKind::Up && next == StepKind::DownRed) || (prev == StepKind::DownRed && next == StepKind::Up);
}

char step_letter(Family family, StepKind step)
{
    if (!belongs_to(family, step)) {
        throw std::invalid_argument("step does not belong to family");
    }
    switch (step) {
    case StepKind::Up:
        return 'U';
    case StepKind::DownBlack:
        return 'D';
    case StepKind::DownRed:
        return 'R';
    case StepKind::UpBlack:
        return 'u';
    case StepKind::UpBlue:
        return 'U';
    case StepKind::Down:
        return 'd';
    }
    return '?';
}

std::optional<StepKind> parse_step_letter(Family family, char letter)
{
    for (StepKind s : alphabet(family)) {
        if (step_letter(family, s) == letter) {
            return s;
        }
    }
    return std::nullopt;
}

std::string_view family_name(Family family)
{
    switch (family) {
    case Family::BoundedSkew:
        return "primal";
    case Family::DualSkew:
        return "dual";
    case Family::UnboundedSkew:
        return "unbounded";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name)
{
    for (Family f : all_families) {
        if (family_name(f) == name) {
            return f;
        }
    }
    return std::nullopt;
}

int PathWord::end_level() const
{
    int level = 0;
    for (StepKind s : steps) {
        level += level_delta(s);
    }
    return level;
}

int PathWord::colored_count() const
{
    int k = 0;
    for (StepKind s : steps) {
        k += is_colored(s) ? 1 : 0;
    }
    return k;
}

StepKind PathWord::last_class() const { return steps.empty() ? layer_step(family, 0) : steps.back(); }

std::string PathWord::letters() const
{
    std::string out;
    out.reserve(steps.size());
    for (StepKind s : steps) {
        out.push_back(step_letter(family, s));
    }
    return out;
}

PathWord parse_path_word(Family family, std::string_view letters)
{
    PathWord word{family, {}};
    for (char c : letters) {
        auto step = parse_step_letter(family, c);
        if (!step) {
            throw std::invalid_argument(std::string("unknown step letter '") + c + "' for family " +
                                        std::string(family_name(family)));
        }
        word.steps.push_back(*step);
    }
    return word;
}

bool is_valid(const PathWord& word)
{
    const bool bounded = word.family != Family::UnboundedSkew;
    StepKind prev = layer_step(word.family, 0);
    int level = 0;
    for (StepKind s : word.steps) {
        if (!belongs_to(word.family, s) || is_forbidden_pair(word.family, prev, s)) {
            return false;
        }
        level += level_delta(s);
        if (bounded && level < 0) {
            return false;
        }
        prev = s;
    }
    return true;
}

}  // namespace skew
