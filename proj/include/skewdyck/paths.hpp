#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace skew {

enum class Family : std::uint8_t {
    BoundedSkew,    // decorated Dyck paths: up, black down, red down; never below 0
    DualSkew,       // black up, blue up, down; never below 0
    UnboundedSkew,  // as BoundedSkew, but negative levels are allowed
};

enum class StepKind : std::uint8_t {
    Up,
    DownBlack,
    DownRed,
    UpBlack,
    UpBlue,
    Down,
};

inline constexpr std::array<Family, 3> all_families{Family::BoundedSkew, Family::DualSkew, Family::UnboundedSkew};

/// Steps of a family in lexicographic enumeration order.
std::span<const StepKind> alphabet(Family family);

int level_delta(StepKind step);

/// Red down steps and blue up steps.
bool is_colored(StepKind step);

/// States are layered by the step that leads into them. Layer 0 is the plain
/// step of the same direction as the colored one (Up, resp. UpBlack) and also
/// holds the empty path; layer 1 is the opposite-direction step; layer 2 the
/// colored step.
int layer_of(StepKind step);
StepKind layer_step(Family family, int layer);

/// The adjacency (prev, next) is one of the forbidden patterns of the family.
bool is_forbidden_pair(Family family, StepKind prev, StepKind next);

bool belongs_to(Family family, StepKind step);

/// primal: U D R; dual: u (black up) U (blue up) d.
char step_letter(Family family, StepKind step);
std::optional<StepKind> parse_step_letter(Family family, char letter);

std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

struct PathWord {
    Family family = Family::BoundedSkew;
    std::vector<StepKind> steps;

    int length() const { return static_cast<int>(steps.size()); }
    int end_level() const;
    int colored_count() const;
    // The class of the final state; the empty path sits in layer 0.
    StepKind last_class() const;
    std::string letters() const;

    friend bool operator==(const PathWord&, const PathWord&) = default;
};

PathWord parse_path_word(Family family, std::string_view letters);

/// No forbidden adjacency, and for the bounded families no prefix below 0.
/// The empty prefix behaves like a layer-0 step, so an unbounded path cannot
/// open with a red step.
bool is_valid(const PathWord& word);

}  // namespace skew
