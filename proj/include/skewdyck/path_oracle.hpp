#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewdyck/count_table.hpp"
#include "skewdyck/paths.hpp"

namespace skew::oracle {

inline constexpr int default_brute_cap = 16;

class cap_exceeded : public std::length_error
{
public:
    using std::length_error::length_error;
};

/// All valid words of exactly `length` steps, optionally restricted to an
/// end level, in lexicographic step order (see skew::alphabet).
std::vector<PathWord> enumerate(Family family, int length, std::optional<int> end_level = std::nullopt,
                                int cap = default_brute_cap);

/// Brute-force count table with class and colored-edge refinement for all
/// lengths 0..max_length.
CountTable count_table(Family family, int max_length, int cap = default_brute_cap);

/// Grid picture of a path, one text row per level band, top row first.
/// '/' and '\' are plain steps, 'R' a red down step, 'B' a blue up step.
/// A row of '=' marks the x-axis (below the band [0,1]).
std::string render_ascii(const PathWord& word);

/// Reverse a primal word and swap roles (Up <-> Down, DownBlack -> UpBlack,
/// DownRed -> UpBlue). Maps bounded paths ending at 0 onto dual ones.
PathWord reverse_to_dual(const PathWord& word);

}  // namespace skew::oracle
