#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewdyck/paths.hpp"

namespace skew::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;

class usage_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct LevelRange {
    int lo = 0;
    int hi = 0;
};

/// "a..b" or a single integer.
LevelRange parse_level_range(const std::string& text);

enum class OutputFormat { tsv, record };
enum class Source { closed, dp, brute };

OutputFormat parse_format(const std::string& text);
Source parse_source(const std::string& text);
Family parse_family_or_throw(const std::string& text);

struct TableOptions {
    Family family = Family::BoundedSkew;
    LevelRange levels{0, 3};
    int order = 14;
    OutputFormat format = OutputFormat::tsv;
    Source source = Source::closed;
    bool marked = false;             // colored steps as powers of w
    std::optional<std::string> cls;  // f/g/h (a/b/c for dual) or total
    int brute_cap = 16;
};

/// tsv: header "family\tj\tz^0..." then one row per level.
/// record: "record family=<f> j=<j> n=<n> value=<v>" per coefficient, v an
/// integer or, when marked, a w-coefficient list "[c0,c1,...]".
int cmd_table(const TableOptions& opt, std::ostream& out, std::ostream& err);

struct VerifyOptions {
    int max_brute_length = 14;
    int order = 32;
    std::set<Family> families{Family::BoundedSkew, Family::DualSkew, Family::UnboundedSkew};
    bool inject_fault = false;  // corrupt one dp entry; the report must fail
};

struct CheckRecord {
    std::string id;
    std::string family;
    std::string levels;
    int order = 0;
    bool passed = true;
    std::string locus;  // first mismatch, empty on pass
};

struct VerificationReport {
    std::vector<CheckRecord> records;
    bool passed() const;
};

VerificationReport run_verification(const VerifyOptions& opt);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);

struct PathsOptions {
    Family family = Family::BoundedSkew;
    int length = 6;
    std::optional<int> end_level;
    bool render = false;
    int brute_cap = 16;
};

/// One line per word "<index>\t<letters>" (primal U D R, dual u U d), an
/// optional picture after each, then "total\t<count>".
int cmd_paths(const PathsOptions& opt, std::ostream& out, std::ostream& err);

/// Columns n, paths, red_edges, average, ratio (average over n/5, exact),
/// ratio_decimal. Row 0 has "-" for both ratios.
int cmd_stats_red(int order, std::ostream& out, std::ostream& err);

/// Recompute A002212 or A033321 and compare with the embedded prefix.
int cmd_oeis(const std::string& id, std::ostream& out, std::ostream& err);

}  // namespace skew::cli
