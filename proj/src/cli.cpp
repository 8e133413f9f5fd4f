#include "skewdyck/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <utility>
#include <set>

#include "skewdyck/closed_forms.hpp"
#include "skewdyck/explicit_formulas.hpp"
#include "skewdyck/level_dp.hpp"
#include "skewdyck/path_oracle.hpp"

namespace skew::cli {

namespace {

const std::vector<long> a002212_prefix{1,     1,      3,      10,      36,      137,     543,
                                       2219,  9285,   39587,  171369,  751236,  3328218, 14878455};
// offset 0
const std::vector<long> a033321_prefix{1, 1, 2, 6, 21, 79, 311, 1265, 5275};

int parse_int(const std::string& text)
{
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw usage_error("not an integer: '" + text + "'");
    }
    if (used != text.size()) {
        throw usage_error("not an integer: '" + text + "'");
    }
    return value;
}

// Layer index of a class name within a family.
int class_layer(Family family, const std::string& name)
{
    const bool dual = family == Family::DualSkew;
    const std::map<std::string, int> names = dual ? std::map<std::string, int>{{"a", 0}, {"b", 1}, {"c", 2}}
                                                  : std::map<std::string, int>{{"f", 0}, {"g", 1}, {"h", 2}};
    const auto it = names.find(name);
    if (it == names.end()) {
        throw usage_error("unknown class '" + name + "' for family " + std::string(family_name(family)) +
                          (dual ? " (expected a, b, c or total)" : " (expected f, g, h or total)"));
    }
    return it->second;
}

closed::PrimalClass primal_class(std::optional<int> layer)
{
    if (!layer) {
        return closed::PrimalClass::total;
    }
    static constexpr std::array<closed::PrimalClass, 3> c{closed::PrimalClass::f, closed::PrimalClass::g,
                                                          closed::PrimalClass::h};
    return c[static_cast<std::size_t>(*layer)];
}

closed::DualClass dual_class(std::optional<int> layer)
{
    if (!layer) {
        return closed::DualClass::total;
    }
    static constexpr std::array<closed::DualClass, 3> c{closed::DualClass::a, closed::DualClass::b,
                                                        closed::DualClass::c};
    return c[static_cast<std::size_t>(*layer)];
}

std::vector<std::string> rational_cells(const QSeries& s)
{
    std::vector<std::string> out;
    for (const auto& c : s.coefficients()) {
        out.push_back(to_string(c));
    }
    return out;
}

std::vector<std::string> polynomial_cells(const WSeries& s)
{
    std::vector<std::string> out;
    for (const auto& c : s.coefficients()) {
        out.push_back(c.to_list_string());
    }
    return out;
}

}  // namespace

LevelRange parse_level_range(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int j = parse_int(text);
        return {j, j};
    }
    LevelRange r{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
    if (r.lo > r.hi) {
        throw usage_error("empty level range '" + text + "'");
    }
    return r;
}

OutputFormat parse_format(const std::string& text)
{
    if (text == "tsv") {
        return OutputFormat::tsv;
    }
    if (text == "record") {
        return OutputFormat::record;
    }
    throw usage_error("unknown format '" + text + "' (expected tsv or record)");
}

Source parse_source(const std::string& text)
{
    if (text == "closed") {
        return Source::closed;
    }
    if (text == "dp") {
        return Source::dp;
    }
    if (text == "brute") {
        return Source::brute;
    }
    throw usage_error("unknown source '" + text + "' (expected closed, dp or brute)");
}

Family parse_family_or_throw(const std::string& text)
{
    if (auto f = parse_family(text)) {
        return *f;
    }
    throw usage_error("unknown family '" + text + "' (expected primal, dual or unbounded)");
}

// ---- table ----

namespace {

std::vector<std::vector<std::string>> table_rows(const TableOptions& opt)
{
    if (opt.order < 0) {
        throw usage_error("order must be nonnegative");
    }
    if (opt.family != Family::UnboundedSkew && opt.levels.lo < 0) {
        throw usage_error("negative levels exist only for the unbounded family");
    }
    std::optional<int> layer;
    if (opt.cls && *opt.cls != "total") {
        layer = class_layer(opt.family, *opt.cls);
    }

    std::vector<std::vector<std::string>> rows;
    if (opt.source == Source::closed) {
        if (opt.marked && (opt.family != Family::BoundedSkew || layer)) {
            throw usage_error("marked closed forms exist for the primal family totals only; use --source dp");
        }
        for (int j = opt.levels.lo; j <= opt.levels.hi; ++j) {
            if (opt.marked) {
                rows.push_back(polynomial_cells(closed::red_level_series(j, opt.order)));
            } else if (opt.family == Family::BoundedSkew) {
                rows.push_back(rational_cells(closed::primal_level_series(j, primal_class(layer), opt.order)));
            } else if (opt.family == Family::DualSkew) {
                rows.push_back(rational_cells(closed::dual_level_series(j, dual_class(layer), opt.order)));
            } else {
                rows.push_back(rational_cells(closed::negative_level_series(j, primal_class(layer), opt.order)));
            }
        }
        return rows;
    }

    CountTable table = [&] {
        if (opt.source == Source::brute) {
            try {
                return oracle::count_table(opt.family, opt.order, opt.brute_cap);
            } catch (const oracle::cap_exceeded& e) {
                throw usage_error(e.what());
            }
        }
        return dp::dp_table(opt.family, opt.order, opt.marked);
    }();
    std::optional<StepKind> last;
    if (layer) {
        last = layer_step(opt.family, *layer);
    }
    for (int j = opt.levels.lo; j <= opt.levels.hi; ++j) {
        std::vector<std::string> row;
        for (int n = 0; n <= opt.order; ++n) {
            row.push_back(opt.marked ? table.colored_count(n, j, last).to_list_string()
                                     : to_string(table.count(n, j, last)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

int cmd_table(const TableOptions& opt, std::ostream& out, std::ostream& err)
{
    std::vector<std::vector<std::string>> rows;
    try {
        rows = table_rows(opt);
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    const std::string fam(family_name(opt.family));
    if (opt.format == OutputFormat::tsv) {
        out << "family\tj";
        for (int n = 0; n <= opt.order; ++n) {
            out << "\tz^" << n;
        }
        out << '\n';
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const int j = opt.levels.lo + static_cast<int>(r);
        if (opt.format == OutputFormat::tsv) {
            out << fam << '\t' << j;
            for (const auto& cell : rows[r]) {
                out << '\t' << cell;
            }
            out << '\n';
        } else {
            for (std::size_t n = 0; n < rows[r].size(); ++n) {
                out << "record family=" << fam << " j=" << j << " n=" << n << " value=" << rows[r][n] << '\n';
            }
        }
    }
    return exit_pass;
}

// ---- verify ----

bool VerificationReport::passed() const
{
    return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.passed; });
}

namespace {

std::string range_text(int lo, int hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

std::optional<std::string> compare(const QSeries& closed_form, const QSeries& reference, const std::string& where)
{
    if (auto n = first_mismatch(closed_form, reference)) {
        return where + " z^" + std::to_string(*n) + ": " + to_string(closed_form[*n]) + " vs " +
               to_string(reference[*n]);
    }
    return std::nullopt;
}

std::optional<std::string> compare(const WSeries& closed_form, const WSeries& reference, const std::string& where)
{
    if (auto n = first_mismatch(closed_form, reference)) {
        return where + " z^" + std::to_string(*n) + ": " + closed_form[*n].to_list_string() + " vs " +
               reference[*n].to_list_string();
    }
    return std::nullopt;
}

class Recorder
{
public:
    explicit Recorder(VerificationReport& report) : report_(report) {}

    // Runs one check; any exception is a failure with its message as locus.
    void run(const std::string& id, Family family, const std::string& levels, int order,
             const std::function<std::optional<std::string>()>& check)
    {
        CheckRecord rec{id, std::string(family_name(family)), levels, order, true, {}};
        try {
            if (auto locus = check()) {
                rec.passed = false;
                rec.locus = *locus;
            }
        } catch (const std::exception& e) {
            rec.passed = false;
            rec.locus = std::string("exception: ") + e.what();
        }
        report_.records.push_back(std::move(rec));
    }

private:
    VerificationReport& report_;
};

std::optional<std::string> check_dp_vs_closed(Family family, int order)
{
    const CountTable dp = dp::dp_table(family, order, false);
    const int lo = family == Family::UnboundedSkew ? -6 : 0;
    const int hi = family == Family::UnboundedSkew ? 6 : 8;
    for (int j = lo; j <= hi; ++j) {
        for (int layer = 0; layer < 3; ++layer) {
            const StepKind last = layer_step(family, layer);
            QSeries cf(order);
            if (family == Family::BoundedSkew) {
                cf = closed::primal_level_series(j, primal_class(layer), order);
            } else if (family == Family::DualSkew) {
                cf = closed::dual_level_series(j, dual_class(layer), order);
            } else {
                cf = closed::negative_level_series(j, primal_class(layer), order);
            }
            const std::string where =
                "j=" + std::to_string(j) + " class=" + std::string(1, step_letter(family, last));
            if (auto m = compare(cf, dp.level_series(j, last), where)) {
                return m;
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_explicit(Family family, int order)
{
    for (int j = 0; j <= 8; ++j) {
        if (family == Family::BoundedSkew) {
            const QSeries s = closed::primal_level_series(j, closed::PrimalClass::total, order);
            for (int m = 1; 2 * m + j <= order; ++m) {
                const Integer e = formulas::primal_coeff_explicit(j, m);
                if (Rational(e) != s[2 * m + j]) {
                    return "j=" + std::to_string(j) + " m=" + std::to_string(m) + ": explicit " + to_string(e) +
                           " vs closed " + to_string(s[2 * m + j]);
                }
            }
        } else {
            const QSeries s = closed::dual_level_series(j, closed::DualClass::total, order);
            for (int N = 1; j + 2 * N <= order; ++N) {
                const Integer e = formulas::dual_coeff_explicit(j, N);
                if (Rational(e) != s[j + 2 * N]) {
                    return "j=" + std::to_string(j) + " N=" + std::to_string(N) + ": explicit " + to_string(e) +
                           " vs closed " + to_string(s[j + 2 * N]);
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_prefix(const std::vector<Integer>& computed, const std::vector<long>& expected,
                                        std::size_t offset)
{
    for (std::size_t i = 0; i < computed.size() && i + offset < expected.size(); ++i) {
        if (computed[i] != expected[i + offset]) {
            return "term " + std::to_string(i + offset) + ": " + to_string(computed[i]) + " vs " +
                   std::to_string(expected[i + offset]);
        }
    }
    return std::nullopt;
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& opt)
{
    if (opt.order < 0 || opt.max_brute_length < 0) {
        throw usage_error("order and brute-force length must be nonnegative");
    }
    VerificationReport report;
    Recorder rec(report);
    const int B = opt.max_brute_length;
    const int N = opt.order;
    const int small = std::min(N, 20);
    bool fault_pending = opt.inject_fault;

    for (Family family : all_families) {
        if (!opt.families.count(family)) {
            continue;
        }
        const bool inject = std::exchange(fault_pending, false);
        rec.run("brute_vs_dp", family, "all", B, [&]() -> std::optional<std::string> {
            const CountTable brute = oracle::count_table(family, B, std::max(B, oracle::default_brute_cap));
            CountTable dp = dp::dp_table(family, B, true);
            if (inject) {
                dp.add(B, B % 2, layer_step(family, 1), 0, 1);
            }
            return first_difference(brute, dp);
        });
        rec.run("dp_recursions", family, "all", N, [&]() -> std::optional<std::string> {
            const auto r = dp::check_recursions(dp::dp_table(family, N, family == Family::BoundedSkew), N);
            return r.holds ? std::nullopt : r.first_violation;
        });

        if (family == Family::UnboundedSkew) {
            const int neg = std::min(N, closed::default_negative_order);
            rec.run("dp_vs_closed", family, range_text(-6, 6), neg, [&] { return check_dp_vs_closed(family, neg); });
            rec.run("reference_A033321", family, "0", neg, [&] {
                const QSeries sum = closed::negative_axis_reference_series(closed::AxisClass::sum, neg);
                return check_prefix(integer_coefficients(even_to_x(sum)), a033321_prefix, 1);
            });
            rec.run("axis_sum", family, "0", neg, [&] {
                return compare(closed::negative_axis_series(closed::AxisClass::sum, neg),
                               closed::negative_level_series(0, closed::PrimalClass::total, neg), "sum vs level 0");
            });
            continue;
        }

        rec.run("dp_vs_closed", family, range_text(0, 8), N, [&] { return check_dp_vs_closed(family, N); });
        rec.run("closed_vs_explicit", family, range_text(0, 8), N, [&] { return check_explicit(family, N); });
        rec.run("parity", family, range_text(0, 8), N, [&]() -> std::optional<std::string> {
            for (int j = 0; j <= 8; ++j) {
                const QSeries s = family == Family::BoundedSkew
                                      ? closed::primal_level_series(j, closed::PrimalClass::total, N)
                                      : closed::dual_level_series(j, closed::DualClass::total, N);
                if (!parity_vanishes(s, j)) {
                    return "j=" + std::to_string(j) + " has a coefficient of the wrong parity";
                }
            }
            return std::nullopt;
        });

        if (family == Family::DualSkew) {
            rec.run("dual_equals_primal_j0", family, "0", N, [&] {
                return compare(closed::dual_level_series(0, closed::DualClass::total, N),
                               closed::primal_level_series(0, closed::PrimalClass::total, N), "j=0");
            });
            rec.run("blue_return_series", family, "0", small, [&] {
                return compare(even_to_x(closed::dual_blue_g0(2 * small)), closed::red_return_series_x(small),
                               "G(0) vs S(0), x=z^2 and");
            });
            continue;
        }

        rec.run("kernel_bundle", family, "-", N, [&]() -> std::optional<std::string> {
            const closed::KernelBundle kb = closed::kernel_bundle(N, true);
            const WPolynomial w = WPolynomial::w();
            const QSeries rad(std::vector<Rational>{1, 0, -6, 0, 5}, N);
            const QSeries pq(std::vector<Rational>{0, 0, 2, 0, -1}, N);
            const QSeries sum(std::vector<Rational>{1, 0, 1}, N);
            const WSeries wr = WSeries(std::vector<WPolynomial>{1, 0, -w}, N) *
                               WSeries(std::vector<WPolynomial>{1, 0, -(4 + w)}, N);
            if (auto m = compare(kb.W * kb.W, rad, "W^2")) {
                return m;
            }
            if (auto m = compare(kb.P * kb.Q, pq, "PQ")) {
                return m;
            }
            if (auto m = compare(kb.P + kb.Q, sum, "P+Q")) {
                return m;
            }
            return compare(*kb.Ww * *kb.Ww, wr, "W_w^2");
        });
        rec.run("reference_A002212", family, "0", N, [&] {
            const QSeries s0 = closed::primal_level_series(0, closed::PrimalClass::total, N);
            return check_prefix(integer_coefficients(even_to_x(s0)), a002212_prefix, 0);
        });
        rec.run("substitution_3", family, "0", small, [&]() -> std::optional<std::string> {
            const auto r = closed::substitution_identity_check(small, closed::Middle::three);
            return r.holds ? std::nullopt : std::optional<std::string>("v^" + std::to_string(*r.first_mismatch));
        });
        rec.run("substitution_2+w", family, "0", small, [&]() -> std::optional<std::string> {
            const auto r = closed::substitution_identity_check(small, closed::Middle::two_plus_w);
            return r.holds ? std::nullopt : std::optional<std::string>("v^" + std::to_string(*r.first_mismatch));
        });
        rec.run("red_dp_vs_closed", family, range_text(0, 8), N, [&]() -> std::optional<std::string> {
            const CountTable dp = dp::dp_table(family, N, true);
            for (int j = 0; j <= 8; ++j) {
                if (auto m = compare(closed::red_level_series(j, N), dp.colored_level_series(j),
                                     "j=" + std::to_string(j))) {
                    return m;
                }
            }
            return std::nullopt;
        });
        rec.run("red_specializations", family, range_text(0, 8), N, [&]() -> std::optional<std::string> {
            for (int j = 0; j <= 8; ++j) {
                if (auto m = compare(evaluate_w(closed::red_level_series(j, N), 1),
                                     closed::primal_level_series(j, closed::PrimalClass::total, N),
                                     "w=1 j=" + std::to_string(j))) {
                    return m;
                }
            }
            const QSeries catalan = closed::red_slice_closed(0, N / 2);
            return compare(even_to_x(evaluate_w(closed::red_level_series(0, N), 0)), catalan, "w=0 j=0");
        });
        rec.run("red_slices", family, "0", small, [&]() -> std::optional<std::string> {
            for (int k = 0; k <= 4; ++k) {
                if (auto m = compare(closed::red_slice_closed(k, small), closed::red_slice_extracted(k, small),
                                     "k=" + std::to_string(k))) {
                    return m;
                }
            }
            return std::nullopt;
        });
        rec.run("red_average_routes", family, "0", N, [&] {
            return compare(closed::average_red_series(N), closed::average_red_by_derivative(N), "x-series");
        });
        rec.run("red_explicit", family, "0", small, [&]() -> std::optional<std::string> {
            const WSeries s0 = closed::red_return_series_x(small);
            for (int n = 1; n <= small; ++n) {
                const WPolynomial e = formulas::red_coeff_explicit(n);
                if (e != s0[n]) {
                    return "x^" + std::to_string(n) + ": explicit " + e.to_list_string() + " vs closed " +
                           s0[n].to_list_string();
                }
            }
            return std::nullopt;
        });
        rec.run("open_ended", family, "all", N, [&]() -> std::optional<std::string> {
            QSeries sum(N);
            for (int j = 0; j <= N; ++j) {
                sum += closed::primal_level_series(j, closed::PrimalClass::total, N);
            }
            return compare(closed::primal_open_ended(N), sum, "u=1");
        });
    }

    if (opt.families.count(Family::BoundedSkew) || opt.families.count(Family::DualSkew)) {
        const Family owner = opt.families.count(Family::BoundedSkew) ? Family::BoundedSkew : Family::DualSkew;
        rec.run("reversal_duality", owner, "0", B, [&]() -> std::optional<std::string> {
            for (int n = 0; n <= B; n += 2) {
                std::set<std::string> images;
                for (const auto& w : oracle::enumerate(Family::BoundedSkew, n, 0, std::max(B, oracle::default_brute_cap))) {
                    const PathWord d = oracle::reverse_to_dual(w);
                    if (!is_valid(d) || d.end_level() != 0) {
                        return "n=" + std::to_string(n) + ": image of " + w.letters() + " is not a dual path";
                    }
                    images.insert(d.letters());
                }
                std::set<std::string> duals;
                for (const auto& w : oracle::enumerate(Family::DualSkew, n, 0, std::max(B, oracle::default_brute_cap))) {
                    duals.insert(w.letters());
                }
                if (images != duals) {
                    return "n=" + std::to_string(n) + ": " + std::to_string(images.size()) + " images vs " +
                           std::to_string(duals.size()) + " dual paths";
                }
            }
            return std::nullopt;
        });
    }
    return report;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err)
{
    VerificationReport report;
    try {
        report = run_verification(opt);
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    for (const auto& r : report.records) {
        out << "check=" << r.id << " family=" << r.family << " levels=" << r.levels << " order=" << r.order
            << " status=" << (r.passed ? "pass" : "fail");
        if (!r.passed) {
            out << " locus=\"" << r.locus << '"';
        }
        out << '\n';
    }
    const bool ok = report.passed();
    out << "overall=" << (ok ? "pass" : "fail") << " checks=" << report.records.size() << '\n';
    return ok ? exit_pass : exit_mismatch;
}

// ---- paths ----

int cmd_paths(const PathsOptions& opt, std::ostream& out, std::ostream& err)
{
    std::vector<PathWord> words;
    try {
        words = oracle::enumerate(opt.family, opt.length, opt.end_level, opt.brute_cap);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
        out << i + 1 << '\t' << words[i].letters() << '\n';
        if (opt.render) {
            out << oracle::render_ascii(words[i]) << '\n';
        }
    }
    out << "total\t" << words.size() << '\n';
    return exit_pass;
}

// ---- stats-red ----

int cmd_stats_red(int order, std::ostream& out, std::ostream& err)
{
    if (order < 0) {
        err << "error: order must be nonnegative\n";
        return exit_usage;
    }
    const QSeries paths = even_to_x(closed::primal_level_series(0, closed::PrimalClass::total, 2 * order));
    const QSeries red = closed::average_red_series(order);
    out << "n\tpaths\tred_edges\taverage\tratio\tratio_decimal\n";
    for (int n = 0; n <= order; ++n) {
        const Rational average = red[n] / paths[n];
        out << n << '\t' << to_string(paths[n]) << '\t' << to_string(red[n]) << '\t' << to_string(average);
        if (n == 0) {
            out << "\t-\t-\n";
            continue;
        }
        const Rational ratio = average * 5 / n;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", ratio.get_d());
        out << '\t' << to_string(ratio) << '\t' << buf << '\n';
    }
    return exit_pass;
}

// ---- oeis ----

namespace {

std::string join(const std::vector<Integer>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + to_string(v[i]);
    }
    return s;
}

std::vector<Integer> to_integers(const std::vector<long>& v) { return {v.begin(), v.end()}; }

}  // namespace

int cmd_oeis(const std::string& id, std::ostream& out, std::ostream& err)
{
    std::vector<Integer> expected;
    std::vector<Integer> computed;
    if (id == "A002212") {
        expected = to_integers(a002212_prefix);
        const int terms = static_cast<int>(expected.size());
        computed = integer_coefficients(
            even_to_x(closed::primal_level_series(0, closed::PrimalClass::total, 2 * (terms - 1))));
        out << "source\tprimal paths returning to the axis, by semilength\n";
    } else if (id == "A033321") {
        // [x^n] of the reference level-0 sum is a(n+1)
        expected = to_integers(std::vector<long>(a033321_prefix.begin() + 1, a033321_prefix.end()));
        const int terms = static_cast<int>(expected.size());
        computed = integer_coefficients(
            even_to_x(closed::negative_axis_reference_series(closed::AxisClass::sum, 2 * (terms - 1))));
        out << "source\t(1-3z^2+2z^4-W)/(2z^4(2-z^2)) in x=z^2, terms a(1)..a(" << terms << ")\n";
    } else {
        err << "error: unknown sequence '" << id << "' (known: A002212, A033321)\n";
        return exit_usage;
    }
    const bool ok = expected == computed;
    out << "expected\t" << join(expected) << '\n';
    out << "computed\t" << join(computed) << '\n';
    out << "terms\t" << expected.size() << '\n';
    out << "status\t" << (ok ? "pass" : "fail") << '\n';
    return ok ? exit_pass : exit_mismatch;
}

}  // namespace skew::cli
