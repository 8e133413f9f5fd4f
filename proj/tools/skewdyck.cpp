// skewdyck: coefficient tables, cross-validation and path listings for skew
// Dyck paths and their relatives.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "skewdyck/cli.hpp"

using namespace skew;

int main(int argc, char** argv)
{
    CLI::App app{"Skew Dyck path enumeration, four ways"};
    app.require_subcommand(1);

    std::string family = "primal";
    std::string levels = "0..3";
    std::string format = "tsv";
    std::string source = "closed";
    std::optional<std::string> cls;
    std::optional<int> end_level;
    std::string sequence;
    std::vector<std::string> verify_families;

    cli::TableOptions table;
    auto* t = app.add_subcommand("table", "coefficients of the level generating functions");
    t->add_option("--family", family, "primal | dual | unbounded")->capture_default_str();
    t->add_option("--levels", levels, "level range a..b")->capture_default_str();
    t->add_option("--order", table.order, "highest power of z")->capture_default_str();
    t->add_option("--format", format, "tsv | record")->capture_default_str();
    t->add_option("--source", source, "closed | dp | brute")->capture_default_str();
    t->add_flag("--marked", table.marked, "coefficients as polynomials in w (colored steps)");
    t->add_option("--class", cls, "class of the last step: f g h (a b c for dual) or total");
    t->add_option("--max-brute-length", table.brute_cap, "brute-force length cap")->capture_default_str();

    cli::VerifyOptions verify;
    auto* v = app.add_subcommand("verify", "run the cross-validation matrix");
    v->add_option("--max-brute-length", verify.max_brute_length, "brute force up to this length")
        ->capture_default_str();
    v->add_option("--order", verify.order, "series order")->capture_default_str();
    v->add_option("--family", verify_families, "restrict to families (repeatable)");
    v->add_flag("--inject-fault", verify.inject_fault, "corrupt one dp entry; the run must fail");

    cli::PathsOptions paths;
    auto* p = app.add_subcommand("paths", "list (and draw) all paths of a length");
    p->add_option("--family", family, "primal | dual | unbounded")->capture_default_str();
    p->add_option("--length", paths.length, "number of steps")->capture_default_str();
    p->add_option("--end-level", end_level, "only paths ending at this level");
    p->add_flag("--render", paths.render, "ASCII picture after each word");
    p->add_option("--max-brute-length", paths.brute_cap, "brute-force length cap")->capture_default_str();

    int stats_order = 30;
    auto* s = app.add_subcommand("stats-red", "average number of red steps by semilength");
    s->add_option("--order", stats_order, "largest semilength")->capture_default_str();

    auto* o = app.add_subcommand("oeis", "compare against an embedded OEIS prefix");
    o->add_option("id", sequence, "A002212 | A033321")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::exit_usage;
    }

    try {
        if (t->parsed()) {
            table.family = cli::parse_family_or_throw(family);
            table.levels = cli::parse_level_range(levels);
            table.format = cli::parse_format(format);
            table.source = cli::parse_source(source);
            table.cls = cls;
            return cli::cmd_table(table, std::cout, std::cerr);
        }
        if (v->parsed()) {
            if (!verify_families.empty()) {
                verify.families.clear();
                for (const auto& f : verify_families) {
                    verify.families.insert(cli::parse_family_or_throw(f));
                }
            }
            return cli::cmd_verify(verify, std::cout, std::cerr);
        }
        if (p->parsed()) {
            paths.family = cli::parse_family_or_throw(family);
            paths.end_level = end_level;
            return cli::cmd_paths(paths, std::cout, std::cerr);
        }
        if (s->parsed()) {
            return cli::cmd_stats_red(stats_order, std::cout, std::cerr);
        }
        return cli::cmd_oeis(sequence, std::cout, std::cerr);
    } catch (const cli::usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::exit_usage;
    }
}
