#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "skewdyck/cli.hpp"

using namespace skew;
using namespace skew::cli;

namespace {

struct Run {
    int rc;
    std::string out;
    std::string err;
};

template <typename Fn>
Run capture(Fn&& fn)
{
    std::ostringstream out;
    std::ostringstream err;
    const int rc = fn(out, err);
    return {rc, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

}  // namespace

TEST_CASE("level ranges")
{
    CHECK(parse_level_range("0..3").hi == 3);
    CHECK(parse_level_range("-2..1").lo == -2);
    CHECK(parse_level_range("5").lo == 5);
    CHECK_THROWS_AS(parse_level_range("3..1"), usage_error);
    CHECK_THROWS_AS(parse_level_range("a..b"), usage_error);
}

TEST_CASE("table")
{
    TableOptions opt;
    opt.order = 14;
    const Run r = capture([&](auto& o, auto& e) { return cmd_table(opt, o, e); });
    CHECK(r.rc == exit_pass);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].rfind("family\tj\tz^0\tz^1", 0) == 0);
    CHECK(rows[1] == "primal\t0\t1\t0\t1\t0\t3\t0\t10\t0\t36\t0\t137\t0\t543\t0\t2219");
    CHECK(rows[3] == "primal\t2\t0\t0\t1\t0\t3\t0\t10\t0\t37\t0\t145\t0\t589\t0\t2455");

    opt.family = Family::DualSkew;
    opt.order = 17;
    const Run d = capture([&](auto& o, auto& e) { return cmd_table(opt, o, e); });
    CHECK(lines(d.out)[3] == "dual\t2\t0\t0\t4\t0\t8\t0\t29\t0\t111\t0\t442\t0\t1813\t0\t7609\t0\t32521\t0");

    // sources agree
    for (Source src : {Source::dp, Source::brute}) {
        TableOptions alt = opt;
        alt.order = 12;
        TableOptions ref = alt;
        alt.source = src;
        CHECK(capture([&](auto& o, auto& e) { return cmd_table(alt, o, e); }).out ==
              capture([&](auto& o, auto& e) { return cmd_table(ref, o, e); }).out);
    }

    TableOptions zero;
    zero.order = 0;
    CHECK(lines(capture([&](auto& o, auto& e) { return cmd_table(zero, o, e); }).out) ==
          std::vector<std::string>{"family\tj\tz^0", "primal\t0\t1", "primal\t1\t0", "primal\t2\t0", "primal\t3\t0"});
}

TEST_CASE("table records")
{
    TableOptions opt;
    opt.levels = {0, 0};
    opt.order = 6;
    opt.format = OutputFormat::record;
    opt.marked = true;
    const auto rows = lines(capture([&](auto& o, auto& e) { return cmd_table(opt, o, e); }).out);
    REQUIRE(rows.size() == 7);
    CHECK(rows[2] == "record family=primal j=0 n=2 value=[1]");
    CHECK(rows[6] == "record family=primal j=0 n=6 value=[5,4,1]");
    opt.source = Source::dp;
    CHECK(lines(capture([&](auto& o, auto& e) { return cmd_table(opt, o, e); }).out) == rows);

    opt.marked = false;
    opt.cls = "h";
    CHECK(lines(capture([&](auto& o, auto& e) { return cmd_table(opt, o, e); }).out)[4] ==
          "record family=primal j=0 n=4 value=1");
}

TEST_CASE("table usage errors")
{
    TableOptions opt;
    opt.family = Family::DualSkew;
    opt.marked = true;
    CHECK(capture([&](auto& o, auto& e) { return cmd_table(opt, o, e); }).rc == exit_usage);
    TableOptions brute;
    brute.source = Source::brute;
    brute.order = 20;
    CHECK(capture([&](auto& o, auto& e) { return cmd_table(brute, o, e); }).rc == exit_usage);
    TableOptions cls;
    cls.cls = "a";
    CHECK(capture([&](auto& o, auto& e) { return cmd_table(cls, o, e); }).rc == exit_usage);
    TableOptions neg;
    neg.levels = {-1, 0};
    CHECK(capture([&](auto& o, auto& e) { return cmd_table(neg, o, e); }).rc == exit_usage);
    CHECK_THROWS_AS(parse_family_or_throw("skew"), usage_error);
    CHECK_THROWS_AS(parse_format("json"), usage_error);
}

TEST_CASE("verify")
{
    VerifyOptions opt;
    opt.order = 6;
    opt.max_brute_length = 8;
    opt.families = {Family::BoundedSkew};
    const VerificationReport report = run_verification(opt);
    CHECK(report.passed());
    CHECK(report.records.size() >= 6);

    opt.inject_fault = true;
    const Run r = capture([&](auto& o, auto& e) { return cmd_verify(opt, o, e); });
    CHECK(r.rc == exit_mismatch);
    CHECK(r.out.find("status=fail locus=\"n=8 j=0") != std::string::npos);
    CHECK(r.out.find("overall=fail") != std::string::npos);
}

TEST_CASE("paths")
{
    PathsOptions opt;
    opt.end_level = 0;
    const auto rows = lines(capture([&](auto& o, auto& e) { return cmd_paths(opt, o, e); }).out);
    CHECK(rows.back() == "total\t10");
    CHECK(rows.front() == "1\tUUUDDD");
    opt.family = Family::DualSkew;
    CHECK(lines(capture([&](auto& o, auto& e) { return cmd_paths(opt, o, e); }).out).back() == "total\t10");
    opt.family = Family::BoundedSkew;
    opt.length = 1;
    CHECK(lines(capture([&](auto& o, auto& e) { return cmd_paths(opt, o, e); }).out).back() == "total\t0");
    opt.length = 30;
    CHECK(capture([&](auto& o, auto& e) { return cmd_paths(opt, o, e); }).rc == exit_usage);
}

TEST_CASE("stats-red")
{
    const auto rows = lines(capture([](auto& o, auto& e) { return cmd_stats_red(30, o, e); }).out);
    REQUIRE(rows.size() == 32);
    CHECK(rows[1] == "0\t1\t0\t0\t-\t-");
    CHECK(rows[4] == "3\t10\t6\t3/5\t1\t1.000000");
    CHECK(rows[31].substr(rows[31].size() - 8) == "1.015589");
}

TEST_CASE("oeis")
{
    const Run a = capture([](auto& o, auto& e) { return cmd_oeis("A002212", o, e); });
    CHECK(a.rc == exit_pass);
    CHECK(a.out.find("terms\t14") != std::string::npos);
    CHECK(capture([](auto& o, auto& e) { return cmd_oeis("A033321", o, e); }).rc == exit_pass);
    CHECK(capture([](auto& o, auto& e) { return cmd_oeis("A000045", o, e); }).rc == exit_usage);
}

TEST_CASE("deterministic output")
{
    VerifyOptions opt;
    opt.order = 10;
    opt.max_brute_length = 8;
    CHECK(capture([&](auto& o, auto& e) { return cmd_verify(opt, o, e); }).out ==
          capture([&](auto& o, auto& e) { return cmd_verify(opt, o, e); }).out);
}
