#include "cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <sstream>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string &input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = fixedpoint::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::size_t lines_starting_with(const std::string &text, char c) {
    std::size_t n = 0;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);)
        if (!line.empty() && line[0] == c)
            ++n;
    return n;
}

const std::string cp2_11 = R"({"fixed_points": [[2,1],[-1,1],[-1,-2]]})";
const std::string spurious = R"({"fixed_points": [[3,1],[-1,1],[-1,-3]]})";
const std::string s2 = R"({"fixed_points": [[1],[-1]]})";

} // namespace

TEST(CliCheck, PassExitsZero) {
    auto r = run({"check", "-"}, cp2_11);
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("overall            PASS"), std::string::npos);
}

TEST(CliCheck, FailNamesIdentityResidual) {
    auto r = run({"check", "-"}, spurious);
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("index_identities   FAIL\tindex=0"), std::string::npos);
    EXPECT_NE(r.out.find("residual=-t^2 + t^3"), std::string::npos);
}

TEST(CliCheck, Json) {
    auto r = run({"check", "-", "--json"}, spurious);
    EXPECT_EQ(r.code, 1);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["overall"], false);
    EXPECT_EQ(j["checks"][0]["witness"]["residual"], "-t^2 + t^3");
}

TEST(CliCheck, SelectedChecks) {
    auto r = run({"check", "-", "--checks", "weight_balance,parity"}, spurious);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.find("index_identities"), std::string::npos);
    EXPECT_EQ(run({"check", "-", "--checks", "nope"}, spurious).code, 2);
    EXPECT_EQ(run({"check", "-", "--force", "three_point_shape"}, s2).code, 1);
}

TEST(CliCheck, InputErrors) {
    auto zero = run({"check", "-"}, R"({"fixed_points": [[0,1]]})");
    EXPECT_EQ(zero.code, 2);
    EXPECT_NE(zero.err.find("zero weight at point 0"), std::string::npos);
    EXPECT_EQ(run({"check", "-"}, "not json").code, 2);
    EXPECT_EQ(run({"check", "/nonexistent/datum.json"}).code, 2);
    EXPECT_EQ(run({"check"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
}

TEST(CliEnumerate, Counts) {
    auto none = run({"enumerate", "--points", "1", "--half-dim", "2", "--max-weight", "3"});
    EXPECT_EQ(none.code, 0);
    EXPECT_EQ(lines_starting_with(none.out, '{'), 0u);

    auto three = run({"enumerate", "--points", "3", "--half-dim", "2", "--max-weight", "3"});
    EXPECT_EQ(three.code, 0);
    EXPECT_EQ(lines_starting_with(three.out, '{'), 3u);
    EXPECT_NE(three.out.find("# survivors: 3"), std::string::npos);

    auto two = run({"enumerate", "--points", "2", "--half-dim", "2", "--max-weight", "3"});
    EXPECT_EQ(lines_starting_with(two.out, '{'), 0u);
}

TEST(CliEnumerate, JsonSummary) {
    auto r = run({"enumerate", "--points", "3", "--half-dim", "2", "--max-weight", "4", "--json",
                  "--dedup-negation", "--threads", "2"});
    EXPECT_EQ(r.code, 0);
    std::istringstream is(r.out);
    std::vector<nlohmann::json> records;
    for (std::string line; std::getline(is, line);)
        records.push_back(nlohmann::json::parse(line));
    ASSERT_EQ(records.size(), 5u);
    EXPECT_TRUE(records[0].contains("fixed_points"));
    EXPECT_EQ(records.back()["summary"]["total"], 4);
    EXPECT_EQ(records.back()["summary"]["certified"], false);
}

TEST(CliEnumerate, Errors) {
    EXPECT_EQ(run({"enumerate", "--points", "0", "--half-dim", "2", "--max-weight", "3"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--points", "2"}).code, 2);
    auto cap = run({"enumerate", "--points", "3", "--half-dim", "2", "--max-weight", "4",
                    "--node-cap", "5"});
    EXPECT_EQ(cap.code, 3);
    EXPECT_NE(cap.err.find("node cap"), std::string::npos);
}

TEST(CliFamily, Examples) {
    auto cp = run({"family", "cp2", "--a", "1", "--b", "2"});
    EXPECT_EQ(cp.code, 0);
    EXPECT_EQ(cp.out, "{\"fixed_points\": [[3,1],[2,-1],[-2,-3]]}\n");
    EXPECT_EQ(run({"family", "sphere2", "--a", "2"}).out, "{\"fixed_points\": [[2],[-2]]}\n");
    EXPECT_EQ(run({"family", "cp2", "--a", "0", "--b", "1"}).code, 2);
    EXPECT_EQ(run({"family", "klein", "--a", "1"}).code, 2);
}

TEST(CliExpand, TwoSphere) {
    auto r = run({"expand", "-", "--index", "0"}, s2);
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("(1) / (1 - t)"), std::string::npos);
    EXPECT_NE(r.out.find("(-t) / (1 - t)"), std::string::npos);
    EXPECT_NE(r.out.find("sum: 1\n"), std::string::npos);
    EXPECT_NE(r.out.find("residual: 0\n"), std::string::npos);
}

TEST(CliExpand, Cp2TopIndex) {
    auto r = run({"expand", "-", "--index", "2", "--degree", "6"}, cp2_11);
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("constant: (-1)^2 N^2 = 1\n"), std::string::npos);
    EXPECT_NE(r.out.find("residual: 0\n"), std::string::npos);
    EXPECT_NE(r.out.find("series to t^6: 1 0 0 0 0 0 0\n"), std::string::npos);
}

TEST(CliExpand, FailureAndRange) {
    EXPECT_EQ(run({"expand", "-", "--index", "0"}, spurious).code, 1);
    EXPECT_EQ(run({"expand", "-", "--index", "3"}, cp2_11).code, 2);
    EXPECT_EQ(run({"expand", "-", "--index", "-1"}, cp2_11).code, 2);
}
