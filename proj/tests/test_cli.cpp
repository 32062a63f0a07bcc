#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#ifndef CBFS_CLI_PATH
#error "CBFS_CLI_PATH must point at the cbfs executable"
#endif

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string& args) {
    const std::string cmd = std::string(CBFS_CLI_PATH) + " " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("cbfs_cli_test_" + name);
    std::ofstream(path, std::ios::binary) << content;
    return path;
}

} // namespace

TEST(CliCount, TableValues) {
    EXPECT_EQ(run("count --q 3 --n 8 --set cbfs").out, "210\n");
    EXPECT_EQ(run("count --q 4 --n 9 --set cbfs").out, "7868\n");
    EXPECT_EQ(run("count --q 3 --n 0 --set motzkin --colors 1").out, "1\n");
    // colors default to q-2
    EXPECT_EQ(run("count --q 5 --n 6 --set motzkin").out, run("count --n 6 --set motzkin --colors 3").out);
}

TEST(CliCount, PartsAndBaseline) {
    EXPECT_EQ(run("count --q 3 --n 4 --set A").out, "4\n");
    EXPECT_EQ(run("count --q 3 --n 4 --set B").out, "2\n");
    EXPECT_EQ(run("count --q 3 --n 4 --set C").out, "1\n");
    EXPECT_EQ(run("count --q 3 --n 7 --set S").out, "88 k=2\n");
    EXPECT_EQ(run("count --q 3 --n 4 --set Sstar").out, "8 k=1\n");
}

TEST(CliCount, DomainErrorsExitTwo) {
    EXPECT_EQ(run("count --q 3 --n 3 --set S").code, 2);
    EXPECT_EQ(run("count --q 2 --n 5").code, 2);
    EXPECT_EQ(run("count --n 5 --set cbfs").code, 2);
    EXPECT_EQ(run("count --q 3 --n 5 --set D").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(CliGen, TernaryLengthFourListing) {
    const auto r = run("gen --q 3 --n 4 --set cbfs");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1100\n1120\n1210\n1220\n2120\n2210\n2220\n");
    EXPECT_EQ(run("gen --q 3 --n 3 --set cbfs").out, "110\n120\n210\n220\n");
    EXPECT_EQ(run("gen --q 3 --n 2 --set cbfs").code, 2);
}

TEST(CliGen, JsonAndFileOutput) {
    const auto path = std::filesystem::temp_directory_path() / "cbfs_cli_test_gen.json";
    ASSERT_EQ(run("gen --q 3 --n 4 --set B --format json --out " + path.string()).code, 0);
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    EXPECT_EQ(j["q"], 3);
    EXPECT_EQ(j["n"], 4);
    EXPECT_EQ(j["words"], nlohmann::json({"1120", "1210"}));
    EXPECT_EQ(j["provenance"], nlohmann::json({"B", "B"}));
}

TEST(CliGen, LimitGuard) {
    EXPECT_EQ(run("gen --q 3 --n 9 --limit 10").code, 2);
    EXPECT_EQ(run("gen --q 3 --n 9 --limit 10 --force").code, 0);
}

TEST(CliBaselineGen, Listing) {
    EXPECT_EQ(run("baseline-gen --k 2 --q 3 --n 4").out, "0011\n0012\n0021\n0022\n");
    EXPECT_EQ(run("baseline-gen --k 3 --q 3 --n 4").code, 2);
}

TEST(CliVerify, ConstructionPassesBothModes) {
    const auto six = temp_file("six.txt", run("gen --q 3 --n 6").out);
    const auto set = run("verify --in " + six.string() + " --q 3 --n 6 --mode set");
    EXPECT_EQ(set.code, 0);
    EXPECT_EQ(nlohmann::json::parse(set.out)["ok"], true);

    const auto five = temp_file("five.json", run("gen --q 3 --n 5 --format json").out);
    const auto ne = run("verify --in " + five.string() + " --mode nonexpandable");
    EXPECT_EQ(ne.code, 0);
    const auto j = nlohmann::json::parse(ne.out);
    EXPECT_EQ(j["kind"], "non-expandable");
    EXPECT_EQ(j["ok"], true);
}

TEST(CliVerify, ExampleTwoFailsWithWitness) {
    const auto pair = temp_file("pair.txt", "111001100\n110011010\n");
    const auto r = run("verify --in " + pair.string() + " --q 2");
    EXPECT_EQ(r.code, 1);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["ok"], false);
    EXPECT_EQ(j["witnesses"][0]["cross_bifix"], "1100");

    // not a valid starting point for a non-expandability check
    EXPECT_EQ(run("verify --in " + pair.string() + " --q 2 --mode nonexpandable").code, 2);
}

TEST(CliVerify, NonExpandableFailureExitsOne) {
    const auto partial = temp_file("partial.txt", "1100\n1120\n1210\n1220\n2120\n2210\n");
    const auto r = run("verify --in " + partial.string() + " --q 3 --mode nonexpandable");
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(nlohmann::json::parse(r.out)["unblocked"], nlohmann::json({"2220"}));
    EXPECT_EQ(run("verify --in " + partial.string() + " --q 3 --mode nonexpandable --limit 10").code, 2);
}

TEST(CliTable, DeterministicCsv) {
    const auto a = run("table --q 3..6 --n 3..16");
    const auto b = run("table --q 3..6 --n 3..16");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "n,cbfs_q3,cmp_q3,cbfs_q4,cmp_q4,cbfs_q5,cmp_q5,cbfs_q6,cmp_q6");
    EXPECT_NE(a.out.find("\n10,1350,1792,26731,27945,271136,208896,1787415,1028125\n"), std::string::npos);
    EXPECT_EQ(a.out.find('\r'), std::string::npos);
}

TEST(CliTable, JsonMatchesCsv) {
    const auto csv = run("table --q 5 --n 10 --compare S").out;
    EXPECT_EQ(csv, "n,cbfs_q5,cmp_q5\n10,271136,208896\n");
    const auto j = nlohmann::json::parse(run("table --q 5 --n 10 --compare S --format json").out);
    EXPECT_EQ(j["rows"][0]["entries"][0]["cbfs"], 271136);
    EXPECT_EQ(j["rows"][0]["entries"][0]["cmp"], 208896);
    EXPECT_EQ(j["rows"][0]["entries"][0]["cbfs_larger"], true);
    EXPECT_EQ(run("table --q 3 --n 7 --bold").out, "n,cbfs_q3,cmp_q3,bold_q3\n7,87,88,0\n");
    EXPECT_EQ(run("table --q 6..3").code, 2);
}
