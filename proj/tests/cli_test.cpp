#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "turyn/cli.hpp"

namespace turyn {
namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code) {
    args.push_back("--json");
    const auto r = run(args);
    EXPECT_EQ(r.code, expected_code) << r.out << r.err;
    return json::parse(r.out);
}

TEST(CliVerify, FirstCounterexampleIsFalsified) {
    const auto j = run_json({"verify", "--rle", "+3,3,6,3,2,2", "--t", "9"}, 1);
    EXPECT_EQ(j.at("status"), "falsified");
    EXPECT_EQ(j.at("verdicts").at("audit").at("claims").at("iv").at("failing_k"), json::array({3}));
    EXPECT_EQ(j.at("verdicts").at("z"), "+-++-+-");

    const auto text = run({"verify", "--rle", "3,3,6,3,2,2", "--t", "9", "--pad", "20"});
    EXPECT_EQ(text.code, 1);
    EXPECT_NE(text.out.find("claim iv: FAILS (k = 3)"), std::string::npos) << text.out;
}

TEST(CliVerify, PremiseFailure) {
    const auto j = run_json({"verify", "--seq", "+++", "--t", "1"}, 1);
    EXPECT_EQ(j.at("status"), "premise_failed");
    EXPECT_FALSE(j.at("verdicts").at("audit").at("premise").at("minus_follows_run").get<bool>());
}

TEST(CliVerify, ClaimsHold) {
    const auto j = run_json({"verify", "--seq", "+++-+", "--t", "1"}, 0);
    EXPECT_EQ(j.at("status"), "ok");
}

TEST(CliVerify, UsageErrors) {
    EXPECT_EQ(run({"verify", "--rle", "+0,3", "--t", "1"}).code, 2);
    EXPECT_EQ(run({"verify", "--seq", "++x", "--t", "1"}).code, 2);
    EXPECT_EQ(run({"verify", "--t", "1"}).code, 2);
    EXPECT_EQ(run({"verify", "--seq", "+++-"}).code, 2);
    EXPECT_EQ(run({"verify", "--seq", "+++-", "--rle", "+3,1", "--t", "1"}).code, 2);
    EXPECT_EQ(run({"verify", "--seq", "+++-", "--t", "1", "--pad", "2"}).code, 2);
    EXPECT_EQ(run({"verify", "--seq", "+++-", "--t", "0"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(CliVerify, ParseErrorNamesPosition) {
    const auto r = run({"verify", "--rle", "+3,x", "--t", "1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("'x'"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("position 3"), std::string::npos) << r.err;
}

TEST(CliFalsify, Catalog) {
    const auto j = run_json({"falsify", "--catalog"}, 0);
    EXPECT_EQ(j.at("status"), "found");
    ASSERT_EQ(j.at("verdicts").at("records").size(), 4u);
    for (const auto& a : j.at("verdicts").at("audits")) EXPECT_TRUE(a.at("falsified").get<bool>());
}

TEST(CliFalsify, SearchAndEmpty) {
    const auto j = run_json({"falsify", "--p", "3", "--t", "9"}, 0);
    EXPECT_EQ(j.at("verdicts").at("records").at(0).at("rle"), "+3,3,6,3,2,2");
    const auto empty = run_json({"falsify", "--p", "3", "--t", "2"}, 1);
    EXPECT_EQ(empty.at("status"), "empty");
    EXPECT_EQ(run({"falsify", "--p", "2", "--t", "5"}).code, 2);
    EXPECT_EQ(run({"falsify", "--p", "3"}).code, 2);
    EXPECT_EQ(run({"falsify", "--catalog", "--family", "--p", "3"}).code, 2);
}

TEST(CliFalsify, Family) {
    const auto j = run_json({"falsify", "--family", "--p", "7"}, 0);
    EXPECT_EQ(j.at("verdicts").at("records").at(0).at("rle"), "+7,7,14,7,6,6");
    EXPECT_EQ(run({"falsify", "--family", "--p", "4"}).code, 2);
    EXPECT_EQ(run({"falsify", "--family"}).code, 2);
}

TEST(CliFalsify, WritesTabularCatalog) {
    const std::string path = ::testing::TempDir() + "turyn_catalog.tsv";
    const auto r = run({"falsify", "--p", "5", "--t", "26", "--out", path});
    EXPECT_EQ(r.code, 0);
    std::ifstream file(path);
    const auto records = read_catalog_table(file, RecordSource::search);
    EXPECT_EQ(records.size(), 6u);
    for (const auto& rec : records) EXPECT_NO_THROW(verify_record(rec));
    std::remove(path.c_str());
    EXPECT_EQ(run({"falsify", "--catalog", "--out", "/nonexistent-dir/x.tsv"}).code, 2);
}

TEST(CliFalsify, ReportsAreDeterministicAcrossThreads) {
    const auto a = run({"falsify", "--p", "5", "--t", "26", "--threads", "1", "--json"});
    const auto b = run({"falsify", "--p", "5", "--t", "26", "--threads", "1", "--json"});
    EXPECT_EQ(a.out, b.out);
    const auto c = run({"falsify", "--p", "5", "--t", "26", "--threads", "6", "--json"});
    EXPECT_EQ(json::parse(a.out).at("verdicts"), json::parse(c.out).at("verdicts"));
}

TEST(CliBarker, ListingAndScan) {
    const auto j = run_json({"barker", "--n", "13"}, 0);
    EXPECT_GT(j.at("verdicts").at("count").get<int>(), 0);
    EXPECT_EQ(j.at("verdicts").at("sequences").size(), j.at("verdicts").at("eq_k_profiles").size());

    const auto scan = run_json({"barker", "--odd-scan", "21"}, 0);
    for (const auto& e : scan.at("verdicts").at("scan")) EXPECT_EQ(e.at("count"), 0);
    EXPECT_FALSE(scan.at("verdicts").at("odd_barker_found").get<bool>());

    EXPECT_EQ(run({"barker", "--n", "1"}).code, 2);
    EXPECT_EQ(run({"barker", "--n", "65"}).code, 2);
    EXPECT_EQ(run({"barker"}).code, 2);
    EXPECT_EQ(run({"barker", "--n", "5", "--odd-scan", "21"}).code, 2);
}

TEST(CliBarker, ByteIdenticalReports) {
    const auto a = run({"barker", "--n", "11", "--json"});
    const auto b = run({"barker", "--n", "11", "--json", "--threads", "3"});
    EXPECT_EQ(json::parse(a.out).at("verdicts"), json::parse(b.out).at("verdicts"));
    EXPECT_EQ(a.out, run({"barker", "--n", "11", "--json"}).out);
}

TEST(CliRle, Conversions) {
    auto r = run({"rle", "decode", "+3,3,6,3,2,2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "+++---++++++---++--\n");
    r = run({"rle", "encode", "+++++"});
    EXPECT_EQ(r.out, "+5\n");
    EXPECT_EQ(run({"rle", "decode", "2,1"}).out, "++-\n");
    EXPECT_EQ(run({"rle", "encode"}).code, 2);
    EXPECT_EQ(run({"rle", "encode", ""}).code, 2);
    EXPECT_EQ(run({"rle", "decode", "+0"}).code, 2);
    EXPECT_EQ(run({"rle", "squash", "+++"}).code, 2);
}

TEST(CliReport, JsonParsesBackIntoRunReport) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"verify", "--rle", "+5,5,10,5,4,4", "--t", "16", "--json"},
             {"falsify", "--catalog", "--json"},
             {"barker", "--odd-scan", "17", "--json"},
             {"rle", "encode", "+-", "--json"}}) {
        const auto r = run(args);
        const auto report = json::parse(r.out).get<RunReport>();
        EXPECT_EQ(exit_code(report.status), r.code) << args[0];
        EXPECT_EQ(json(report).dump(2) + "\n", r.out);
    }
}

}  // namespace
}  // namespace turyn
