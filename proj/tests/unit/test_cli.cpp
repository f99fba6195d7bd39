#include "ramsey/cli.hpp"
#include "ramsey/json_io.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace ramsey;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ArrowHolds) {
    auto r = run({"arrow", "--category", "direct", "--A", "lo:2", "--B", "lo:3", "--C", "lo:6", "--k", "2", "--t", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = Json::parse(r.out);
    EXPECT_TRUE(j["holds"].get<bool>());
    EXPECT_TRUE(j["counterexample"].is_null());
}

TEST(Cli, ArrowCounterexampleListsClassReps) {
    auto r = run({"arrow", "--A", "lo:2", "--B", "lo:3", "--C", "lo:5"});
    ASSERT_EQ(r.code, 0);
    auto j = Json::parse(r.out);
    EXPECT_FALSE(j["holds"].get<bool>());
    ASSERT_EQ(j["counterexample"].size(), 10u);
    EXPECT_EQ(j["counterexample"][0][0], Json::array({0, 1}));
}

TEST(Cli, EnumerateRsurj) {
    auto r = run({"enumerate", "rsurj", "--n", "3", "--m", "2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out)["count"], 3);
}

TEST(Cli, VerifySchemeDual) {
    auto r = run({"verify-scheme", "dual-linear", "--s-max", "3", "--n-max", "7"});
    ASSERT_EQ(r.code, 0);
    auto j = Json::parse(r.out);
    EXPECT_TRUE(j["failures"].empty());
    EXPECT_GT(j["checked"].get<int>(), 0);
}

TEST(Cli, WorkersDoNotChangeOutput) {
    std::vector<std::string> args = {"arrow", "--A", "lo:2", "--B", "lo:3", "--C", "lo:5"};
    auto one = run(args);
    args.insert(args.begin(), {"--workers", "4"});
    EXPECT_EQ(one.out, run(args).out);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"arrow", "--A", "blob:2", "--B", "lo:3", "--C", "lo:5"}).code, cli::malformed_input);
    EXPECT_EQ(run({"nonsense"}).code, cli::malformed_input);
    EXPECT_EQ(run({"star", "linear", "--h", "[0,", "--f", "{}"}).code, cli::malformed_input);
    auto capped = run({"--naive", "--cap-colorings", "8", "arrow", "--A", "lo:2", "--B", "lo:3", "--C", "lo:6"});
    EXPECT_EQ(capped.code, cli::structured_error);
    auto j = Json::parse(capped.out);
    EXPECT_EQ(j["error"]["code"], "cap_exceeded");
    EXPECT_EQ(j["error"]["required"], 32768);
    EXPECT_EQ(run({"arrow", "--A", "lo:4", "--B", "lo:3", "--C", "lo:5"}).code, cli::structured_error);
}

TEST(Cli, StarMatchesHandComputation) {
    auto r = run({"star", "dual-linear", "--h", R"({"cod":4,"values":[0,1,2,1,3]})", "--f", R"({"cod":1,"values":[0,0]})"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(Json::parse(r.out)["surjection"]["values"], Json::array({0, 0}));
}

TEST(Cli, StageRoundTripsThroughVerifyScheme) {
    const std::string path = testing::TempDir() + "stage.json";
    ASSERT_EQ(run({"fraisse-stage", "--age", "graph", "--rounds", "2", "--seed-size", "2", "--out", path}).code, 0);
    auto r = run({"verify-scheme", "enumerated:graph", "--stage", path, "--max-size", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(Json::parse(r.out)["failures"].empty());
}

TEST(Cli, SelftestSingleSuite) {
    auto r = run({"selftest", "--suite", "rigidsurj"});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(Json::parse(r.out)["passed"].get<bool>());
    EXPECT_EQ(run({"selftest", "--suite", "nope"}).code, cli::structured_error);
}
