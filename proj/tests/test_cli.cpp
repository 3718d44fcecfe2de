#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using json = nlohmann::json;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = mdl::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class ConfigFile {
public:
    explicit ConfigFile(const std::string& body) {
        std::ofstream(path_) << body;
        setenv("MDL_CONFIG", path_.c_str(), 1);
    }
    ~ConfigFile() {
        unsetenv("MDL_CONFIG");
        std::remove(path_.c_str());
    }

private:
    std::string path_ = testing::TempDir() + "mdl_test_config";
};

}  // namespace

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"vector", "1", "1"}).code, 2);
    EXPECT_EQ(run({"vector", "1", "1", "0", "-g", "1"}).code, 2);
    EXPECT_EQ(run({"vector", "1", "x", "0", "-g", "4"}).code, 2);
    EXPECT_EQ(run({"collection", "3", "1", "3", "-g", "4"}).code, 2);  // outside H
    EXPECT_EQ(run({"collection", "1", "1", "0", "-g", "4", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
    EXPECT_EQ(run({"springer", "4", "3"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VectorJson) {
    const Invocation r = run({"vector", "-2", "1", "3", "-g", "6", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["command"], "vector");
    EXPECT_TRUE(j.contains("version"));
    EXPECT_EQ(j["results"]["dim"], 24);
    EXPECT_EQ(j["results"]["in_H"], false);
    EXPECT_EQ(j["results"]["in_H_normalized"], true);
    EXPECT_EQ(j["results"]["mu"], 3);
}

TEST(Cli, LargeIntegersAreStrings) {
    const Invocation r = run({"vector", "100000000000000000000", "1", "0", "-g", "3", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_TRUE(j["results"]["vector"][0].is_string());
    EXPECT_EQ(j["results"]["vector"][0], "100000000000000000000");
    EXPECT_TRUE(j["results"]["vector"][1].is_number_integer());
}

TEST(Cli, CollectionFormats) {
    const Invocation table = run({"collection", "1", "1", "0", "-g", "6"});
    ASSERT_EQ(table.code, 0);
    EXPECT_NE(table.out.find("fiber=G(2,5)"), std::string::npos);

    const Invocation j = run({"collection", "1", "1", "0", "-g", "6", "--format", "json"});
    const json doc = json::parse(j.out);
    EXPECT_EQ(doc["results"]["mu"], 2);
    EXPECT_EQ(doc["results"]["rows"].size(), 3u);
    EXPECT_EQ(doc["results"]["rows"][0]["strata"][2]["codim"], 6);
    EXPECT_TRUE(doc["results"]["violations"].empty());

    const Invocation dot = run({"collection", "1", "1", "0", "-g", "6", "--format", "dot"});
    EXPECT_EQ(dot.out.rfind("digraph collection {", 0), 0u);
    EXPECT_NE(dot.out.find("label=\"M(1,1,0)^2 dim=6 codim=6\""), std::string::npos);
    EXPECT_NE(dot.out.find("r0t2 -> r2t0 [style=dashed, label=\"G(2,5)\"]"), std::string::npos);
    EXPECT_NE(dot.out.find("r0t1 -> r0t0 [style=solid]"), std::string::npos);
}

TEST(Cli, GroupEnumeration) {
    const Invocation r = run({"group", "-g", "7", "--bfs-depth", "3", "--json"});
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["results"]["isometry_failures"], 0);
    EXPECT_EQ(j["results"]["gamma_failures"], 0);
    EXPECT_EQ(j["results"]["layer_sizes"][1], 5);
}

TEST(Cli, SpringerDeterministic) {
    const Invocation a = run({"springer", "6", "2", "--samples", "200", "--seed", "5", "--json"});
    const Invocation b = run({"springer", "6", "2", "--samples", "200", "--seed", "5", "--json"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const Invocation c = run({"springer", "6", "2", "--samples", "200", "--seed", "6", "--json"});
    EXPECT_NE(a.out, c.out);
}

TEST(Cli, ConfigPrecedence) {
    ConfigFile cfg("# defaults\nseed = 7\nsamples=50\n");
    const json from_file = json::parse(run({"springer", "4", "1", "--json"}).out);
    EXPECT_EQ(from_file["params"]["seed"], 7);
    EXPECT_EQ(from_file["params"]["samples"], 50);
    const json from_flag = json::parse(run({"springer", "4", "1", "--seed", "9", "--json"}).out);
    EXPECT_EQ(from_flag["params"]["seed"], 9);
    EXPECT_EQ(from_flag["params"]["samples"], 50);
}

TEST(Cli, BadConfigIsUsageError) {
    ConfigFile cfg("colour=blue\n");
    EXPECT_EQ(run({"springer", "4", "1"}).code, 2);
}

TEST(Cli, VerifySuiteExitCodes) {
    const Invocation ok = run({"verify", "--suite", "lattice", "--json", "--no-timestamp"});
    EXPECT_EQ(ok.code, 0) << ok.out;
    const json j = json::parse(ok.out);
    EXPECT_FALSE(j.contains("timestamp"));
    EXPECT_FALSE(j["results"]["checks"][0].contains("elapsed_seconds"));
    EXPECT_EQ(j["results"]["passed"], true);
    // the g=4 uniqueness check fails, see README
    EXPECT_EQ(run({"verify", "--suite", "corresp"}).code, 1);
}

TEST(Cli, MuExceptionsMatchesFixtureFormat) {
    const Invocation r = run({"mu-exceptions", "--g-max", "6", "--n-max", "2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("# g n scan closed_form\n", 0), 0u);
    EXPECT_NE(r.out.find("\n6 2 1 2\n"), std::string::npos);
}

TEST(Cli, ExecutableExitCode) {
    EXPECT_EQ(std::system(MDL_EXE " vector 1 1 0 -g 6 > /dev/null"), 0);
    const int status = std::system(MDL_EXE " bogus > /dev/null 2>&1");
    EXPECT_EQ(WEXITSTATUS(status), 2);
}
