#include "mdl/verify.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

using namespace mdl::verify;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST(Verify, FixtureIsCurrent) {
    const auto frozen = parse_mu_exceptions(read_file(MDL_MU_FIXTURE));
    EXPECT_EQ(frozen, mu_closed_form_exceptions(30, 10));
    const auto hit = std::find_if(frozen.begin(), frozen.end(), [](const MuException& e) { return e.g == 6 && e.n == 2; });
    ASSERT_NE(hit, frozen.end());
    EXPECT_EQ(hit->scan, 1);
    EXPECT_EQ(hit->closed_form, "2");
}

TEST(Verify, ExceptionFormatRoundTrip) {
    const auto rows = mu_closed_form_exceptions(8, 4);
    EXPECT_EQ(parse_mu_exceptions(format_mu_exceptions(rows)), rows);
    EXPECT_THROW(parse_mu_exceptions("6 2 x\n"), std::runtime_error);
}

TEST(Verify, DerivedSeeds) {
    EXPECT_EQ(derive_seed(42, 3, 1), derive_seed(42, 3, 1));
    EXPECT_NE(derive_seed(42, 3, 1), derive_seed(42, 1, 3));
    EXPECT_NE(derive_seed(42, 3, 1), derive_seed(43, 3, 1));
}

TEST(Verify, CriteriaAreNumbered) {
    const auto criteria = acceptance_criteria();
    ASSERT_EQ(criteria.size(), 11u);
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        EXPECT_EQ(criteria[i].id, static_cast<int>(i) + 1);
        EXPECT_GT(criteria[i].limit_seconds, 0.0);
        EXPECT_NE(std::find(suite_names().begin(), suite_names().end(), criteria[i].suite), suite_names().end());
    }
}

TEST(Verify, CorrespSuiteReport) {
    SuiteConfig cfg;
    const auto report = run_suite("corresp", cfg);
    ASSERT_FALSE(report.checks.empty());
    EXPECT_TRUE(std::is_sorted(report.checks.begin(), report.checks.end(),
                               [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; }));
    for (const auto& c : report.checks) {
        EXPECT_EQ(c.passed, !c.counterexample.has_value()) << c.name;
        EXPECT_EQ(c.name.rfind("corresp.", 0), 0u);
    }
    EXPECT_THROW(run_suite("nope", cfg), std::invalid_argument);
}

TEST(Verify, MissingFixtureFails) {
    SuiteConfig cfg;
    cfg.mu_fixture_path = "/nonexistent/fixture.txt";
    for (const auto& c : acceptance_criteria())
        if (c.id == 10) {
            const auto r = c.run(cfg);
            EXPECT_FALSE(r.passed);
            EXPECT_NE(r.counterexample->find("cannot read"), std::string::npos);
        }
}
