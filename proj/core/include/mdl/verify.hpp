#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mdl::verify {

struct SuiteConfig {
    std::uint64_t seed = 42;
    int lattice_g_max = 50;
    std::size_t lattice_samples = 10000;
    int grid_g_max = 30;
    int grid_rs_max = 12;
    int springer_h_max = 8;
    std::size_t springer_samples = 10000;  // per (h, t)
    int flag_h_max = 7;
    std::size_t collineation_seeds = 1000;
    int mu_table_g_max = 30;
    int mu_table_n_max = 10;
    // Frozen exception list of the Jacobian mu closed form; empty disables the comparison.
    std::string mu_fixture_path;
    unsigned workers = 0;  // 0: hardware concurrency
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string witness;
    std::optional<std::string> counterexample;  // present iff !passed
    double elapsed_seconds = 0.0;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::string version;
    std::vector<CheckResult> checks;  // sorted by name
    bool passed() const;
};

struct Criterion {
    int id = 0;
    std::string name;
    std::string suite;
    double limit_seconds = 0.0;
    std::function<CheckResult(const SuiteConfig&)> run;
};

// Criteria 1-11 of the acceptance gate; CLI determinism is checked by the
// acceptance driver itself.
std::vector<Criterion> acceptance_criteria();

const std::vector<std::string>& suite_names();
// Runs the acceptance criteria and invariant checks of one suite ("all" for every suite).
VerificationReport run_suite(const std::string& suite, const SuiteConfig& config);

// Closed-form vs scan disagreements for the Jacobian line (0,1,n).
struct MuException {
    long g = 0;
    long n = 0;
    long scan = 0;
    std::string closed_form;
    bool operator==(const MuException&) const = default;
};

std::vector<MuException> mu_closed_form_exceptions(int g_max, int n_max);
std::string format_mu_exceptions(const std::vector<MuException>& rows);
std::vector<MuException> parse_mu_exceptions(const std::string& text);

// 64-bit seed for a sub-stream, mixed with splitmix64.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

}  // namespace mdl::verify
