#include "cli.hpp"

#include "mdl/lattice.hpp"
#include "mdl/nilorbit.hpp"
#include "mdl/strata.hpp"
#include "mdl/verify.hpp"
#include "mdl/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <deque>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace mdl::cli {

using json = nlohmann::ordered_json;
using lattice::Genus;
using lattice::Integer;
using lattice::MukaiVector;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Integers outside the exactly representable double range are emitted as strings.
json to_json(const Integer& x) {
    static const Integer limit("9007199254740991");
    if (abs(x) <= limit)
        return x.get_si();
    return x.get_str();
}

json to_json(const MukaiVector& v) { return json::array({to_json(v.r), to_json(v.d), to_json(v.s)}); }

Integer parse_integer(const std::string& text, const std::string& what) {
    Integer x;
    if (text.empty() || x.set_str(text, 10) != 0)
        throw UsageError(what + ": not an integer: " + text);
    return x;
}

struct Settings {
    std::uint64_t seed = 42;
    unsigned workers = 0;
    std::string format = "table";
    std::size_t springer_samples = 1000;
    std::string mu_fixture =
#ifdef MDL_DEFAULT_MU_FIXTURE
        MDL_DEFAULT_MU_FIXTURE;
#else
        "";
#endif
};

// key=value lines from the file named by MDL_CONFIG; '#' starts a comment.
void apply_config_file(Settings& s) {
    const char* path = std::getenv("MDL_CONFIG");
    if (path == nullptr || *path == '\0')
        return;
    std::ifstream in(path);
    if (!in)
        throw UsageError(std::string("MDL_CONFIG: cannot read ") + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const auto trim = [](std::string x) {
            const auto b = x.find_first_not_of(" \t\r");
            const auto e = x.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError("MDL_CONFIG line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "seed")
                s.seed = std::stoull(value);
            else if (key == "workers")
                s.workers = static_cast<unsigned>(std::stoul(value));
            else if (key == "format")
                s.format = value;
            else if (key == "samples")
                s.springer_samples = std::stoull(value);
            else if (key == "mu_fixture")
                s.mu_fixture = value;
            else
                throw UsageError("MDL_CONFIG line " + std::to_string(lineno) + ": unknown key " + key);
        } catch (const std::logic_error&) {
            throw UsageError("MDL_CONFIG line " + std::to_string(lineno) + ": bad value for " + key);
        }
    }
}

json envelope(const std::string& command, json params, json results) {
    json j;
    j["version"] = version_string();
    j["command"] = command;
    j["params"] = std::move(params);
    j["results"] = std::move(results);
    return j;
}

// ---------------------------------------------------------------- vector

int cmd_vector(const std::vector<std::string>& coords, const std::string& genus, bool as_json, std::ostream& out) {
    const Genus g(parse_integer(genus, "genus"));
    const MukaiVector v(parse_integer(coords[0], "r"), parse_integer(coords[1], "d"), parse_integer(coords[2], "s"));
    const auto region = lattice::in_region(v, g);
    const bool in_h = lattice::in_H_normalized(v, g);
    std::optional<int> mu;
    if (in_h)
        mu = strata::mu(v, g);

    if (as_json) {
        json r;
        r["vector"] = to_json(v);
        r["pairing"] = to_json(lattice::pairing(v, v, g));
        r["chi"] = to_json(lattice::euler(v));
        r["dim"] = to_json(lattice::dim_moduli(v, g));
        r["in_V"] = region.in_V;
        r["in_H"] = region.in_H;
        r["in_H_normalized"] = in_h;
        r["mu"] = mu ? json(*mu) : json(nullptr);
        r["sigma"] = to_json(lattice::sigma(v));
        r["tau"] = to_json(lattice::tau(v));
        out << envelope("vector", {{"vector", to_json(v)}, {"genus", to_json(g.value())}}, r).dump(2) << '\n';
        return ok;
    }
    out << "vector    " << v << "  (g=" << g.value() << ")\n"
        << "<v,v>     " << lattice::pairing(v, v, g) << '\n'
        << "chi       " << lattice::euler(v) << '\n'
        << "dim M(v)  " << lattice::dim_moduli(v, g) << '\n'
        << "in V      " << (region.in_V ? "yes" : "no") << '\n'
        << "in H      " << (region.in_H ? "yes" : "no") << (in_h && !region.in_H ? " (after sigma-tau)" : "") << '\n'
        << "mu        " << (mu ? std::to_string(*mu) : "-") << '\n'
        << "sigma(v)  " << lattice::sigma(v) << '\n'
        << "tau(v)    " << lattice::tau(v) << '\n';
    return ok;
}

// ---------------------------------------------------------------- collection

std::string node_id(std::size_t row, int t) { return "r" + std::to_string(row) + "t" + std::to_string(t); }

void write_dot(const strata::StratifiedCollection& c, std::ostream& out) {
    out << "digraph collection {\n  rankdir=TB;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < c.rows.size(); ++i)
        for (const auto& s : c.rows[i])
            out << "  " << node_id(i, s.t) << " [label=\"M" << s.base << "^" << s.t << " dim=" << s.dim
                << " codim=" << s.codim << "\"];\n";
    for (std::size_t i = 0; i < c.rows.size(); ++i)
        for (const auto& s : c.rows[i]) {
            if (s.t > 0)
                out << "  " << node_id(i, s.t) << " -> " << node_id(i, s.t - 1) << " [style=solid];\n";
            if (s.fiber)
                out << "  " << node_id(i, s.t) << " -> " << node_id(i + static_cast<std::size_t>(s.t), 0)
                    << " [style=dashed, label=\"" << s.fiber->str() << "\"];\n";
        }
    out << "}\n";
}

json collection_json(const strata::StratifiedCollection& c) {
    json rows = json::array();
    for (std::size_t i = 0; i < c.rows.size(); ++i) {
        json strata = json::array();
        for (const auto& s : c.rows[i]) {
            json e;
            e["t"] = s.t;
            e["dim"] = to_json(s.dim);
            e["codim"] = to_json(s.codim);
            e["fiber"] = s.fiber ? json{{"k", to_json(s.fiber->k)}, {"n", to_json(s.fiber->n)}} : json(nullptr);
            strata.push_back(std::move(e));
        }
        rows.push_back({{"base", to_json(c.rows[i].front().base)}, {"n", to_json(c.n(i))}, {"strata", strata}});
    }
    json r;
    r["mu"] = c.mu;
    r["direction"] = c.direction;
    r["rows"] = std::move(rows);
    json violations = json::array();
    for (const auto& v : strata::verify_conditions(c))
        violations.push_back({{"identity", v.identity}, {"detail", v.detail}});
    r["violations"] = std::move(violations);
    return r;
}

int cmd_collection(const std::vector<std::string>& coords, const std::string& genus, const std::string& format,
                   const std::string& zero_chi, std::ostream& out) {
    const Genus g(parse_integer(genus, "genus"));
    const MukaiVector v(parse_integer(coords[0], "r"), parse_integer(coords[1], "d"), parse_integer(coords[2], "s"));
    const auto direction = zero_chi == "minus" ? strata::ZeroChiDirection::minus : strata::ZeroChiDirection::plus;
    strata::StratifiedCollection c;
    try {
        c = strata::build_collection(v, g, direction);
    } catch (const strata::RegionError& e) {
        throw UsageError(e.what());
    }
    const bool clean = strata::verify_conditions(c).empty();

    if (format == "json") {
        out << envelope("collection",
                        {{"vector", to_json(v)}, {"genus", to_json(g.value())}, {"zero_chi", zero_chi}},
                        collection_json(c))
                   .dump(2)
            << '\n';
    } else if (format == "dot") {
        write_dot(c, out);
    } else {
        out << "collection of " << c.base() << "  g=" << g.value() << "  mu=" << c.mu << '\n';
        for (std::size_t i = 0; i < c.rows.size(); ++i) {
            out << "row " << i << "  " << c.rows[i].front().base << "  n=" << c.n(i) << '\n';
            for (const auto& s : c.rows[i])
                out << "  t=" << s.t << "  dim=" << s.dim << "  codim=" << s.codim
                    << (s.fiber ? "  fiber=" + s.fiber->str() : std::string()) << '\n';
        }
        for (const auto& viol : strata::verify_conditions(c))
            out << "violation " << viol.identity << ": " << viol.detail << '\n';
    }
    return clean ? ok : verification_failed;
}

// ---------------------------------------------------------------- group

int cmd_group(const std::string& genus, int depth, bool as_json, std::ostream& out) {
    const Genus g(parse_integer(genus, "genus"));
    const std::vector<std::pair<std::string, lattice::IntMatrix3>> gens = {
        {"-Id", lattice::neg_matrix()},
        {"sigma", lattice::sigma_matrix()},
        {"tau", lattice::tau_matrix()},
        {"O(1)", lattice::tensor_matrix(1, g)},
        {"O(-1)", lattice::tensor_matrix(-1, g)},
    };
    std::set<std::string> seen{lattice::IntMatrix3::identity().str()};
    std::vector<lattice::IntMatrix3> frontier{lattice::IntMatrix3::identity()};
    std::vector<std::size_t> layer_sizes{1};
    std::size_t isometry_failures = 0, gamma_failures = 0;
    for (int d = 1; d <= depth; ++d) {
        std::vector<lattice::IntMatrix3> next;
        for (const auto& m : frontier)
            for (const auto& [name, gen] : gens) {
                lattice::IntMatrix3 w = gen * m;
                if (!seen.insert(w.str()).second)
                    continue;
                isometry_failures += !lattice::is_isometry(w, g);
                gamma_failures += !lattice::gamma_criterion(w, g);
                next.push_back(std::move(w));
            }
        layer_sizes.push_back(next.size());
        frontier = std::move(next);
    }
    const bool good = isometry_failures == 0 && gamma_failures == 0;
    if (as_json) {
        json r;
        r["layer_sizes"] = layer_sizes;
        r["elements"] = seen.size();
        r["isometry_failures"] = isometry_failures;
        r["gamma_failures"] = gamma_failures;
        out << envelope("group", {{"genus", to_json(g.value())}, {"bfs_depth", depth}}, r).dump(2) << '\n';
    } else {
        out << "words in -Id, sigma, tau, O(1), O(-1) up to length " << depth << " (g=" << g.value() << ")\n";
        for (std::size_t d = 0; d < layer_sizes.size(); ++d)
            out << "  length " << d << ": " << layer_sizes[d] << " new elements\n";
        out << "elements " << seen.size() << ", isometry failures " << isometry_failures << ", Gamma failures "
            << gamma_failures << '\n';
    }
    return good ? ok : verification_failed;
}

// ---------------------------------------------------------------- springer

int cmd_springer(std::size_t h, std::size_t t, const Settings& s, bool as_json, std::ostream& out) {
    if (t < 1 || 2 * t > h)
        throw UsageError("springer: need 1 <= t <= h/2");
    std::mt19937_64 rng(verify::derive_seed(s.seed, h, t));
    std::vector<std::size_t> occupancy(t + 1);
    std::size_t failures = 0, dense_round_trips = 0;
    std::optional<std::string> first;
    for (std::size_t i = 0; i < s.springer_samples; ++i) {
        const auto p = nilorbit::sample_point(h, t, rng, false);
        ++occupancy[nilorbit::corank(p)];
        const auto n = nilorbit::springer(p);
        bool good = nilorbit::is_square_zero(n) && linalg::rank(n) == t - nilorbit::corank(p) &&
                    p.w().contains(linalg::image(n)) && linalg::kernel(n).contains(p.w());
        if (good && nilorbit::corank(p) == 0) {
            good = nilorbit::springer(nilorbit::dual_point(n, t)).transpose() == n;
            dense_round_trips += good;
        }
        if (!good) {
            ++failures;
            if (!first)
                first = "sample " + std::to_string(i) + ": psi=" + p.psi().str();
        }
    }
    if (as_json) {
        json r;
        r["corank_occupancy"] = occupancy;
        r["dense_round_trips"] = dense_round_trips;
        r["failures"] = failures;
        r["first_failure"] = first ? json(*first) : json(nullptr);
        out << envelope("springer", {{"h", h}, {"t", t}, {"samples", s.springer_samples}, {"seed", s.seed}}, r)
                   .dump(2)
            << '\n';
    } else {
        out << "T*G(" << t << "," << h << ") -> End(Q^" << h << "), " << s.springer_samples << " samples, seed "
            << s.seed << '\n';
        for (std::size_t c = 0; c < occupancy.size(); ++c)
            out << "  corank " << c << ": " << occupancy[c] << '\n';
        out << "dense-orbit round trips " << dense_round_trips << ", failures " << failures << '\n';
        if (first)
            out << "first failure " << *first << '\n';
    }
    return failures == 0 ? ok : verification_failed;
}

// ---------------------------------------------------------------- verify

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

int cmd_verify(const std::string& suite, const Settings& s, bool as_json, bool no_timestamp, std::ostream& out) {
    verify::SuiteConfig cfg;
    cfg.seed = s.seed;
    cfg.workers = s.workers;
    cfg.mu_fixture_path = s.mu_fixture;
    const auto report = verify::run_suite(suite, cfg);
    if (as_json) {
        json checks = json::array();
        for (const auto& c : report.checks) {
            json e;
            e["name"] = c.name;
            e["passed"] = c.passed;
            e["witness"] = c.witness;
            e["counterexample"] = c.counterexample ? json(*c.counterexample) : json(nullptr);
            if (!no_timestamp)
                e["elapsed_seconds"] = c.elapsed_seconds;
            checks.push_back(std::move(e));
        }
        json r;
        r["passed"] = report.passed();
        r["checks"] = std::move(checks);
        json params{{"suite", suite}, {"seed", s.seed}};
        json j = envelope("verify", params, r);
        if (!no_timestamp)
            j["timestamp"] = utc_timestamp();
        out << j.dump(2) << '\n';
    } else {
        for (const auto& c : report.checks) {
            out << (c.passed ? "PASS " : "FAIL ") << c.name;
            if (!no_timestamp)
                out << " (" << std::fixed << std::setprecision(3) << c.elapsed_seconds << "s)";
            out << "\n     " << (c.passed ? c.witness : *c.counterexample) << '\n';
        }
        out << (report.passed() ? "all checks passed" : "verification failed") << " (suite " << suite << ", seed "
            << s.seed << ")\n";
    }
    return report.passed() ? ok : verification_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Settings s;
    try {
        apply_config_file(s);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }

    CLI::App app{"Brill-Noether duality numerics for moduli of sheaves on K3 surfaces", "mdl"};
    app.set_version_flag("--version", version_string());
    app.require_subcommand(1);
    app.add_option("--seed", s.seed, "Random seed")->capture_default_str();
    app.add_option("--workers", s.workers, "Worker threads (0: hardware concurrency)")->capture_default_str();

    std::vector<std::string> coords;
    std::string genus;
    bool as_json = false;

    auto* vector = app.add_subcommand("vector", "Invariants of a Mukai vector (r, d, s)");
    vector->add_option("vector", coords, "Mukai vector r d s")->expected(3)->required()->allow_extra_args(false);
    vector->add_option("-g,--genus", genus, "Genus of the polarization")->required();
    vector->add_flag("--json", as_json, "JSON output");

    std::string zero_chi = "plus";
    auto* collection = app.add_subcommand("collection", "Stratified collection of M(v)");
    collection->add_option("vector", coords, "Mukai vector r d s")->expected(3)->required();
    collection->add_option("-g,--genus", genus, "Genus of the polarization")->required();
    collection->add_option("--format", s.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "dot"}))
        ->capture_default_str();
    collection->add_option("--zero-chi", zero_chi, "Direction for chi = 0")
        ->check(CLI::IsMember({"plus", "minus"}))
        ->capture_default_str();

    int depth = 3;
    auto* group = app.add_subcommand("group", "Breadth-first enumeration of the isometry group words");
    group->add_option("-g,--genus", genus, "Genus of the polarization")->required();
    group->add_option("--bfs-depth", depth, "Maximal word length")->check(CLI::Range(0, 12))->capture_default_str();
    group->add_flag("--json", as_json, "JSON output");

    std::size_t h = 0, t = 0;
    auto* springer = app.add_subcommand("springer", "Sample the Springer map T*G(t, Q^h) -> End(Q^h)");
    springer->add_option("ambient", h, "Ambient dimension h")->required()->check(CLI::Range(2, 16));
    springer->add_option("rank", t, "Subspace dimension t")->required();
    springer->add_option("--samples", s.springer_samples, "Sample count")->capture_default_str();
    springer->add_option("--seed", s.seed, "Random seed");
    springer->add_flag("--json", as_json, "JSON output");

    std::string suite = "all";
    bool no_timestamp = false;
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(verify::suite_names()))->capture_default_str();
    verify->add_option("--seed", s.seed, "Random seed");
    verify->add_option("--mu-fixture", s.mu_fixture, "Frozen mu closed-form exception list");
    verify->add_flag("--json", as_json, "JSON output");
    verify->add_flag("--no-timestamp", no_timestamp, "Omit wall-clock fields");

    int g_max = 30, n_max = 10;
    auto* mu_ex = app.add_subcommand("mu-exceptions", "Print the mu closed-form exception list");
    mu_ex->add_option("--g-max", g_max, "Largest genus")->check(CLI::Range(2, 1000))->capture_default_str();
    mu_ex->add_option("--n-max", n_max, "Largest n")->check(CLI::Range(0, 1000))->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*vector)
            return cmd_vector(coords, genus, as_json, out);
        if (*collection)
            return cmd_collection(coords, genus, s.format, zero_chi, out);
        if (*group)
            return cmd_group(genus, depth, as_json, out);
        if (*springer)
            return cmd_springer(h, t, s, as_json, out);
        if (*verify)
            return cmd_verify(suite, s, as_json, no_timestamp, out);
        if (*mu_ex) {
            out << verify::format_mu_exceptions(verify::mu_closed_form_exceptions(g_max, n_max));
            return ok;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

}  // namespace mdl::cli
