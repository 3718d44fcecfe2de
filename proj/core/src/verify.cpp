#include "mdl/verify.hpp"

#include "mdl/collineation.hpp"
#include "mdl/corresp.hpp"
#include "mdl/lattice.hpp"
#include "mdl/nilorbit.hpp"
#include "mdl/strata.hpp"
#include "mdl/version.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <map>
#include <random>
#include <sstream>
#include <thread>

namespace mdl::verify {

using lattice::Genus;
using lattice::Integer;
using lattice::MukaiVector;
using linalg::Rational;
using linalg::RationalMatrix;

namespace {

using Failure = std::optional<std::string>;

template <class Body>
CheckResult timed(std::string name, Body&& body) {
    CheckResult r;
    r.name = std::move(name);
    const auto start = std::chrono::steady_clock::now();
    try {
        r.counterexample = body(r.witness);
    } catch (const std::exception& e) {
        r.counterexample = std::string("exception: ") + e.what();
    }
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = !r.counterexample.has_value();
    return r;
}

unsigned worker_count(const SuiteConfig& cfg) {
    if (cfg.workers > 0)
        return cfg.workers;
    return std::max(1u, std::thread::hardware_concurrency());
}

// Evaluates f(0..count-1) on up to `workers` threads; results keep index order.
template <class F>
auto parallel_map(std::size_t count, unsigned workers, F f) -> std::vector<decltype(f(std::size_t{}))> {
    using R = decltype(f(std::size_t{}));
    std::vector<R> out(count);
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            out[i] = f(i);
        return out;
    }
    std::vector<std::future<void>> tasks;
    const std::size_t stride = std::min<std::size_t>(workers, count);
    for (std::size_t w = 0; w < stride; ++w)
        tasks.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < count; i += stride)
                out[i] = f(i);
        }));
    for (auto& t : tasks)
        t.get();
    return out;
}

// First failure in index order, if any.
Failure first_failure(const std::vector<Failure>& results) {
    for (const auto& r : results)
        if (r)
            return r;
    return std::nullopt;
}

std::vector<MukaiVector> grid_vectors(const Genus& g, int rs_max) {
    std::vector<MukaiVector> out;
    for (int r = -rs_max; r <= rs_max; ++r)
        for (int s = -rs_max; s <= rs_max; ++s) {
            MukaiVector v(r, 1, s);
            if (lattice::in_H_normalized(v, g))
                out.push_back(v);
        }
    return out;
}

std::string gstr(const Genus& g) { return "g=" + g.value().get_str(); }

// ---------------------------------------------------------------- lattice

CheckResult check_g7_example(const SuiteConfig&) {
    return timed("lattice.c02_g7_isometry_example", [](std::string& witness) -> Failure {
        const Genus g(7);
        const lattice::IntMatrix3 m{{2, 12, 3}, {1, 5, 1}, {3, 12, 2}};
        const MukaiVector image = m * MukaiVector(0, 0, 1);
        witness = "m^T Q7 m == Q7, image of (0,0,1) = " + image.str();
        if (!lattice::is_isometry(m, g))
            return "matrix is not an isometry of Q7";
        if (!(image == MukaiVector(3, 1, 2)))
            return "image of (0,0,1) is " + image.str();
        if (lattice::gamma_criterion(m, g))
            return "Gamma criterion unexpectedly passes";
        return std::nullopt;
    });
}

CheckResult check_o2_identity(const SuiteConfig&) {
    return timed("lattice.c03_o2_identity", [](std::string& witness) -> Failure {
        for (long g = 2; g <= 100; ++g)
            if (!lattice::verify_o2_identity(Genus(g)))
                return "sigma' tau' sigma tau != O(2) at g=" + std::to_string(g) + ": " +
                       lattice::o2_word(Genus(g)).str();
        witness = "exact 3x3 identity for g in [2,100]";
        return std::nullopt;
    });
}

CheckResult check_pairing_invariants(const SuiteConfig& cfg) {
    return timed("lattice.pairing_invariants", [&](std::string& witness) -> Failure {
        std::vector<long> genera;
        for (long g = 2; g <= cfg.lattice_g_max; ++g)
            genera.push_back(g);
        auto results = parallel_map(genera.size(), worker_count(cfg), [&](std::size_t i) -> Failure {
            const Genus g(genera[i]);
            std::mt19937_64 rng(derive_seed(cfg.seed, 1, static_cast<std::uint64_t>(genera[i])));
            std::uniform_int_distribution<int> rs(-20, 20), dd(-5, 5), kk(-10, 10);
            auto draw = [&] { return MukaiVector(rs(rng), dd(rng), rs(rng)); };
            // every vector of the grid against a random partner
            for (int r = -20; r <= 20; ++r)
                for (int d = -5; d <= 5; ++d)
                    for (int s = -20; s <= 20; ++s) {
                        const MukaiVector v(r, d, s);
                        const MukaiVector w = draw();
                        const Integer p = lattice::pairing(v, w, g);
                        if (p != lattice::pairing(w, v, g))
                            return "pairing not symmetric at " + v.str() + "," + w.str();
                        const MukaiVector u = draw();
                        const Integer a = kk(rng);
                        const MukaiVector combo(a * v.r + u.r, a * v.d + u.d, a * v.s + u.s);
                        if (lattice::pairing(combo, w, g) != a * p + lattice::pairing(u, w, g))
                            return "pairing not linear at " + v.str() + "," + u.str() + "," + w.str() + " " + gstr(g);
                        const Integer k = kk(rng);
                        for (auto [name, phi] : {std::pair{"sigma", &lattice::sigma}, std::pair{"tau", &lattice::tau},
                                                 std::pair{"neg", &lattice::neg}})
                            if (lattice::pairing(phi(v), phi(w), g) != p)
                                return std::string(name) + " does not preserve the pairing at " + v.str() + "," +
                                       w.str() + " " + gstr(g);
                        if (lattice::pairing(lattice::tensor(v, k, g), lattice::tensor(w, k, g), g) != p)
                            return "O(" + k.get_str() + ") does not preserve the pairing at " + v.str() + " " +
                                   gstr(g);
                        const Integer dim = lattice::dim_moduli(v, g);
                        if (lattice::dim_moduli(lattice::sigma(v), g) != dim ||
                            lattice::dim_moduli(lattice::tau(v), g) != dim)
                            return "dim M not reflection invariant at " + v.str();
                    }
            return std::nullopt;
        });
        witness = "symmetry, bilinearity, sigma/tau/-Id/O(k) invariance on |r|,|s|<=20, |d|<=5, g in [2," +
                  std::to_string(cfg.lattice_g_max) + "]";
        return first_failure(results);
    });
}

CheckResult check_group_laws(const SuiteConfig& cfg) {
    return timed("lattice.group_laws", [&](std::string& witness) -> Failure {
        using lattice::IntMatrix3;
        const IntMatrix3 id = IntMatrix3::identity();
        const IntMatrix3 s = lattice::sigma_matrix(), t = lattice::tau_matrix();
        if (!(s * s == id) || !(t * t == id) || !(s * t == t * s))
            return "sigma/tau matrices do not generate Z/2 x Z/2";
        std::mt19937_64 rng(derive_seed(cfg.seed, 2));
        std::uniform_int_distribution<int> rs(-20, 20), dd(-5, 5), kk(-10, 10), gg(2, cfg.lattice_g_max);
        for (std::size_t i = 0; i < cfg.lattice_samples; ++i) {
            const Genus g(gg(rng));
            const MukaiVector v(rs(rng), dd(rng), rs(rng));
            if (!(lattice::sigma(lattice::sigma(v)) == v) || !(lattice::tau(lattice::tau(v)) == v) ||
                !(lattice::sigma(lattice::tau(v)) == lattice::tau(lattice::sigma(v))) ||
                !(lattice::sigma_tau(v) == MukaiVector(-v.r, v.d, -v.s)))
                return "reflection laws fail at " + v.str();
            const Integer a = kk(rng), b = kk(rng);
            if (!(lattice::tensor(lattice::tensor(v, a, g), b, g) == lattice::tensor(v, a + b, g)))
                return "tensor(tensor(v,a),b) != tensor(v,a+b) at " + v.str() + " a=" + a.get_str() +
                       " b=" + b.get_str() + " " + gstr(g);
            if (!(lattice::tensor_matrix(a, g) * v == lattice::tensor(v, a, g)))
                return "tensor matrix disagrees with tensor at " + v.str();
            if (!lattice::is_isometry(lattice::tensor_matrix(a, g), g))
                return "O(" + a.get_str() + ") matrix is not an isometry at " + gstr(g);
        }
        witness = std::to_string(cfg.lattice_samples) + " samples";
        return std::nullopt;
    });
}

CheckResult check_gamma_property(const SuiteConfig& cfg) {
    return timed("lattice.gamma_property_preserved", [&](std::string& witness) -> Failure {
        std::mt19937_64 rng(derive_seed(cfg.seed, 3));
        std::uniform_int_distribution<int> coord(-60, 60), gen(0, 4), gg(3, cfg.lattice_g_max);
        std::size_t done = 0;
        while (done < cfg.lattice_samples) {
            const Genus g(gg(rng));
            const MukaiVector v(coord(rng), coord(rng), coord(rng));
            if (!lattice::gamma_vector_property(v, g))
                continue;
            MukaiVector w;
            switch (gen(rng)) {
            case 0: w = lattice::sigma(v); break;
            case 1: w = lattice::tau(v); break;
            case 2: w = lattice::neg(v); break;
            case 3: w = lattice::tensor(v, 1, g); break;
            default: w = lattice::tensor(v, -1, g); break;
            }
            if (!lattice::gamma_vector_property(w, g))
                return "property lost: " + v.str() + " -> " + w.str() + " " + gstr(g);
            ++done;
        }
        witness = std::to_string(done) + " generator applications";
        return std::nullopt;
    });
}

// ---------------------------------------------------------------- strata

CheckResult check_castelnuovo(const SuiteConfig&) {
    return timed("strata.c01_castelnuovo", [](std::string& witness) -> Failure {
        const auto six = strata::castelnuovo(Genus(6));
        if (!six || six->mu != 2 || six->count != 5)
            return std::string("castelnuovo(6) != {mu:2, count:5}");
        std::size_t squares = 0;
        for (long g = 2; g <= 200; ++g) {
            const auto c = strata::castelnuovo(Genus(g));  // throws on a non-integral count
            const bool square = mpz_perfect_square_p(Integer(4 * g + 1).get_mpz_t()) != 0;
            if (c.has_value() != square)
                return "presence mismatch at g=" + std::to_string(g);
            squares += square;
        }
        witness = "g=6 -> {2,5}; integral for all " + std::to_string(squares) + " square cases g<=200";
        return std::nullopt;
    });
}

CheckResult check_codim_formula(const SuiteConfig& cfg) {
    return timed("strata.c04_codimension_formula", [&](std::string& witness) -> Failure {
        const auto count = static_cast<std::size_t>(cfg.grid_g_max - 1);
        auto results = parallel_map(count, worker_count(cfg), [&](std::size_t i) -> std::pair<Failure, long> {
            const Genus g(static_cast<long>(i) + 2);
            long checked = 0;
            for (const MukaiVector& v : grid_vectors(g, cfg.grid_rs_max)) {
                const MukaiVector w = lattice::normalize_rank(v);
                const int mu = strata::mu(w, g);
                const Integer achi = abs(lattice::euler(w));
                const int dir = lattice::euler(w) >= 0 ? 1 : -1;
                for (int t = 0; t <= mu; ++t) {
                    const Integer codim = t * (achi + t);
                    const strata::Grassmannian fiber{t, achi + 2 * t};
                    const Integer drop = lattice::dim_moduli(w, g) - lattice::dim_moduli(w + lattice::trivial(dir * t), g);
                    if (codim != fiber.dim() || drop - fiber.dim() != codim)
                        return {"codim ledger fails at " + v.str() + " t=" + std::to_string(t) + " " + gstr(g), 0};
                    if (strata::stratum_codim(w, t) != codim)
                        return {"stratum_codim disagrees at " + v.str(), 0};
                    ++checked;
                }
                if (!corresp::delta_dimension_audit(v, g))
                    return {"delta dimension audit fails at " + v.str() + " " + gstr(g), 0};
            }
            return {std::nullopt, checked};
        });
        long total = 0;
        for (const auto& [f, n] : results) {
            if (f)
                return f;
            total += n;
        }
        witness = std::to_string(total) + " (v,t) pairs, zero violations";
        return std::nullopt;
    });
}

CheckResult check_mu_discrepancy(const SuiteConfig& cfg) {
    return timed("strata.c10_mu_closed_form_discrepancy", [&](std::string& witness) -> Failure {
        const Genus six(6);
        if (strata::mu(MukaiVector(0, 1, 2), six) != 1)
            return std::string("scan mu(0,1,2; g=6) != 1");
        if (strata::mu_jacobian_closed_form(2, six) != 2)
            return std::string("closed form at (g,n)=(6,2) != 2");
        const auto rows = mu_closed_form_exceptions(cfg.mu_table_g_max, cfg.mu_table_n_max);
        witness = std::to_string(rows.size()) + " exceptions for g<=" + std::to_string(cfg.mu_table_g_max) +
                  ", 0<=n<=" + std::to_string(cfg.mu_table_n_max);
        if (cfg.mu_fixture_path.empty())
            return std::string("no fixture configured");
        std::ifstream in(cfg.mu_fixture_path);
        if (!in)
            return "cannot read fixture " + cfg.mu_fixture_path;
        std::stringstream buf;
        buf << in.rdbuf();
        const auto frozen = parse_mu_exceptions(buf.str());
        if (frozen != rows)
            return "exception list differs from the fixture (" + std::to_string(frozen.size()) + " frozen vs " +
                   std::to_string(rows.size()) + " computed)";
        witness += ", matches fixture";
        return std::nullopt;
    });
}

CheckResult check_canonical_ledger(const SuiteConfig& cfg) {
    return timed("strata.c11_canonical_class_ledger", [&](std::string& witness) -> Failure {
        const auto count = static_cast<std::size_t>(cfg.grid_g_max - 1);
        auto results = parallel_map(count, worker_count(cfg), [&](std::size_t i) -> std::pair<Failure, long> {
            const Genus g(static_cast<long>(i) + 2);
            long rows = 0;
            for (const MukaiVector& v : grid_vectors(g, cfg.grid_rs_max)) {
                const auto c = strata::build_collection(v, g);
                for (std::size_t r = 0; r < c.rows.size(); ++r) {
                    const auto ledger = strata::canonical_class_ledger(c, r);
                    if (!ledger.final_trivial || !ledger.discrepancies_match)
                        return {"ledger not trivial at " + v.str() + " row " + std::to_string(r) + " " + gstr(g) +
                                    ": " + ledger.per_step.back().str(),
                                0};
                    ++rows;
                }
            }
            return {std::nullopt, rows};
        });
        long total = 0;
        for (const auto& [f, n] : results) {
            if (f)
                return f;
            total += n;
        }
        witness = std::to_string(total) + " rows, all canonical classes trivial";
        return std::nullopt;
    });
}

CheckResult check_collection_grid(const SuiteConfig& cfg) {
    return timed("strata.collection_invariants", [&](std::string& witness) -> Failure {
        const auto count = static_cast<std::size_t>(cfg.grid_g_max - 1);
        auto results = parallel_map(count, worker_count(cfg), [&](std::size_t i) -> Failure {
            const Genus g(static_cast<long>(i) + 2);
            for (const MukaiVector& v : grid_vectors(g, cfg.grid_rs_max)) {
                const int mu = strata::mu(v, g);
                if (strata::mu(lattice::sigma(v), g) != mu || strata::mu(lattice::tau(v), g) != mu)
                    return "mu not reflection invariant at " + v.str() + " " + gstr(g);
                const auto c = strata::build_collection(v, g);
                if (auto viol = strata::verify_conditions(c); !viol.empty())
                    return viol.front().identity + " violated at " + v.str() + " " + gstr(g) + ": " +
                           viol.front().detail;
                for (auto refl : {strata::Reflection::sigma, strata::Reflection::tau}) {
                    const auto d = strata::dual_collection(c, refl);
                    if (d.mu != c.mu || d.n(0) != c.n(0))
                        return "dual changes mu or n at " + v.str();
                }
                if (lattice::euler(lattice::normalize_rank(v)) == 0) {
                    const auto minus = strata::build_collection(v, g, strata::ZeroChiDirection::minus);
                    if (minus.rows.size() != c.rows.size())
                        return "+t and -t collections have different mu at " + v.str();
                    for (std::size_t r = 0; r < c.rows.size(); ++r)
                        for (std::size_t t = 0; t < c.rows[r].size(); ++t) {
                            const auto& a = c.rows[r][t];
                            const auto& b = minus.rows.at(r).at(t);
                            // base vectors differ; the numerical matrices must not
                            if (a.t != b.t || a.dim != b.dim || a.codim != b.codim || a.fiber != b.fiber)
                                return "+t and -t collections differ at " + v.str();
                        }
                }
                for (int t = 1; t <= mu; ++t)
                    for (int k = t; k <= mu; ++k)
                        if (!strata::index_shift_check(v, t, k, g))
                            return "index shift ledger fails at " + v.str() + " t=" + std::to_string(t) +
                                   " k=" + std::to_string(k);
            }
            return std::nullopt;
        });
        witness = "conditions, duals, zero-chi directions, index shifts over the grid";
        return first_failure(results);
    });
}

CheckResult check_named_moduli(const SuiteConfig& cfg) {
    return timed("strata.named_moduli", [&](std::string& witness) -> Failure {
        for (long gv = 2; gv <= cfg.lattice_g_max; ++gv) {
            const Genus g(gv);
            const int mu_x = strata::mu(lattice::hilbert_vector(gv, g), g) + 1;
            long expected = 0;
            while ((expected + 1) * expected <= gv)
                ++expected;
            if (mu_x != expected)
                return "mu(X) != max{r : r(r-1) <= g} at g=" + std::to_string(gv);
            const auto hilb = strata::build_collection(lattice::hilbert_vector(gv, g), g);
            const auto jac = strata::dual_collection(hilb, strata::Reflection::sigma);
            if (!(jac.base() == lattice::jacobian_vector(gv, g)) || jac.n(0) != 2)
                return "dual of S^[g] is not J^g at g=" + std::to_string(gv);
            const auto self = strata::build_collection(lattice::jacobian_vector(gv - 1, g), g);
            if (!(strata::dual_collection(self, strata::Reflection::sigma) == self) ||
                !(strata::dual_collection(self, strata::Reflection::tau) == self))
                return "J^{g-1} collection is not self-dual at g=" + std::to_string(gv);
        }
        witness = "mu(X) formula, S^[g] <-> J^g, self-dual J^{g-1} for g<=" + std::to_string(cfg.lattice_g_max);
        return std::nullopt;
    });
}

// ---------------------------------------------------------------- nilorbit

Failure springer_sample(const nilorbit::CotangentPoint& p, std::mt19937_64& rng) {
    using namespace nilorbit;
    const std::size_t t = p.t();
    const RationalMatrix n = springer(p);
    if (!is_square_zero(n))
        return "N^2 != 0";
    const std::size_t k = linalg::rank(n);
    if (k != t - corank(p))
        return "rank(N) != t - corank";
    if (!(n * p.w().inclusion()).is_zero() || !(p.w().quotient_map() * n).is_zero())
        return "im N <= W <= ker N fails";
    const FiberDescriptor f = fiber_space(n, t);
    if (f.k != k || f.sub != corank(p) || f.ambient != p.h() - 2 * k)
        return "fiber descriptor mismatch";
    if (corank(p) == 0) {
        const CotangentPoint q = dual_point(n, t);
        if (!(springer(q).transpose() == n))
            return "springer(dual_point(N))^T != N";
        if (!(dual_point(springer(q), t) == p))
            return "transposition is not an involution on the dense orbit";
    } else {
        try {
            (void)dual_point(n, t);
            return "dual_point accepted a point off the dense orbit";
        } catch (const OffDenseOrbit&) {
        }
    }
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    Rational gamma;
    do
        gamma = Rational(num(rng), den(rng));
    while (sgn(gamma) == 0);
    gamma.canonicalize();
    const RationalMatrix a = deform(p, gamma);
    if (!(a * a == a * gamma))
        return "A^2 != gamma A for gamma=" + gamma.get_str();
    if (linalg::rank(a) != t)
        return "rank(A) != t for gamma=" + gamma.get_str();
    return std::nullopt;
}

CheckResult check_springer(const SuiteConfig& cfg) {
    return timed("nilorbit.c07_springer_samples", [&](std::string& witness) -> Failure {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t h = 2; h <= static_cast<std::size_t>(cfg.springer_h_max); ++h)
            for (std::size_t t = 1; 2 * t <= h; ++t)
                pairs.emplace_back(h, t);
        auto results = parallel_map(pairs.size(), worker_count(cfg), [&](std::size_t i) -> std::pair<Failure, std::vector<std::size_t>> {
            const auto [h, t] = pairs[i];
            std::mt19937_64 rng(derive_seed(cfg.seed, h, t));
            std::uniform_int_distribution<std::size_t> rank_dist(0, t);
            std::vector<std::size_t> occupancy(t + 1);
            for (std::size_t s = 0; s < cfg.springer_samples; ++s) {
                // every fourth sample targets a uniformly drawn rank of psi
                const nilorbit::CotangentPoint p = s % 4 == 3
                                                       ? nilorbit::sample_point_with_rank(h, t, rank_dist(rng), rng)
                                                       : nilorbit::sample_point(h, t, rng, false);
                ++occupancy[nilorbit::corank(p)];
                if (auto f = springer_sample(p, rng))
                    return {"h=" + std::to_string(h) + " t=" + std::to_string(t) + " sample " + std::to_string(s) +
                                ": " + *f + " psi=" + p.psi().str(),
                            {}};
            }
            return {std::nullopt, occupancy};
        });
        std::ostringstream w;
        w << pairs.size() << " (h,t) pairs x " << cfg.springer_samples << " samples; corank occupancy";
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (results[i].first)
                return results[i].first;
            w << " (" << pairs[i].first << "," << pairs[i].second << "):";
            for (std::size_t c = 0; c < results[i].second.size(); ++c)
                w << (c ? "/" : "") << results[i].second[c];
        }
        witness = w.str();
        return std::nullopt;
    });
}

CheckResult check_flags(const SuiteConfig& cfg) {
    return timed("nilorbit.c08_flag_resolutions", [&](std::string& witness) -> Failure {
        std::size_t flags = 0, parts = 0;
        for (int h = 1; h <= cfg.flag_h_max; ++h) {
            const auto report = nilorbit::verify_flag_resolution_dims(h, cfg.flag_h_max);
            if (!report.ok()) {
                const auto& f = report.failures.front();
                return "h=" + std::to_string(h) + " eta=" + f.eta.str() + ": " + f.failure;
            }
            flags += report.flags_checked;
            parts += report.partitions;
        }
        witness = std::to_string(parts) + " partitions, " + std::to_string(flags) + " orderings";
        return std::nullopt;
    });
}

CheckResult check_cotangent_dims(const SuiteConfig& cfg) {
    return timed("nilorbit.dimension_identities", [&](std::string& witness) -> Failure {
        for (long h = 2; h <= 64; ++h)
            for (long t = 1; 2 * t <= h; ++t) {
                if (2 * t * (h - t) != h * h - (h - t) * (h - t) - t * t)
                    return "dim T*G(t,H) identity fails at h=" + std::to_string(h);
                for (long k = 0; k <= t; ++k)
                    if (h - 2 * k != (h - 2 * t + 1) + 2 * (t - k) - 1)
                        return "fiber identity fails at h=" + std::to_string(h);
            }
        // realised fibers over N of every admissible rank
        std::mt19937_64 rng(derive_seed(cfg.seed, 77));
        for (std::size_t h = 2; h <= 8; ++h)
            for (std::size_t t = 1; 2 * t <= h; ++t)
                for (std::size_t k = 0; k <= t; ++k) {
                    const auto p = nilorbit::sample_point_with_rank(h, t, k, rng);
                    const auto f = nilorbit::fiber_space(nilorbit::springer(p), t);
                    const auto ker = linalg::kernel(nilorbit::springer(p));
                    const auto im = linalg::image(nilorbit::springer(p));
                    if (f.k != k || f.ambient != ker.dim() - im.dim() || f.sub != t - im.dim())
                        return "fiber_space disagrees with ker/im at h=" + std::to_string(h);
                }
        witness = "h<=64 exhaustive; realised fibers for h<=8";
        return std::nullopt;
    });
}

// ---------------------------------------------------------------- collineation

RationalMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = dist(rng);
    return m;
}

RationalMatrix random_rank(std::size_t rows, std::size_t cols, std::size_t k, std::mt19937_64& rng) {
    if (k == 0)
        return RationalMatrix(rows, cols);
    for (;;) {
        RationalMatrix m = random_matrix(rows, k, rng, 2) * random_matrix(k, cols, rng, 2);
        if (linalg::rank(m) == k)
            return m;
    }
}

// Corank-t normal form [[I, 0], [0, 0]] of shape r1 x r0.
RationalMatrix normal_form(std::size_t r1, std::size_t r0, std::size_t t) {
    RationalMatrix e(r1, r0);
    for (std::size_t i = 0; i + t < std::min(r0, r1); ++i)
        e(i, i) = 1;
    return e;
}

Failure collineation_seed(std::size_t seed_index, const SuiteConfig& cfg) {
    using namespace collineation;
    std::mt19937_64 rng(derive_seed(cfg.seed, 500, seed_index));
    for (std::size_t r1 = 0; r1 <= 5; ++r1)
        for (std::size_t r0 = 0; r0 <= 7; ++r0) {
            const std::string shape = std::to_string(r1) + "x" + std::to_string(r0) + " seed " +
                                      std::to_string(seed_index);
            if (r0 == 0 || r1 == 0) {
                const CollineationChain c = greedy_complete(RationalMatrix(r1, r0), rng);
                if (!c.maps.empty() || !validate(c) || !transpose_chain(c).maps.empty())
                    return "chain over a zero space is not empty " + shape;
                continue;
            }
            std::uniform_int_distribution<std::size_t> kd(0, std::min(r0, r1));
            const RationalMatrix rho1 = random_rank(r1, r0, kd(rng), rng);
            const CollineationChain c = greedy_complete(rho1, rng);
            if (auto v = validate(c); !v)
                return "greedy chain invalid (" + v.diagnostic + ") " + shape;
            if (c.maps.size() > std::min(r0, r1) + 1)
                return "chain longer than min+1 " + shape;
            const CollineationChain ct = transpose_chain(c);
            if (auto v = validate(ct); !v)
                return "transposed chain invalid (" + v.diagnostic + ") " + shape;
            if (!(transpose_chain(ct) == c))
                return "transpose_chain is not an involution " + shape;
            if (stratum_index(rho1) != stratum_index(rho1.transpose()))
                return "stratum_index not transpose invariant " + shape;
            if (!ker_coker_duality(rho1))
                return "ker/coker duality fails " + shape;

            // affine family through a degenerate point
            std::uniform_int_distribution<std::size_t> pd(1, 3);
            MatrixFamily f{random_rank(r1, r0, kd(rng), rng), {}};
            const std::size_t p = pd(rng);
            for (std::size_t i = 0; i < p; ++i)
                f.directions.push_back(random_matrix(r1, r0, rng, 2));
            const std::vector<Rational> x0(p);
            if (!petri_dual_agreement(f, x0))
                return "Petri forms of e and e^T disagree " + shape;
            // exact difference quotient equals the directional derivative
            std::vector<Rational> xi(p), stepped(p);
            std::uniform_int_distribution<int> small(-2, 2);
            for (std::size_t i = 0; i < p; ++i)
                xi[i] = small(rng);
            const Rational step(1, 3);
            for (std::size_t i = 0; i < p; ++i)
                stepped[i] = x0[i] + step * xi[i];
            if (!((f.at(stepped) - f.at(x0)) * (1 / step) == f.derivative(xi)))
                return "difference quotient != D_xi e " + shape;
        }
    return std::nullopt;
}

CheckResult check_collineation(const SuiteConfig& cfg) {
    return timed("collineation.c09_suite", [&](std::string& witness) -> Failure {
        using namespace collineation;
        // Petri rank on the universal family at corank-t normal forms
        for (long r0 = 1; r0 <= 7; ++r0)
            for (long r1 = 1; r1 <= std::min(r0, 5L); ++r1)
                for (long t = 0; t <= r1; ++t) {
                    const RationalMatrix e0 = normal_form(static_cast<std::size_t>(r1), static_cast<std::size_t>(r0),
                                                          static_cast<std::size_t>(t));
                    const MatrixFamily f = MatrixFamily::universal(e0);
                    const std::vector<Rational> x0(f.base_dim());
                    const PetriForm phi = petri_form(f, x0, static_cast<std::size_t>(t));
                    const long expected = expected_codim(r0 * r1, r0, r1, t);
                    if (static_cast<long>(phi.rank()) != expected)
                        return "Petri rank " + std::to_string(phi.rank()) + " != " + std::to_string(expected) +
                               " at r0=" + std::to_string(r0) + " r1=" + std::to_string(r1) +
                               " t=" + std::to_string(t);
                    if (!petri_dual_agreement(f, x0))
                        return "Petri dual disagreement on universal family";
                }
        auto results = parallel_map(cfg.collineation_seeds, worker_count(cfg),
                                    [&](std::size_t i) { return collineation_seed(i, cfg); });
        witness = "normal forms r1<=5, r1<=r0<=7; " + std::to_string(cfg.collineation_seeds) + " seeds x 48 shapes";
        return first_failure(results);
    });
}

// ---------------------------------------------------------------- corresp

CheckResult check_g4(const SuiteConfig&) {
    return timed("corresp.c05_g4_self_dual", [](std::string& witness) -> Failure {
        const corresp::SigmaG4 r = corresp::sigma_g4_check();
        witness = "delta1=" + r.delta1_eigen.get_str() + " graph=" + r.graph_eigen.get_str() +
                  " relation=" + (r.relation ? "true" : "false");
        if (r.delta1_eigen != -4 || r.delta1_eigen != -Integer(corresp::euler_projective(3)))
            return std::string("c_3(T*P^3) != -4");
        if (r.graph_eigen != 3 || !r.relation)
            return std::string("relation 9 - 24 + 16 = 1 fails");
        std::vector<long> solutions;
        for (long a = -10; a <= 10; ++a)
            if (corresp::g4_relation(a, r.delta1_eigen))
                solutions.push_back(a);
        std::string list;
        for (long a : solutions)
            list += (list.empty() ? "" : ",") + std::to_string(a);
        witness += "; integer solutions in [-10,10]: {" + list + "}";
        if (solutions != std::vector<long>{3})
            return "eigenvalue 3 is not the unique solution: {" + list + "} all satisfy a^2 - 8a + 16 = 1";
        return std::nullopt;
    });
}

CheckResult check_lagrangian(const SuiteConfig&) {
    return timed("corresp.c06_lagrangian_self_intersection", [](std::string& witness) -> Failure {
        for (long g = 2; g <= 40; ++g) {
            const Genus gg(g);
            Integer binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * g - 2), static_cast<unsigned long>(g));
            const Integer sign = g % 2 == 0 ? 1 : -1;
            if (corresp::lagrangian_self_intersection(gg) != binom ||
                binom != sign * corresp::sym_euler(gg, static_cast<unsigned>(g)))
                return "binom(2g-2,g) != (-1)^g [t^g](1-t)^(2g-2) at g=" + std::to_string(g);
            if (corresp::jacobian_self_intersection(gg) != 0)
                return "Jacobian self-intersection != 0 at g=" + std::to_string(g);
        }
        witness = "g in [2,40]; C^[6] in S^[6]: " + corresp::lagrangian_self_intersection(Genus(6)).get_str();
        return std::nullopt;
    });
}

CheckResult check_delta_models(const SuiteConfig&) {
    return timed("corresp.delta_models", [](std::string& witness) -> Failure {
        using corresp::CohomologyModel;
        const std::vector<std::pair<RationalMatrix, std::vector<Rational>>> models = {
            {RationalMatrix{{-2}}, {1}},
            {RationalMatrix{{-2, 1}, {1, 0}}, {1, 0}},
            {RationalMatrix{{0, 1}, {1, 0}}, {1, -1}},
            {RationalMatrix{{2, 0, 0}, {0, -2, 1}, {0, 1, 2}}, {0, 1, 0}},
        };
        for (const auto& [gram, theta] : models) {
            std::vector<corresp::BasisClass> basis;
            for (std::size_t i = 0; i < gram.rows(); ++i)
                basis.push_back({"b" + std::to_string(i), 2});
            const CohomologyModel m(basis, gram);
            if (!corresp::tau_selfdual_check(m, theta))
                return "Delta_1^2 != -2 Delta_1 for Gram " + gram.str();
            const auto half = corresp::projection_cycle(m, theta) * Rational(-1, 2);
            if (!(half * half == half))
                return "-Delta_1/2 is not idempotent for Gram " + gram.str();
            if (!half.is_degree_preserving(m))
                return "Delta_1 not degree preserving";
        }
        witness = std::to_string(models.size()) + " models";
        return std::nullopt;
    });
}

struct Entry {
    std::string suite;
    std::function<CheckResult(const SuiteConfig&)> run;
};

std::vector<Entry> invariant_checks() {
    return {
        {"lattice", check_pairing_invariants}, {"lattice", check_group_laws},
        {"lattice", check_gamma_property},     {"strata", check_collection_grid},
        {"strata", check_named_moduli},        {"nilorbit", check_cotangent_dims},
        {"corresp", check_delta_models},
    };
}

}  // namespace

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<Criterion> acceptance_criteria() {
    return {
        {1, "Castelnuovo count", "strata", 1.0, check_castelnuovo},
        {2, "g=7 isometry outside Gamma", "lattice", 1.0, check_g7_example},
        {3, "O(2) = sigma' tau' sigma tau", "lattice", 1.0, check_o2_identity},
        {4, "codimension formula grid", "strata", 30.0, check_codim_formula},
        {5, "g=4 self-dual example", "corresp", 1.0, check_g4},
        {6, "Lagrangian self-intersections", "corresp", 1.0, check_lagrangian},
        {7, "Springer sampling suite", "nilorbit", 60.0, check_springer},
        {8, "flag resolutions", "nilorbit", 30.0, check_flags},
        {9, "collineation suite", "collineation", 60.0, check_collineation},
        {10, "mu closed-form discrepancy", "strata", 5.0, check_mu_discrepancy},
        {11, "canonical-class ledger", "strata", 10.0, check_canonical_ledger},
    };
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"all", "lattice", "strata", "nilorbit", "collineation", "corresp"};
    return names;
}

VerificationReport run_suite(const std::string& suite, const SuiteConfig& config) {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw std::invalid_argument("unknown suite: " + suite);
    VerificationReport report{suite, config.seed, version_string(), {}};
    auto wanted = [&](const std::string& s) { return suite == "all" || suite == s; };
    for (const auto& c : acceptance_criteria())
        if (wanted(c.suite))
            report.checks.push_back(c.run(config));
    for (const auto& e : invariant_checks())
        if (wanted(e.suite))
            report.checks.push_back(e.run(config));
    std::sort(report.checks.begin(), report.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return report;
}

std::vector<MuException> mu_closed_form_exceptions(int g_max, int n_max) {
    std::vector<MuException> rows;
    for (long g = 2; g <= g_max; ++g)
        for (long n = 0; n <= n_max; ++n) {
            const Genus gg(g);
            const int scan = strata::mu(MukaiVector(0, 1, n), gg);
            const mpq_class closed = strata::mu_jacobian_closed_form(n, gg);
            if (closed != scan)
                rows.push_back({g, n, scan, closed.get_str()});
        }
    return rows;
}

std::string format_mu_exceptions(const std::vector<MuException>& rows) {
    std::ostringstream os;
    os << "# g n scan closed_form\n";
    for (const auto& r : rows)
        os << r.g << ' ' << r.n << ' ' << r.scan << ' ' << r.closed_form << '\n';
    return os.str();
}

std::vector<MuException> parse_mu_exceptions(const std::string& text) {
    std::vector<MuException> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#')
            continue;
        std::istringstream ls(line);
        MuException r;
        if (!(ls >> r.g >> r.n >> r.scan >> r.closed_form))
            throw std::runtime_error("malformed fixture line: " + line);
        rows.push_back(r);
    }
    return rows;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(mix(mix(seed) ^ a) ^ b);
}

}  // namespace mdl::verify
