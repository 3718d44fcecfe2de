#include "mdl/corresp.hpp"

#include <gtest/gtest.h>

using namespace mdl::corresp;

namespace {

Integer binom(unsigned long n, unsigned long k) {
    Integer b = 1;
    for (unsigned long i = 1; i <= k; ++i)
        b = b * (n - k + i) / i;
    return b;
}

CohomologyModel line_model(long self) { return CohomologyModel({{"e", 2}}, RationalMatrix{{self}}); }

}  // namespace

TEST(Corresp, ModelValidation) {
    EXPECT_THROW(CohomologyModel({{"a", 0}, {"b", 0}}, RationalMatrix{{1, 2}, {3, 4}}), std::invalid_argument);
    EXPECT_THROW(CohomologyModel({{"a", -1}}, RationalMatrix{{1}}), std::invalid_argument);
    EXPECT_THROW(CohomologyModel({{"a", 0}}, RationalMatrix{{1, 0}}), std::invalid_argument);
}

TEST(Corresp, ProjectionCycle) {
    const CohomologyModel m({{"a", 2}, {"b", 2}}, RationalMatrix{{-2, 1}, {1, 0}});
    const std::vector<Rational> theta{1, 0};
    const Correspondence delta = projection_cycle(m, theta);
    // Delta(b) = (b . theta) theta = theta
    EXPECT_EQ(delta.matrix, (RationalMatrix{{-2, 1}, {0, 0}}));
    EXPECT_TRUE(tau_selfdual_check(m, theta));
    const Correspondence half = delta * Rational(-1, 2);
    EXPECT_EQ(half * half, half);
    EXPECT_TRUE(delta.is_degree_preserving(m));
}

TEST(Corresp, SelfDualRequiresMinusTwo) {
    EXPECT_THROW(tau_selfdual_check(line_model(-4), {1}), std::invalid_argument);
    EXPECT_TRUE(tau_selfdual_check(line_model(-2), {1}));
}

TEST(Corresp, DegreePreservation) {
    const CohomologyModel m({{"p", 0}, {"e", 2}}, RationalMatrix{{0, 0}, {0, -2}});
    const Correspondence mixing{RationalMatrix{{0, 1}, {0, 0}}};
    const Correspondence scaling{RationalMatrix{{3, 0}, {0, 1}}};
    EXPECT_FALSE(mixing.is_degree_preserving(m));
    EXPECT_TRUE(scaling.is_degree_preserving(m));
}

TEST(Corresp, ProjectiveSpaceChern) {
    EXPECT_EQ(top_chern_cotangent_projective(3), -4);
    for (unsigned n = 1; n <= 12; ++n) {
        const Integer sign = n % 2 == 0 ? 1 : -1;
        EXPECT_EQ(top_chern_cotangent_projective(n), sign * binom(n + 1, n));
        EXPECT_EQ(top_chern_cotangent_projective(n), sign * euler_projective(n));
    }
}

TEST(Corresp, GenusFourRelation) {
    const SigmaG4 r = sigma_g4_check();
    EXPECT_EQ(r.delta1_eigen, -4);
    EXPECT_EQ(r.graph_eigen, 3);
    EXPECT_TRUE(r.relation);
    EXPECT_FALSE(sigma_g4_check(4).relation);
    std::vector<long> solutions;
    for (long a = -10; a <= 10; ++a)
        if (g4_relation(a, -4))
            solutions.push_back(a);
    // (a - 4)^2 = 1
    EXPECT_EQ(solutions, (std::vector<long>{3, 5}));
}

TEST(Corresp, LagrangianSelfIntersection) {
    EXPECT_EQ(lagrangian_self_intersection(Genus(2)), 1);
    EXPECT_EQ(lagrangian_self_intersection(Genus(6)), 210);
    for (long g = 2; g <= 40; ++g) {
        EXPECT_EQ(lagrangian_self_intersection(Genus(g)), binom(2 * g - 2, g));
        EXPECT_EQ(jacobian_self_intersection(Genus(g)), 0);
    }
}

TEST(Corresp, SymmetricProductEuler) {
    // (1 - t)^{2g-2} at g = 3: 1 - 4t + 6t^2 - 4t^3 + t^4
    EXPECT_EQ(sym_euler(Genus(3), 0), 1);
    EXPECT_EQ(sym_euler(Genus(3), 1), -4);
    EXPECT_EQ(sym_euler(Genus(3), 2), 6);
    EXPECT_EQ(sym_euler(Genus(3), 4), 1);
    EXPECT_EQ(sym_euler(Genus(3), 5), 0);
}

TEST(Corresp, DeltaDimensionAudit) {
    for (long g = 2; g <= 20; ++g)
        for (long r = 0; r <= 6; ++r)
            for (long s = -6; s <= 6; ++s) {
                const MukaiVector v(r, 1, s);
                if (!mdl::lattice::in_H_normalized(v, Genus(g)))
                    continue;
                ASSERT_TRUE(delta_dimension_audit(v, Genus(g))) << v << " g=" << g;
            }
}
