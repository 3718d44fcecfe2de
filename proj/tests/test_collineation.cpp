#include "mdl/collineation.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mdl::collineation;
using mdl::linalg::rank;

namespace {

RationalMatrix normal_form(std::size_t r1, std::size_t r0, std::size_t t) {
    RationalMatrix e(r1, r0);
    for (std::size_t i = 0; i + t < std::min(r0, r1); ++i)
        e(i, i) = 1;
    return e;
}

// Rank of T -> Hom(ker e, coker e) for the universal family, computed from the
// block of coordinates (coker rows) x (kernel columns) of a normal form.
long universal_petri_rank(std::size_t r1, std::size_t r0, std::size_t t) {
    const std::size_t k = std::min(r0, r1) - t;
    return static_cast<long>((r0 - k) * (r1 - k));
}

}  // namespace

TEST(Collineation, ValidationRules) {
    EXPECT_TRUE(validate({0, 3, {}}));
    EXPECT_FALSE(validate({0, 3, {RationalMatrix(3, 0)}}));
    EXPECT_FALSE(validate({2, 2, {}}));
    // rank-1 map of Q^2 -> Q^2 followed by a nonzero 1 x 1 map
    EXPECT_TRUE(validate({2, 2, {RationalMatrix{{1, 0}, {0, 0}}, RationalMatrix{{5}}}}));
    const auto zero_tail = validate({2, 2, {RationalMatrix{{1, 0}, {0, 0}}, RationalMatrix{{0}}}});
    EXPECT_FALSE(zero_tail);
    const auto short_chain = validate({2, 2, {RationalMatrix{{1, 0}, {0, 0}}}});
    EXPECT_FALSE(short_chain);
    EXPECT_EQ(short_chain.diagnostic, "last map not surjective");
    const auto wrong_shape = validate({2, 2, {RationalMatrix{{1, 0}, {0, 0}}, RationalMatrix(2, 1)}});
    EXPECT_FALSE(wrong_shape);
    const auto injective_tail = validate({2, 3, {RationalMatrix{{1, 0}, {0, 0}, {0, 0}}, RationalMatrix{{1}, {1}}}});
    EXPECT_TRUE(injective_tail) << injective_tail.diagnostic;
}

TEST(Collineation, TransposeIsInvolution) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> d(-1, 1);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t r1 = 1 + rng() % 4, r0 = 1 + rng() % 5;
        RationalMatrix rho(r1, r0);
        for (std::size_t i = 0; i < r1; ++i)
            for (std::size_t j = 0; j < r0; ++j)
                rho(i, j) = d(rng);
        const auto c = greedy_complete(rho, rng);
        ASSERT_TRUE(validate(c)) << validate(c).diagnostic;
        ASSERT_LE(c.maps.size(), std::min(r0, r1) + 1);
        const auto ct = transpose_chain(c);
        ASSERT_TRUE(validate(ct));
        ASSERT_EQ(ct.maps.front(), rho.transpose());
        ASSERT_EQ(transpose_chain(ct), c);
    }
}

TEST(Collineation, TransposeRejectsInvalid) {
    EXPECT_THROW(transpose_chain({2, 2, {}}), InvalidChain);
}

TEST(Collineation, StratumIndexAndDuality) {
    const RationalMatrix e{{1, 2, 3}, {2, 4, 6}};
    EXPECT_EQ(stratum_index(e), 1u);
    EXPECT_EQ(stratum_index(e.transpose()), 1u);
    EXPECT_TRUE(ker_coker_duality(e));
    const auto p = duality_pairings(e);
    EXPECT_EQ(p.coker_ker.rows(), 1u);
    EXPECT_EQ(p.ker_coker.rows(), 2u);
}

TEST(Collineation, PetriRankOnNormalForms) {
    for (std::size_t r0 = 1; r0 <= 6; ++r0)
        for (std::size_t r1 = 1; r1 <= r0; ++r1)
            for (std::size_t t = 0; t <= r1; ++t) {
                const auto f = MatrixFamily::universal(normal_form(r1, r0, t));
                const std::vector<Rational> x0(f.base_dim());
                const auto phi = petri_form(f, x0, t);
                const long expected = expected_codim(0, static_cast<long>(r0), static_cast<long>(r1),
                                                     static_cast<long>(t));
                ASSERT_EQ(static_cast<long>(phi.rank()), expected);
                ASSERT_EQ(expected, universal_petri_rank(r1, r0, t));
                ASSERT_TRUE(petri_dual_agreement(f, x0));
            }
}

TEST(Collineation, PetriRejectsWrongCorank) {
    const auto f = MatrixFamily::universal(normal_form(2, 3, 1));
    EXPECT_THROW(petri_form(f, std::vector<Rational>(6), 0), std::invalid_argument);
    EXPECT_THROW(expected_codim(0, 2, 3, 1), std::invalid_argument);
    EXPECT_THROW(expected_codim(0, 3, 2, 3), std::invalid_argument);
}

TEST(Collineation, PetriVanishesAlongTheStratum) {
    // e(x) = diag(1, x): the corank stays 1 only at x = 0 and the direction leaves the locus.
    MatrixFamily f{RationalMatrix{{1, 0}, {0, 0}}, {RationalMatrix{{0, 0}, {0, 1}}}};
    EXPECT_EQ(petri_form(f, {0}, 1).rank(), 1u);
    // a direction tangent to the corank-1 locus
    MatrixFamily g{RationalMatrix{{1, 0}, {0, 0}}, {RationalMatrix{{1, 0}, {0, 0}}}};
    EXPECT_TRUE(petri_form(g, {0}, 1).is_zero());
}

TEST(Collineation, FamilyDerivative) {
    MatrixFamily f{RationalMatrix{{1, 2}}, {RationalMatrix{{1, 0}}, RationalMatrix{{0, 3}}}};
    EXPECT_EQ(f.at({2, 1}), (RationalMatrix{{3, 5}}));
    EXPECT_EQ(f.derivative({1, 1}), (RationalMatrix{{1, 3}}));
    EXPECT_EQ(f.transposed().at({2, 1}), (RationalMatrix{{3}, {5}}));
    EXPECT_EQ(corank(RationalMatrix{{1, 2}, {2, 4}, {0, 0}}), 1u);
}
