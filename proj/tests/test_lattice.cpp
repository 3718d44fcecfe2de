#include "mdl/lattice.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mdl::lattice;

namespace {

// v^T Q w written out from the Gram matrix [[0,0,-1],[0,2g-2,0],[-1,0,0]].
Integer gram_pairing(const MukaiVector& v, const MukaiVector& w, long g) {
    const Integer q[3][3] = {{0, 0, -1}, {0, 2 * g - 2, 0}, {-1, 0, 0}};
    const Integer a[3] = {v.r, v.d, v.s}, b[3] = {w.r, w.d, w.s};
    Integer s;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            s += a[i] * q[i][j] * b[j];
    return s;
}

MukaiVector draw(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> rs(-20, 20), dd(-5, 5);
    return {rs(rng), dd(rng), rs(rng)};
}

}  // namespace

TEST(Lattice, GenusBounds) {
    EXPECT_THROW(Genus(1), std::invalid_argument);
    EXPECT_EQ(Genus(6).l_squared(), 10);
}

TEST(Lattice, PairingMatchesGram) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const long g = 2 + static_cast<long>(rng() % 49);
        const auto v = draw(rng), w = draw(rng);
        ASSERT_EQ(pairing(v, w, Genus(g)), gram_pairing(v, w, g));
    }
}

TEST(Lattice, HilbertSchemeInvariants) {
    const Genus g(6);
    const MukaiVector v(1, 1, 0);
    EXPECT_EQ(pairing(v, v, g), 10);
    EXPECT_EQ(euler(v), 1);
    EXPECT_EQ(dim_moduli(v, g), 12);  // 2g
    EXPECT_EQ(hilbert_vector(6, g), v);
    EXPECT_EQ(jacobian_vector(6, g), MukaiVector(0, 1, 1));
    EXPECT_EQ(sigma(v), jacobian_vector(6, g));
}

TEST(Lattice, RegionMembership) {
    const Genus g(4);
    EXPECT_TRUE(in_region(MukaiVector(0, 1, 0), g).in_H);
    EXPECT_FALSE(in_region(MukaiVector(0, 0, 5), g).in_V);  // (r, d) = (0, 0)
    EXPECT_FALSE(in_region(MukaiVector(-1, 1, 2), g).in_V);
    EXPECT_TRUE(in_H_normalized(MukaiVector(-1, 1, 2), g));
    EXPECT_TRUE(in_region(MukaiVector(2, 2, 1), g).in_V);
    EXPECT_FALSE(in_region(MukaiVector(2, 2, 1), g).in_H);
    EXPECT_FALSE(in_H_normalized(MukaiVector(3, 1, 2), g));  // 4 - 6 < 0
    EXPECT_EQ(normalize_rank(MukaiVector(-1, 1, 2)), MukaiVector(1, 1, -2));
}

TEST(Lattice, TensorFormula) {
    const Genus g(5);
    // O(k) on (r, d, s): (r, d + rk, s + k d (2g-2) + k^2 r (g-1))
    EXPECT_EQ(tensor(MukaiVector(2, 1, 3), 2, g), MukaiVector(2, 5, 3 + 16 + 32));
    EXPECT_EQ(tensor(MukaiVector(0, 0, 1), 7, g), MukaiVector(0, 0, 1));
    std::mt19937_64 rng(12);
    for (int i = 0; i < 500; ++i) {
        const auto v = draw(rng);
        const Integer k = static_cast<long>(rng() % 21) - 10;
        ASSERT_EQ(tensor_matrix(k, g) * v, tensor(v, k, g));
        ASSERT_EQ(tensor(tensor(v, k, g), -k, g), v);
    }
}

TEST(Lattice, Reflections) {
    const MukaiVector v(2, 3, 5);
    EXPECT_EQ(sigma(v), MukaiVector(5, 3, 2));
    EXPECT_EQ(tau(v), MukaiVector(-5, 3, -2));
    EXPECT_EQ(sigma_tau(v), MukaiVector(-2, 3, -5));
    EXPECT_EQ(neg(v), MukaiVector(-2, -3, -5));
    EXPECT_EQ(sigma_matrix() * v, sigma(v));
    EXPECT_EQ(tau_matrix() * v, tau(v));
    EXPECT_EQ(sigma_matrix().determinant(), -1);
    EXPECT_EQ(tau_matrix().determinant(), -1);
}

TEST(Lattice, GeneratorsAreIsometries) {
    for (long g = 2; g <= 30; ++g) {
        const Genus gg(g);
        EXPECT_TRUE(is_isometry(sigma_matrix(), gg));
        EXPECT_TRUE(is_isometry(tau_matrix(), gg));
        EXPECT_TRUE(is_isometry(neg_matrix(), gg));
        EXPECT_TRUE(is_isometry(tensor_matrix(3, gg), gg));
        EXPECT_FALSE(is_isometry(IntMatrix3{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, gg));
    }
}

TEST(Lattice, GenusSevenExample) {
    const Genus g(7);
    const IntMatrix3 m{{2, 12, 3}, {1, 5, 1}, {3, 12, 2}};
    EXPECT_TRUE(is_isometry(m, g));
    EXPECT_EQ(m * MukaiVector(0, 0, 1), MukaiVector(3, 1, 2));
    EXPECT_FALSE(gamma_criterion(m, g));
}

TEST(Lattice, GammaPropertyOnGenerators) {
    for (long g = 2; g <= 20; ++g) {
        const Genus gg(g);
        EXPECT_TRUE(gamma_criterion(IntMatrix3::identity(), gg));
        EXPECT_TRUE(gamma_criterion(sigma_matrix() * tensor_matrix(-2, gg) * tau_matrix(), gg)) << g;
    }
    // g - 1 = 3 divides both entries
    EXPECT_FALSE(gamma_vector_property(MukaiVector(3, 1, 6), Genus(4)));
    // 4 divides only r, but gcd(4, 2) != 1
    EXPECT_FALSE(gamma_vector_property(MukaiVector(4, 1, 2), Genus(5)));
    EXPECT_TRUE(gamma_vector_property(MukaiVector(4, 1, 3), Genus(5)));
}

TEST(Lattice, O2Word) {
    for (long g = 2; g <= 100; ++g)
        ASSERT_EQ(o2_word(Genus(g)), tensor_matrix(2, Genus(g))) << g;
    EXPECT_TRUE(verify_o2_identity(Genus(9)));
}
