#include "mdl/linalg.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace mdl::linalg;

namespace {

RationalMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int bound = 3) {
    std::uniform_int_distribution<int> d(-bound, bound);
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = Rational(d(rng), 1 + std::abs(d(rng)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j).canonicalize();
    return m;
}

// Leibniz expansion over all permutations.
Rational leibniz(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                inversions += perm[i] > perm[j];
        Rational term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i)
            term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Largest k with a nonzero k x k minor.
std::size_t rank_by_minors(const RationalMatrix& m) {
    const std::size_t top = std::min(m.rows(), m.cols());
    for (std::size_t k = top; k > 0; --k) {
        std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
        std::fill(rsel.end() - static_cast<long>(k), rsel.end(), true);
        do {
            std::fill(csel.begin(), csel.end(), false);
            std::fill(csel.end() - static_cast<long>(k), csel.end(), true);
            do {
                std::vector<std::size_t> ri, ci;
                for (std::size_t i = 0; i < m.rows(); ++i)
                    if (rsel[i])
                        ri.push_back(i);
                for (std::size_t j = 0; j < m.cols(); ++j)
                    if (csel[j])
                        ci.push_back(j);
                if (sgn(leibniz(m.select_rows(ri).select_cols(ci))) != 0)
                    return k;
            } while (std::next_permutation(csel.begin(), csel.end()));
        } while (std::next_permutation(rsel.begin(), rsel.end()));
    }
    return 0;
}

}  // namespace

TEST(Linalg, ProductMatchesDefinition) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_matrix(3, 4, rng);
        const auto b = random_matrix(4, 2, rng);
        const auto p = a * b;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                Rational s;
                for (std::size_t k = 0; k < 4; ++k)
                    s += a(i, k) * b(k, j);
                ASSERT_EQ(p(i, j), s);
            }
    }
}

TEST(Linalg, RankAgreesWithMinors) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        RationalMatrix m = random_matrix(r, c, rng, 2);
        if (trial % 3 == 0 && r > 1)  // force a dependent row
            for (std::size_t j = 0; j < c; ++j)
                m(r - 1, j) = m(0, j) * Rational(2, 3);
        ASSERT_EQ(rank(m), rank_by_minors(m)) << m;
    }
}

TEST(Linalg, DeterminantAgreesWithLeibniz) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const auto m = random_matrix(n, n, rng);
        ASSERT_EQ(determinant(m), leibniz(m));
    }
}

TEST(Linalg, RrefIsCanonical) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = random_matrix(4, 5, rng, 2);
        const EchelonForm e = rref(m);
        ASSERT_EQ(e.pivots.size(), rank(m));
        ASSERT_EQ(e.pivots.size() + e.free.size(), m.cols());
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            for (std::size_t k = 0; k < e.reduced.rows(); ++k)
                ASSERT_EQ(e.reduced(k, e.pivots[i]), k == i ? 1 : 0);
        // row operations do not change the result
        RationalMatrix shuffled = m.select_rows(std::vector<std::size_t>{3, 1, 0, 2});
        ASSERT_EQ(rref(shuffled).reduced, e.reduced);
        ASSERT_EQ(rref(e.reduced).reduced, e.reduced);
    }
}

TEST(Linalg, NullspaceIsKernel) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = random_matrix(3, 6, rng, 2);
        const auto n = nullspace(m);
        ASSERT_EQ(n.cols(), m.cols() - rank(m));
        ASSERT_TRUE((m * n).is_zero());
        ASSERT_EQ(rank(n), n.cols());
    }
}

TEST(Linalg, InverseAndSingular) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = random_matrix(4, 4, rng);
        if (sgn(determinant(m)) == 0) {
            EXPECT_THROW(inverse(m), std::domain_error);
            continue;
        }
        ASSERT_EQ(m * inverse(m), RationalMatrix::identity(4));
    }
    EXPECT_THROW(inverse(RationalMatrix{{1, 2}, {2, 4}}), std::domain_error);
}

TEST(Linalg, SubspaceMaps) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto spanning = random_matrix(1 + rng() % 4, 6, rng, 2);
        const Subspace w = Subspace::row_span(spanning);
        ASSERT_EQ(w.dim(), rank(spanning));
        ASSERT_TRUE((w.quotient_map() * w.inclusion()).is_zero());
        ASSERT_EQ(w.coordinate_map() * w.inclusion(), RationalMatrix::identity(w.dim()));
        ASSERT_EQ(w.quotient_map() * w.section(), RationalMatrix::identity(w.codim()));
        ASSERT_TRUE((w.coordinate_map() * w.section()).is_zero());
        for (std::size_t i = 0; i < spanning.rows(); ++i) {
            const auto row = spanning.row(i);
            ASSERT_TRUE(w.contains(std::vector<Rational>(row.begin(), row.end())));
        }
        ASSERT_TRUE(Subspace::row_span(w.basis()) == w);
    }
}

TEST(Linalg, ImageKernelDimensions) {
    const RationalMatrix m{{1, 2, 3}, {2, 4, 6}};
    EXPECT_EQ(image(m).dim(), 1u);
    EXPECT_EQ(kernel(m).dim(), 2u);
    EXPECT_TRUE(image(m).contains(std::vector<Rational>{1, 2}));
    EXPECT_FALSE(image(m).contains(std::vector<Rational>{1, 0}));
}

TEST(Linalg, ShapeMismatchThrows) {
    EXPECT_THROW(RationalMatrix(2, 3) * RationalMatrix(2, 3), std::invalid_argument);
}
