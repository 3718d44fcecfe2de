#include "mdl/collineation.hpp"

#include <algorithm>

namespace mdl::collineation {

using linalg::image;
using linalg::nullspace;
using linalg::rank;

namespace {

struct MapShape {
    std::size_t rank = 0;
    std::size_t nullity = 0;
    std::size_t conullity = 0;
};

MapShape shape_of(const RationalMatrix& m) {
    const std::size_t r = rank(m);
    return {r, m.cols() - r, m.rows() - r};
}

bool terminal(const MapShape& s, long chi) { return chi >= 0 ? s.conullity == 0 : s.nullity == 0; }

std::string ordinal(std::size_t i) { return "rho_" + std::to_string(i + 1); }

}  // namespace

Validation validate(const CollineationChain& c) {
    auto fail = [](std::string why) { return Validation{false, std::move(why)}; };
    if (c.dim_v0 == 0 || c.dim_v1 == 0)
        return c.maps.empty() ? Validation{} : fail("chain must be empty when V0 or V1 is zero");
    if (c.maps.empty())
        return fail("chain is empty but V0 and V1 are nonzero");
    if (c.maps.front().rows() != c.dim_v1 || c.maps.front().cols() != c.dim_v0)
        return fail("rho_1 is not a map V0 -> V1");

    const long chi = c.chi();
    for (std::size_t i = 0; i < c.maps.size(); ++i) {
        const MapShape s = shape_of(c.maps[i]);
        if (i > 0 && s.rank == 0)
            return fail(ordinal(i) + " is zero");
        const bool last = i + 1 == c.maps.size();
        if (!last) {
            if (terminal(s, chi))
                return fail(ordinal(i) + (chi >= 0 ? " is surjective" : " is injective") +
                            " but the chain continues");
            const RationalMatrix& next = c.maps[i + 1];
            if (next.rows() != s.conullity || next.cols() != s.nullity)
                return fail(ordinal(i + 1) + " is not a map ker -> coker of " + ordinal(i));
        } else if (!terminal(s, chi)) {
            return fail(chi >= 0 ? "last map not surjective" : "last map not injective");
        }
    }
    return {};
}

CollineationChain transpose_chain(const CollineationChain& c) {
    if (auto v = validate(c); !v)
        throw InvalidChain("transpose_chain: " + v.diagnostic);
    CollineationChain out{c.dim_v1, c.dim_v0, {}};
    if (c.maps.empty())
        return out;

    // Pairings <A, A'> and <B, B'> between the domain/codomain of the current
    // map R : A -> B and of its transpose R' : B' -> A'.
    RationalMatrix gram_a = RationalMatrix::identity(c.dim_v0);
    RationalMatrix gram_b = RationalMatrix::identity(c.dim_v1);
    for (std::size_t i = 0; i < c.maps.size(); ++i) {
        const RationalMatrix& r = c.maps[i];
        // <R a, b'>_B = <a, R' b'>_A
        RationalMatrix rt = linalg::inverse(gram_a) * r.transpose() * gram_b;
        if (i + 1 < c.maps.size()) {
            const RationalMatrix ker = nullspace(r);
            const RationalMatrix coker_section = image(r).section();
            const RationalMatrix ker_t = nullspace(rt);
            const RationalMatrix coker_t_section = image(rt).section();
            gram_b = coker_section.transpose() * gram_b * ker_t;
            gram_a = ker.transpose() * gram_a * coker_t_section;
        }
        out.maps.push_back(std::move(rt));
    }
    return out;
}

std::size_t stratum_index(const RationalMatrix& e) {
    return std::min(linalg::nullity(e), linalg::nullity(e.transpose()));
}

DualityPairings duality_pairings(const RationalMatrix& e) {
    const RationalMatrix et = e.transpose();
    return {image(e).section().transpose() * nullspace(et), nullspace(e).transpose() * image(et).section()};
}

bool ker_coker_duality(const RationalMatrix& e) {
    const std::size_t r = rank(e);
    const std::size_t ker = e.cols() - r;
    const std::size_t coker = e.rows() - r;
    const RationalMatrix et = e.transpose();
    if (linalg::nullity(et) != coker || et.rows() - rank(et) != ker)
        return false;
    const DualityPairings p = duality_pairings(e);
    auto nondegenerate = [](const RationalMatrix& g, std::size_t n) {
        return g.rows() == n && g.cols() == n && (n == 0 || sgn(linalg::determinant(g)) != 0);
    };
    return nondegenerate(p.coker_ker, coker) && nondegenerate(p.ker_coker, ker);
}

RationalMatrix MatrixFamily::at(const std::vector<Rational>& x) const {
    if (x.size() != directions.size())
        throw std::invalid_argument("MatrixFamily::at: point has wrong dimension");
    RationalMatrix e = constant;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) != 0)
            e = e + directions[i] * x[i];
    return e;
}

RationalMatrix MatrixFamily::derivative(const std::vector<Rational>& xi) const {
    if (xi.size() != directions.size())
        throw std::invalid_argument("MatrixFamily::derivative: direction has wrong dimension");
    RationalMatrix d(constant.rows(), constant.cols());
    for (std::size_t i = 0; i < xi.size(); ++i)
        if (sgn(xi[i]) != 0)
            d = d + directions[i] * xi[i];
    return d;
}

MatrixFamily MatrixFamily::transposed() const {
    MatrixFamily f{constant.transpose(), {}};
    for (const auto& d : directions)
        f.directions.push_back(d.transpose());
    return f;
}

MatrixFamily MatrixFamily::universal(const RationalMatrix& e0) {
    MatrixFamily f{e0, {}};
    for (std::size_t i = 0; i < e0.rows(); ++i)
        for (std::size_t j = 0; j < e0.cols(); ++j) {
            RationalMatrix unit(e0.rows(), e0.cols());
            unit(i, j) = 1;
            f.directions.push_back(std::move(unit));
        }
    return f;
}

std::size_t corank(const RationalMatrix& e) { return std::min(e.rows(), e.cols()) - rank(e); }

std::size_t PetriForm::rank() const {
    RationalMatrix m(tangent_dim, kernel_dim * coker_dim);
    for (std::size_t i = 0; i < tangent_dim; ++i)
        for (std::size_t j = 0; j < kernel_dim; ++j)
            for (std::size_t k = 0; k < coker_dim; ++k)
                m(i, j * coker_dim + k) = values[i][j][k];
    return linalg::rank(m);
}

bool PetriForm::is_zero() const {
    for (const auto& by_kernel : values)
        for (const auto& v : by_kernel)
            for (const auto& x : v)
                if (sgn(x) != 0)
                    return false;
    return true;
}

PetriForm petri_form(const MatrixFamily& f, const std::vector<Rational>& x0, std::size_t t) {
    const RationalMatrix e = f.at(x0);
    if (corank(e) != t)
        throw std::invalid_argument("petri_form: e(x0) has corank " + std::to_string(corank(e)) + ", expected " +
                                    std::to_string(t));
    const RationalMatrix ker = nullspace(e);
    const RationalMatrix to_coker = image(e).quotient_map();

    PetriForm phi;
    phi.tangent_dim = f.base_dim();
    phi.kernel_dim = ker.cols();
    phi.coker_dim = to_coker.rows();
    phi.values.resize(phi.tangent_dim);
    for (std::size_t i = 0; i < phi.tangent_dim; ++i) {
        const RationalMatrix moved = to_coker * f.directions[i] * ker;
        phi.values[i].resize(phi.kernel_dim);
        for (std::size_t j = 0; j < phi.kernel_dim; ++j)
            phi.values[i][j] = moved.column(j);
    }
    return phi;
}

bool petri_dual_agreement(const MatrixFamily& f, const std::vector<Rational>& x0) {
    const RationalMatrix e = f.at(x0);
    const PetriForm phi = petri_form(f, x0, corank(e));
    const PetriForm phi_t = petri_form(f.transposed(), x0, corank(e.transpose()));
    if (phi.kernel_dim != phi_t.coker_dim || phi.coker_dim != phi_t.kernel_dim)
        return false;
    const DualityPairings p = duality_pairings(e);
    // <phi(xi, f_j), z_k> == <f_j, phi^T(xi, z_k)>
    for (std::size_t i = 0; i < phi.tangent_dim; ++i)
        for (std::size_t j = 0; j < phi.kernel_dim; ++j)
            for (std::size_t k = 0; k < phi.coker_dim; ++k) {
                Rational lhs, rhs;
                for (std::size_t l = 0; l < phi.coker_dim; ++l)
                    lhs += phi.values[i][j][l] * p.coker_ker(l, k);
                for (std::size_t m = 0; m < phi.kernel_dim; ++m)
                    rhs += p.ker_coker(j, m) * phi_t.values[i][k][m];
                if (lhs != rhs)
                    return false;
            }
    return true;
}

long expected_codim(long /*dim_m*/, long r0, long r1, long t) {
    if (r1 > r0)
        throw std::invalid_argument("expected_codim: need r0 >= r1");
    if (t < 0 || t > r1)
        throw std::invalid_argument("expected_codim: need 0 <= t <= r1");
    return t * (r0 - r1 + t);
}

CollineationChain greedy_complete(const RationalMatrix& rho1, std::mt19937_64& rng) {
    CollineationChain c{rho1.cols(), rho1.rows(), {}};
    if (c.dim_v0 == 0 || c.dim_v1 == 0)
        return c;
    c.maps.push_back(rho1);
    std::uniform_int_distribution<int> dist(-2, 2);
    for (;;) {
        const MapShape s = shape_of(c.maps.back());
        if (terminal(s, c.chi()))
            return c;
        RationalMatrix next(s.conullity, s.nullity);
        do {
            for (std::size_t i = 0; i < next.rows(); ++i)
                for (std::size_t j = 0; j < next.cols(); ++j)
                    next(i, j) = dist(rng);
        } while (next.is_zero());
        c.maps.push_back(std::move(next));
    }
}

}  // namespace mdl::collineation
