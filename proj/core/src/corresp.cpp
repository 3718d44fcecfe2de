#include "mdl/corresp.hpp"

#include "mdl/strata.hpp"

#include <stdexcept>

namespace mdl::corresp {

namespace {

// Coefficients of (1 - t)^e.
std::vector<Integer> one_minus_t_power(unsigned e) {
    std::vector<Integer> poly{1};
    for (unsigned k = 0; k < e; ++k) {
        std::vector<Integer> next(poly.size() + 1);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] -= poly[i];
        }
        poly = std::move(next);
    }
    return poly;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace

CohomologyModel::CohomologyModel(std::vector<BasisClass> basis, RationalMatrix pairing)
    : basis_(std::move(basis)), pairing_(std::move(pairing)) {
    if (pairing_.rows() != basis_.size() || pairing_.cols() != basis_.size())
        throw std::invalid_argument("CohomologyModel: pairing must be square of basis size");
    if (!(pairing_ == pairing_.transpose()))
        throw std::invalid_argument("CohomologyModel: pairing must be symmetric");
    for (const auto& b : basis_)
        if (b.degree < 0)
            throw std::invalid_argument("CohomologyModel: negative degree for " + b.label);
}

Rational CohomologyModel::pair(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    const auto gb = pairing_.apply(b);
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * gb[i];
    return s;
}

bool Correspondence::is_degree_preserving(const CohomologyModel& model) const {
    if (matrix.rows() != model.rank() || matrix.cols() != model.rank())
        return false;
    for (std::size_t i = 0; i < matrix.rows(); ++i)
        for (std::size_t j = 0; j < matrix.cols(); ++j)
            if (sgn(matrix(i, j)) != 0 && model.basis()[i].degree != model.basis()[j].degree)
                return false;
    return true;
}

bool delta_dimension_audit(const MukaiVector& v, const Genus& g) {
    const strata::StratifiedCollection c = strata::build_collection(v, g);
    const MukaiVector& w = c.base();
    const Integer dim = lattice::dim_moduli(w, g);
    const Integer achi = abs(lattice::euler(w));
    for (int t = 1; t <= c.mu; ++t) {
        const MukaiVector shifted = w + lattice::trivial(c.direction * t);
        const strata::Grassmannian fiber{t, achi + 2 * t};
        if (lattice::dim_moduli(shifted, g) + 2 * fiber.dim() != dim)
            return false;
    }
    return true;
}

Correspondence projection_cycle(const CohomologyModel& model, const std::vector<Rational>& theta) {
    if (theta.size() != model.rank())
        throw std::invalid_argument("projection_cycle: theta has wrong length");
    // Delta(alpha) = (alpha . theta) theta, so Delta = theta (G theta)^T.
    const auto g_theta = model.pairing().apply(theta);
    RationalMatrix m(model.rank(), model.rank());
    for (std::size_t i = 0; i < model.rank(); ++i)
        for (std::size_t j = 0; j < model.rank(); ++j)
            m(i, j) = theta[i] * g_theta[j];
    return {m};
}

bool tau_selfdual_check(const CohomologyModel& model, const std::vector<Rational>& theta) {
    if (model.pair(theta, theta) != -2)
        throw std::invalid_argument("tau_selfdual_check: theta . theta must be -2");
    const Correspondence delta = projection_cycle(model, theta);
    return delta * delta == delta * Rational(-2);
}

bool g4_relation(const Integer& graph_eigen, const Integer& delta_eigen) {
    return graph_eigen * graph_eigen + 2 * graph_eigen * delta_eigen + delta_eigen * delta_eigen == 1;
}

Integer top_chern_cotangent_projective(unsigned n) {
    // c(T*P^n) = (1 - h)^{n+1}; the h^n coefficient.
    return one_minus_t_power(n + 1)[n];
}

Integer euler_projective(unsigned n) { return n + 1; }

SigmaG4 sigma_g4_check(const Integer& graph_eigen) {
    SigmaG4 out;
    out.delta1_eigen = top_chern_cotangent_projective(3);
    out.graph_eigen = graph_eigen;
    out.relation = g4_relation(out.graph_eigen, out.delta1_eigen);
    return out;
}

Integer sym_euler(const Genus& g, unsigned n) {
    const unsigned e = static_cast<unsigned>(2 * g.get() - 2);
    const auto poly = one_minus_t_power(e);
    return n < poly.size() ? poly[n] : Integer(0);
}

Integer lagrangian_self_intersection(const Genus& g) {
    const unsigned long gg = static_cast<unsigned long>(g.get());
    const Integer value = binomial(2 * gg - 2, gg);
    const Integer sign = gg % 2 == 0 ? 1 : -1;
    if (value != sign * sym_euler(g, static_cast<unsigned>(gg)))
        throw std::logic_error("Lagrangian self-intersection disagrees with (-1)^g chi(C^[g])");
    return value;
}

Integer jacobian_self_intersection(const Genus& g) {
    Integer sum;
    for (const auto& c : one_minus_t_power(static_cast<unsigned>(2 * g.get())))
        sum += c;
    return sum;
}

}  // namespace mdl::corresp
