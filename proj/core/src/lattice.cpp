#include "mdl/lattice.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mdl::lattice {

Genus::Genus(long g) : Genus(Integer(g)) {}

Genus::Genus(Integer g) : g_(std::move(g)) {
    if (g_ < 2)
        throw std::invalid_argument("genus must be >= 2, got " + g_.get_str());
}

std::string MukaiVector::str() const {
    return "(" + r.get_str() + "," + d.get_str() + "," + s.get_str() + ")";
}

std::ostream& operator<<(std::ostream& os, const MukaiVector& v) { return os << v.str(); }

MukaiVector trivial(const Integer& t) { return {t, 0, t}; }

Integer pairing(const MukaiVector& v, const MukaiVector& w, const Genus& g) {
    return v.d * w.d * g.l_squared() - v.r * w.s - w.r * v.s;
}

Integer euler(const MukaiVector& v) { return v.r + v.s; }

Integer dim_moduli(const MukaiVector& v, const Genus& g) { return pairing(v, v, g) + 2; }

Region in_region(const MukaiVector& v, const Genus& g) {
    Region out;
    if (v.r == 0 && v.d == 0)
        return out;
    const Integer half_dim = 1 + v.d * v.d * (g.value() - 1) - v.r * v.s;
    out.in_V = half_dim >= 0 && v.r >= 0;
    out.in_H = out.in_V && v.d == 1;
    return out;
}

MukaiVector normalize_rank(const MukaiVector& v) { return v.r < 0 ? sigma_tau(v) : v; }

bool in_H_normalized(const MukaiVector& v, const Genus& g) {
    return in_region(normalize_rank(v), g).in_H;
}

MukaiVector tensor(const MukaiVector& v, const Integer& k, const Genus& g) {
    // s + (1/2) kL.(2dL + rkL) = s + k d (2g-2) + k^2 r (g-1)
    return {v.r, v.d + v.r * k, v.s + k * v.d * g.l_squared() + k * k * v.r * (g.value() - 1)};
}

MukaiVector sigma(const MukaiVector& v) { return {v.s, v.d, v.r}; }
MukaiVector tau(const MukaiVector& v) { return {-v.s, v.d, -v.r}; }
MukaiVector neg(const MukaiVector& v) { return -v; }
MukaiVector sigma_tau(const MukaiVector& v) { return sigma(tau(v)); }

MukaiVector hilbert_vector(const Integer& d, const Genus& g) { return {1, 1, g.value() - d}; }
MukaiVector jacobian_vector(const Integer& d, const Genus& g) { return {0, 1, d + 1 - g.value()}; }

IntMatrix3::IntMatrix3(std::initializer_list<std::initializer_list<long>> rows) {
    if (rows.size() != 3)
        throw std::invalid_argument("IntMatrix3 needs 3 rows");
    int i = 0;
    for (const auto& r : rows) {
        if (r.size() != 3)
            throw std::invalid_argument("IntMatrix3 needs 3 columns");
        int j = 0;
        for (long x : r)
            m_[i][j++] = x;
        ++i;
    }
}

IntMatrix3 IntMatrix3::identity() { return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}; }

IntMatrix3 IntMatrix3::operator*(const IntMatrix3& o) const {
    IntMatrix3 p;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                p.m_[i][j] += m_[i][k] * o.m_[k][j];
    return p;
}

MukaiVector IntMatrix3::operator*(const MukaiVector& v) const {
    auto row = [&](int i) -> Integer { return m_[i][0] * v.r + m_[i][1] * v.d + m_[i][2] * v.s; };
    return {row(0), row(1), row(2)};
}

IntMatrix3 IntMatrix3::transpose() const {
    IntMatrix3 t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            t.m_[j][i] = m_[i][j];
    return t;
}

Integer IntMatrix3::determinant() const {
    const auto& a = m_;
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

std::string IntMatrix3::str() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < 3; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < 3; ++j)
            os << (j ? "," : "") << m_[i][j].get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

IntMatrix3 gram(const Genus& g) {
    IntMatrix3 q;
    q(0, 2) = -1;
    q(2, 0) = -1;
    q(1, 1) = g.l_squared();
    return q;
}

IntMatrix3 sigma_matrix() { return {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}; }
IntMatrix3 tau_matrix() { return {{0, 0, -1}, {0, 1, 0}, {-1, 0, 0}}; }
IntMatrix3 neg_matrix() { return {{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}; }

IntMatrix3 tensor_matrix(const Integer& k, const Genus& g) {
    IntMatrix3 m = IntMatrix3::identity();
    m(1, 0) = k;
    m(2, 0) = k * k * (g.value() - 1);
    m(2, 1) = k * g.l_squared();
    return m;
}

bool is_isometry(const IntMatrix3& m, const Genus& g) {
    const IntMatrix3 q = gram(g);
    return m.transpose() * q * m == q;
}

bool gamma_vector_property(const MukaiVector& v, const Genus& g) {
    const Integer n = g.value() - 1;
    // g = 2: every integer is divisible by 1, the group is the full isometry group.
    if (n == 1)
        return true;
    const bool r_div = mpz_divisible_p(v.r.get_mpz_t(), n.get_mpz_t()) != 0;
    const bool s_div = mpz_divisible_p(v.s.get_mpz_t(), n.get_mpz_t()) != 0;
    if (r_div == s_div)
        return false;
    const Integer& other = r_div ? v.s : v.r;
    return gcd(n, other) == 1;
}

bool gamma_criterion(const IntMatrix3& m, const Genus& g) {
    return gamma_vector_property(m * MukaiVector(0, 0, 1), g);
}

IntMatrix3 o2_word(const Genus& g) {
    const IntMatrix3 up = tensor_matrix(1, g);
    const IntMatrix3 down = tensor_matrix(-1, g);
    const IntMatrix3 sigma_p = up * sigma_matrix() * down;
    const IntMatrix3 tau_p = up * tau_matrix() * down;
    return sigma_p * tau_p * sigma_matrix() * tau_matrix();
}

bool verify_o2_identity(const Genus& g) { return o2_word(g) == tensor_matrix(2, g); }

}  // namespace mdl::lattice
