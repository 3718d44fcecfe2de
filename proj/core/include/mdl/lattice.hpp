#pragma once

#include <gmpxx.h>

#include <array>
#include <iosfwd>
#include <string>

namespace mdl::lattice {

using Integer = mpz_class;

// Genus of the polarization L; L^2 = 2g - 2.
class Genus {
public:
    explicit Genus(long g);
    explicit Genus(Integer g);

    const Integer& value() const { return g_; }
    long get() const { return g_.get_si(); }
    Integer l_squared() const { return 2 * g_ - 2; }

    bool operator==(const Genus&) const = default;

private:
    Integer g_;
};

// Mukai vector (r, d*L, s) in the rank-3 algebraic lattice.
struct MukaiVector {
    Integer r;
    Integer d;
    Integer s;

    MukaiVector() = default;
    MukaiVector(Integer r_, Integer d_, Integer s_) : r(std::move(r_)), d(std::move(d_)), s(std::move(s_)) {}
    MukaiVector(long r_, long d_, long s_) : r(r_), d(d_), s(s_) {}

    MukaiVector operator+(const MukaiVector& o) const { return {r + o.r, d + o.d, s + o.s}; }
    MukaiVector operator-(const MukaiVector& o) const { return {r - o.r, d - o.d, s - o.s}; }
    MukaiVector operator-() const { return {-r, -d, -s}; }
    bool operator==(const MukaiVector& o) const { return r == o.r && d == o.d && s == o.s; }

    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const MukaiVector& v);

// The vector t⃗ = (t, 0, t) of the trivial rank-t bundle.
MukaiVector trivial(const Integer& t);

Integer pairing(const MukaiVector& v, const MukaiVector& w, const Genus& g);
Integer euler(const MukaiVector& v);
Integer dim_moduli(const MukaiVector& v, const Genus& g);

struct Region {
    bool in_V = false;
    bool in_H = false;
    bool operator==(const Region&) const = default;
};

// V: 1 + d^2(g-1) - rs >= 0 with r >= 0, excluding (r, d) = (0, 0). H: V with d = 1.
Region in_region(const MukaiVector& v, const Genus& g);

// Membership in H after identifying a negative-rank vector with its
// sigma-tau image. For d = 1 this is the hyperbola condition g - rs >= 0.
bool in_H_normalized(const MukaiVector& v, const Genus& g);
// sigma-tau image when r < 0, otherwise v.
MukaiVector normalize_rank(const MukaiVector& v);

MukaiVector tensor(const MukaiVector& v, const Integer& k, const Genus& g);
MukaiVector sigma(const MukaiVector& v);
MukaiVector tau(const MukaiVector& v);
MukaiVector neg(const MukaiVector& v);
MukaiVector sigma_tau(const MukaiVector& v);

MukaiVector hilbert_vector(const Integer& d, const Genus& g);
MukaiVector jacobian_vector(const Integer& d, const Genus& g);

// 3x3 integer matrix acting on (r, d, s) column vectors.
class IntMatrix3 {
public:
    IntMatrix3() = default;
    IntMatrix3(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix3 identity();

    Integer& operator()(int i, int j) { return m_[i][j]; }
    const Integer& operator()(int i, int j) const { return m_[i][j]; }

    IntMatrix3 operator*(const IntMatrix3& o) const;
    MukaiVector operator*(const MukaiVector& v) const;
    IntMatrix3 transpose() const;
    Integer determinant() const;
    bool operator==(const IntMatrix3& o) const { return m_ == o.m_; }

    std::string str() const;

private:
    std::array<std::array<Integer, 3>, 3> m_{};
};

// Gram matrix of the Mukai pairing in (r, d, s) coordinates.
IntMatrix3 gram(const Genus& g);

IntMatrix3 sigma_matrix();
IntMatrix3 tau_matrix();
IntMatrix3 neg_matrix();
IntMatrix3 tensor_matrix(const Integer& k, const Genus& g);

bool is_isometry(const IntMatrix3& m, const Genus& g);

// Necessary condition for membership in the group generated by -Id, sigma,
// tau and tensorization: the image (r, d, s) of (0, 0, 1) has g - 1 dividing
// exactly one of r, s and coprime to the other. False certifies non-membership.
bool gamma_vector_property(const MukaiVector& v, const Genus& g);
bool gamma_criterion(const IntMatrix3& m, const Genus& g);

// O(2) == sigma' tau' sigma tau with sigma' = O(1) sigma O(-1), tau' = O(1) tau O(-1).
IntMatrix3 o2_word(const Genus& g);
bool verify_o2_identity(const Genus& g);

}  // namespace mdl::lattice
