#pragma once

#include "mdl/lattice.hpp"
#include "mdl/linalg.hpp"

#include <string>
#include <vector>

namespace mdl::corresp {

using lattice::Genus;
using lattice::Integer;
using lattice::MukaiVector;
using linalg::Rational;
using linalg::RationalMatrix;

struct BasisClass {
    std::string label;
    int degree = 0;
};

// Finite-rank piece of a cohomology ring: a graded basis and a symmetric
// intersection pairing (zero between classes whose degrees do not pair).
class CohomologyModel {
public:
    CohomologyModel(std::vector<BasisClass> basis, RationalMatrix pairing);

    std::size_t rank() const { return basis_.size(); }
    const std::vector<BasisClass>& basis() const { return basis_; }
    const RationalMatrix& pairing() const { return pairing_; }
    Rational pair(const std::vector<Rational>& a, const std::vector<Rational>& b) const;

private:
    std::vector<BasisClass> basis_;
    RationalMatrix pairing_;
};

// Endomorphism of a model's basis; column j is the image of basis class j.
struct Correspondence {
    RationalMatrix matrix;

    Correspondence operator*(const Correspondence& o) const { return {matrix * o.matrix}; }
    Correspondence operator+(const Correspondence& o) const { return {matrix + o.matrix}; }
    Correspondence operator*(const Rational& c) const { return {matrix * c}; }
    bool operator==(const Correspondence&) const = default;

    bool is_degree_preserving(const CohomologyModel& model) const;
};

// Every 1 <= t <= mu(v): dim M(v+t) + 2 dim G(t, |chi|+2t) == dim M(v).
bool delta_dimension_audit(const MukaiVector& v, const Genus& g);

// alpha -> (alpha . theta) theta.
Correspondence projection_cycle(const CohomologyModel& model, const std::vector<Rational>& theta);

// Requires theta . theta = -2; checks Delta_1 o Delta_1 == -2 Delta_1.
bool tau_selfdual_check(const CohomologyModel& model, const std::vector<Rational>& theta);

// Eigenvalues on the line spanned by [P^3] in H^6(S^[3]) for g = 4:
// Delta_1 acts by c_3(T*P^3) = -4 and Gamma(sigma) by 3.
struct SigmaG4 {
    Integer delta1_eigen;
    Integer graph_eigen;
    bool relation = false;
};

// a^2 + 2 a d + d^2 == 1: (Gamma(sigma) + Delta)^2 == Gamma(id) on a line.
bool g4_relation(const Integer& graph_eigen, const Integer& delta_eigen);
SigmaG4 sigma_g4_check(const Integer& graph_eigen = 3);

// c_n(T*P^n) . [P^n] = (-1)^n binom(n+1, n), from c(TP^n) = (1+h)^{n+1}.
Integer top_chern_cotangent_projective(unsigned n);
// Topological Euler characteristic of P^n as the alternating Betti sum.
Integer euler_projective(unsigned n);

// Coefficient of t^n in (1-t)^{2g-2}, expanded as a polynomial.
Integer sym_euler(const Genus& g, unsigned n);
// binom(2g-2, g); asserts equality with (-1)^g sym_euler(g, g).
Integer lagrangian_self_intersection(const Genus& g);
// Euler characteristic of the real 2g-torus (the Jacobian J^g_C), expanded
// from (1-t)^{2g} at t = 1.
Integer jacobian_self_intersection(const Genus& g);

}  // namespace mdl::corresp
