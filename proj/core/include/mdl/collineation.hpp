#pragma once

#include "mdl/linalg.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace mdl::collineation {

using linalg::Rational;
using linalg::RationalMatrix;

// Complete collineation rho_1 : V0 -> V1, rho_{i+1} : ker(rho_i) -> coker(rho_i).
// Kernels use the canonical null-space basis, cokernels the non-pivot
// coordinates of the image; each map is a matrix in those coordinates.
struct CollineationChain {
    std::size_t dim_v0 = 0;
    std::size_t dim_v1 = 0;
    std::vector<RationalMatrix> maps;

    long chi() const { return static_cast<long>(dim_v0) - static_cast<long>(dim_v1); }
    bool operator==(const CollineationChain&) const = default;
};

struct Validation {
    bool valid = true;
    std::string diagnostic;
    explicit operator bool() const { return valid; }
};

// Rules: empty exactly when a space is zero; shapes chain through
// nullity/conullity; rho_i for i >= 2 is nonzero; every map before the last
// is neither surjective (chi >= 0) nor injective (chi <= 0); the last one is.
Validation validate(const CollineationChain& c);

class InvalidChain : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// rho_1^T, rho_2^T, ... from V1* to V0*, each transpose written in the
// canonical bases of ker/coker of the previous transposed map through the
// duality pairings coker(rho) x ker(rho^T) and ker(rho) x coker(rho^T).
CollineationChain transpose_chain(const CollineationChain& c);

// min(nullity(e), nullity(e^T)).
std::size_t stratum_index(const RationalMatrix& e);

struct DualityPairings {
    // Gram matrix of coker(e) x ker(e^T) -> Q, (quotient coords) x (kernel basis).
    RationalMatrix coker_ker;
    // Gram matrix of ker(e) x coker(e^T) -> Q.
    RationalMatrix ker_coker;
};

DualityPairings duality_pairings(const RationalMatrix& e);
bool ker_coker_duality(const RationalMatrix& e);

// e(x) = e_0 + sum_i x_i e_i, all terms of shape r1 x r0 (maps Q^r0 -> Q^r1).
struct MatrixFamily {
    RationalMatrix constant;
    std::vector<RationalMatrix> directions;

    std::size_t base_dim() const { return directions.size(); }
    RationalMatrix at(const std::vector<Rational>& x) const;
    // D_xi e = sum_i xi_i e_i.
    RationalMatrix derivative(const std::vector<Rational>& xi) const;
    MatrixFamily transposed() const;
    // The family whose coordinates are the matrix entries, centred at e0.
    static MatrixFamily universal(const RationalMatrix& e0);
};

// corank of a r1 x r0 matrix: min(r0, r1) - rank.
std::size_t corank(const RationalMatrix& e);

// phi(xi (x) f) as coker(e(x0)) coordinates; values[i][j] for tangent
// direction i and kernel basis vector j.
struct PetriForm {
    std::size_t tangent_dim = 0;
    std::size_t kernel_dim = 0;
    std::size_t coker_dim = 0;
    std::vector<std::vector<std::vector<Rational>>> values;

    // Rank of the induced map T -> Hom(ker, coker).
    std::size_t rank() const;
    bool is_zero() const;
};

PetriForm petri_form(const MatrixFamily& f, const std::vector<Rational>& x0, std::size_t t);
bool petri_dual_agreement(const MatrixFamily& f, const std::vector<Rational>& x0);

// t(r0 - r1 + t), the expected codimension of the corank-t locus.
long expected_codim(long dim_m, long r0, long r1, long t);

// Complete a degenerate first map to a valid chain by drawing each later map
// uniformly from integer matrices in [-2, 2] until the validity rules hold.
CollineationChain greedy_complete(const RationalMatrix& rho1, std::mt19937_64& rng);

}  // namespace mdl::collineation
