#pragma once

#include "mdl/linalg.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace mdl::nilorbit {

using linalg::Rational;
using linalg::RationalMatrix;
using linalg::Subspace;

class NotSquareZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The transposition map is only birational; points of lower rank have no image.
class OffDenseOrbit : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A point (W, psi) of the cotangent bundle T*G(t, H), H = Q^h, with
// psi : H/W -> W written in the pivot / non-pivot coordinate split of W.
class CotangentPoint {
public:
    CotangentPoint(Subspace w, RationalMatrix psi);

    std::size_t h() const { return w_.ambient(); }
    std::size_t t() const { return w_.dim(); }
    // n = h - 2t + 1
    long n() const { return static_cast<long>(h()) - 2 * static_cast<long>(t()) + 1; }

    const Subspace& w() const { return w_; }
    const RationalMatrix& psi() const { return psi_; }

    bool operator==(const CotangentPoint&) const = default;

private:
    Subspace w_;
    RationalMatrix psi_;
};

// N = (W -> H) o psi o (H -> H/W); square-zero with im N in W in ker N.
RationalMatrix springer(const CotangentPoint& p);
// t - rank(psi).
std::size_t corank(const CotangentPoint& p);

bool is_square_zero(const RationalMatrix& n);

// The point of T*G(t, H*) over N^T: W' = im(N^T), psi' induced by N^T.
// Requires N^2 = 0 and rank(N) = t.
CotangentPoint dual_point(const RationalMatrix& n, std::size_t t);

struct FiberDescriptor {
    std::size_t k = 0;  // rank N
    std::size_t sub = 0;      // t - k
    std::size_t ambient = 0;  // h - 2k
    std::size_t dim() const { return sub * (ambient - sub); }
};

// The fiber of T*G(t,H) -> End(H) over N is {W : im N <= W <= ker N, dim W = t},
// a Grassmannian G(t - k, h - 2k).
FiberDescriptor fiber_space(const RationalMatrix& n, std::size_t t);

// gamma * (projection onto W along the standard complement) + springer(p);
// satisfies A^2 = gamma A.
RationalMatrix deform(const CotangentPoint& p, const Rational& gamma);

// Weakly decreasing positive parts.
class Partition {
public:
    explicit Partition(std::vector<int> parts);
    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    std::size_t length() const { return parts_.size(); }
    bool operator==(const Partition&) const = default;
    std::string str() const;

private:
    std::vector<int> parts_;
};

Partition dual_partition(const Partition& eta);
// All partitions of h in reverse lexicographic order.
std::vector<Partition> partitions(int h);
// Prefix sums n_j = sum_{i<=j} eta_hat[theta(i)], j = 1..m-1 (theta is 0-based).
std::vector<int> flag_dims(const Partition& eta, const std::vector<int>& theta);

// Nilpotent matrix with one regular Jordan block per part of eta.
RationalMatrix jordan_nilpotent(const Partition& eta);

struct FlagCheck {
    Partition eta;
    std::vector<int> theta;
    std::string failure;
};

struct FlagReport {
    int h = 0;
    std::size_t partitions = 0;
    std::size_t flags_checked = 0;
    std::vector<FlagCheck> failures;
    bool ok() const { return failures.empty(); }
};

// For every partition eta of h and every ordering theta of the parts of its
// dual: dim T*Flag(n(theta), H) equals the orbit dimension h^2 - dim of the
// centralizer of N_eta (computed by elimination), and the flag built from the
// Jordan basis ordered by theta is N_eta-compatible with the right dimensions.
FlagReport verify_flag_resolution_dims(int h, int max_h = 7);

// t - rank(W -> H -> H/Wt) for dim W = t, dim Wt = h - t.
std::size_t alpha_corank(const Subspace& w, const Subspace& wt);

// Random point with integer entries uniform in [-3, 3]; W is drawn by
// rejection until it has rank t. When `dense` is set psi is redrawn until it
// has full rank t.
CotangentPoint sample_point(std::size_t h, std::size_t t, std::mt19937_64& rng, bool dense);
// Random point whose psi has rank exactly k <= t.
CotangentPoint sample_point_with_rank(std::size_t h, std::size_t t, std::size_t k, std::mt19937_64& rng);

}  // namespace mdl::nilorbit
