#pragma once

#include "mdl/lattice.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mdl::strata {

using lattice::Genus;
using lattice::Integer;
using lattice::MukaiVector;

// Raised when a vector lies outside the region H of non-empty moduli.
class RegionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Grassmannian G(k, n) of k-planes in an n-dimensional space.
struct Grassmannian {
    Integer k;
    Integer n;
    Integer dim() const { return k * (n - k); }
    bool operator==(const Grassmannian&) const = default;
    std::string str() const { return "G(" + k.get_str() + "," + n.get_str() + ")"; }
};

// Stratum M(base)^t of a row of a stratified collection.
struct StratumDescriptor {
    MukaiVector base;
    int t = 0;
    Integer dim;
    Integer codim;
    // Fiber of the rational map onto the diagonal entry t steps below.
    std::optional<Grassmannian> fiber;

    bool operator==(const StratumDescriptor&) const = default;
};

// Upper-triangular collection: row i is M(v + dir*i*(1,0,1)) and its strata
// t = 0..mu-i; rows are 0-indexed.
struct StratifiedCollection {
    Genus g{2};
    std::vector<std::vector<StratumDescriptor>> rows;
    int direction = 1;
    int mu = 0;

    const MukaiVector& base() const { return rows.front().front().base; }
    // n = |chi| + 1 of row i.
    Integer n(std::size_t row) const;
    bool operator==(const StratifiedCollection&) const = default;
};

int mu(const MukaiVector& v, const Genus& g);
// max{0, (-n + ceil(sqrt(n^2 + 4g))) / 2}, kept for comparison with the scan.
mpq_class mu_jacobian_closed_form(const Integer& n, const Genus& g);

enum class ZeroChiDirection { plus, minus };

StratifiedCollection build_collection(const MukaiVector& v, const Genus& g,
                                      ZeroChiDirection zero_chi = ZeroChiDirection::plus);

enum class Reflection { sigma, tau };
StratifiedCollection dual_collection(const StratifiedCollection& c, Reflection reflection);

struct Violation {
    std::string identity;
    std::string detail;
};

std::vector<Violation> verify_conditions(const StratifiedCollection& c);

// Formal integer combination of exceptional-divisor symbols E^t.
class DivisorExpr {
public:
    DivisorExpr& add(int t, const Integer& coeff);
    const Integer& coefficient(int t) const;
    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Integer>& terms() const { return terms_; }
    std::string str() const;
    bool operator==(const DivisorExpr&) const = default;

private:
    std::map<int, Integer> terms_;
};

struct CanonicalLedger {
    // Entry 0 is the canonical class of the full blow-up; entry k is the class
    // after contracting the first k exceptional divisors onto the dual strata.
    std::vector<DivisorExpr> per_step;
    // Every contracted coefficient matched the discrepancy codim - 1 of the dual stratum.
    bool discrepancies_match = true;
    bool final_trivial = false;
};

CanonicalLedger canonical_class_ledger(const StratifiedCollection& c, std::size_t row);

struct CastelnuovoCount {
    Integer mu;
    Integer count;
};

// Present when 4g + 1 is a perfect square.
std::optional<CastelnuovoCount> castelnuovo(const Genus& g);

// v - (chi/2)(1,0,1) when chi is even, otherwise v - ((chi -+ 1)/2)(1,0,1).
std::vector<MukaiVector> contraction_target(const MukaiVector& v);

// Dimension ledger of the shifted stratification: with v' = v + t⃗ and k >= t,
// dim M(v)^k + dim G(t,k) == dim G(t, chi(v') + k - t) + dim M(v')^{k-t}.
bool index_shift_check(const MukaiVector& v, int t, int k, const Genus& g);

// Codimension t(|chi| + t) of the stratum M(v)^t.
Integer stratum_codim(const MukaiVector& v, int t);

}  // namespace mdl::strata
