#include "mdl/strata.hpp"

#include <sstream>

namespace mdl::strata {

using lattice::dim_moduli;
using lattice::euler;
using lattice::in_H_normalized;
using lattice::normalize_rank;
using lattice::trivial;

namespace {

Integer abs_chi(const MukaiVector& v) { return abs(euler(v)); }

MukaiVector require_in_H(const MukaiVector& v, const Genus& g) {
    const MukaiVector w = normalize_rank(v);
    if (!lattice::in_region(w, g).in_H)
        throw RegionError("vector " + v.str() + " is not in H for g=" + g.value().get_str());
    return w;
}

int scan(const MukaiVector& v, const Genus& g, int sign) {
    int t = 0;
    while (in_H_normalized(v + trivial(sign * (t + 1)), g))
        ++t;
    return t;
}

Integer factorial(const Integer& n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n.get_ui());
    return f;
}

Integer codim_from_chi(const Integer& achi, int t) { return t * (achi + t); }

}  // namespace

Integer stratum_codim(const MukaiVector& v, int t) { return codim_from_chi(abs_chi(v), t); }

Integer StratifiedCollection::n(std::size_t row) const { return abs_chi(rows.at(row).front().base) + 1; }

int mu(const MukaiVector& v, const Genus& g) {
    const MukaiVector w = require_in_H(v, g);
    const Integer chi = euler(w);
    if (chi > 0)
        return scan(w, g, +1);
    if (chi < 0)
        return scan(w, g, -1);
    const int up = scan(w, g, +1);
    const int down = scan(w, g, -1);
    if (up != down)
        throw std::logic_error("mu scans disagree at chi = 0 for " + w.str());
    return up;
}

mpq_class mu_jacobian_closed_form(const Integer& n, const Genus& g) {
    const Integer disc = n * n + 4 * g.value();
    Integer root;
    mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
    if (root * root < disc)
        root += 1;  // ceiling
    mpq_class value(-n + root, 2);
    value.canonicalize();
    return value < 0 ? mpq_class(0) : value;
}

StratifiedCollection build_collection(const MukaiVector& v, const Genus& g, ZeroChiDirection zero_chi) {
    const MukaiVector w = require_in_H(v, g);
    const Integer chi = euler(w);
    StratifiedCollection c{g, {}, 1, mu(w, g)};
    if (chi < 0 || (chi == 0 && zero_chi == ZeroChiDirection::minus))
        c.direction = -1;

    c.rows.resize(static_cast<std::size_t>(c.mu) + 1);
    for (int i = 0; i <= c.mu; ++i) {
        const MukaiVector base = w + trivial(c.direction * i);
        const Integer row_dim = dim_moduli(base, g);
        const Integer achi = abs_chi(base);
        auto& row = c.rows[static_cast<std::size_t>(i)];
        for (int t = 0; t <= c.mu - i; ++t) {
            StratumDescriptor s;
            s.base = base;
            s.t = t;
            s.codim = codim_from_chi(achi, t);
            s.dim = row_dim - s.codim;
            if (t > 0)
                s.fiber = Grassmannian{t, achi + 2 * t};
            row.push_back(std::move(s));
        }
    }
    return c;
}

StratifiedCollection dual_collection(const StratifiedCollection& c, Reflection reflection) {
    const MukaiVector& v = c.base();
    const MukaiVector w = reflection == Reflection::sigma ? lattice::sigma(v) : lattice::tau(v);
    StratifiedCollection dual = build_collection(w, c.g);
    if (dual.mu != c.mu || dual.n(0) != c.n(0))
        throw std::logic_error("dual collection of " + v.str() + " changes n or mu");
    return dual;
}

std::vector<Violation> verify_conditions(const StratifiedCollection& c) {
    std::vector<Violation> out;
    auto report = [&](const std::string& id, const std::string& detail) { out.push_back({id, detail}); };
    const auto mu_rows = c.rows.size();

    for (std::size_t i = 0; i < mu_rows; ++i) {
        const auto& row = c.rows[i];
        if (row.size() != mu_rows - i)
            report("row_length", "row " + std::to_string(i) + " has " + std::to_string(row.size()) + " entries");
        if (row.empty())
            continue;
        if (row.front().t != 0 || row.front().fiber)
            report("diagonal", "row " + std::to_string(i) + " diagonal entry is not t=0");
    }
    for (std::size_t i = 0; i < mu_rows; ++i) {
        if (c.rows[i].empty())
            continue;
        const Integer n_i = c.n(i);
        // n(X(r)) = n + 2r
        if (n_i != c.n(0) + 2 * static_cast<long>(i))
            report("n_shift", "row " + std::to_string(i) + ": n=" + n_i.get_str());
        // dim M(r) = dim M - 2r[n(M) + r - 1], for every pair of rows
        for (std::size_t j = i + 1; j < mu_rows; ++j) {
            if (c.rows[j].empty())
                continue;
            const long r = static_cast<long>(j - i);
            const Integer expected = c.rows[i].front().dim - 2 * r * (n_i + r - 1);
            if (c.rows[j].front().dim != expected)
                report("dimension_drop", "rows " + std::to_string(i) + "->" + std::to_string(j) + ": dim " +
                                             c.rows[j].front().dim.get_str() + " != " + expected.get_str());
        }
    }
    for (std::size_t i = 0; i < mu_rows; ++i) {
        const auto& row = c.rows[i];
        const Integer n_i = c.n(i);
        for (std::size_t t = 1; t < row.size(); ++t) {
            const auto& s = row[t];
            const std::string where = "entry (" + std::to_string(i) + "," + std::to_string(t) + ")";
            const std::size_t target = i + t;
            if (!s.fiber) {
                report("fiber_dimension", where + " has no fiber");
                continue;
            }
            const Grassmannian expected_fiber{static_cast<long>(t), n_i + 2 * static_cast<long>(t) - 1};
            if (*s.fiber != expected_fiber || s.fiber->dim() != s.codim)
                report("fiber_dimension", where + ": " + s.fiber->str() + " dim " + s.fiber->dim().get_str() +
                                              " vs codim " + s.codim.get_str());
            if (target < mu_rows && !c.rows[target].empty() &&
                s.dim != c.rows[target].front().dim + s.fiber->dim())
                report("stratum_dimension", where + ": dim " + s.dim.get_str() + " != base + fiber");
        }
        // codim(M^k) = codim(M^t) + codim(M(t)^{k-t}), t <= k
        for (std::size_t k = 0; k < row.size(); ++k)
            for (std::size_t t = 0; t <= k; ++t) {
                const std::size_t shifted = i + t;
                if (shifted >= mu_rows || k - t >= c.rows[shifted].size())
                    continue;
                const Integer rhs = row[t].codim + c.rows[shifted][k - t].codim;
                if (row[k].codim != rhs)
                    report("codimension_sum", "row " + std::to_string(i) + " t=" + std::to_string(t) + " k=" +
                                                  std::to_string(k) + ": " + row[k].codim.get_str() +
                                                  " != " + rhs.get_str());
            }
    }
    return out;
}

DivisorExpr& DivisorExpr::add(int t, const Integer& coeff) {
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        if (coeff != 0)
            terms_.emplace(t, coeff);
        return *this;
    }
    it->second += coeff;
    if (it->second == 0)
        terms_.erase(it);
    return *this;
}

const Integer& DivisorExpr::coefficient(int t) const {
    static const Integer zero = 0;
    auto it = terms_.find(t);
    return it == terms_.end() ? zero : it->second;
}

std::string DivisorExpr::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << '-';
        os << Integer(abs(c)).get_str() << "*E^" << t;
        first = false;
    }
    return os.str();
}

CanonicalLedger canonical_class_ledger(const StratifiedCollection& c, std::size_t row) {
    if (row >= c.rows.size())
        throw std::out_of_range("canonical_class_ledger: row " + std::to_string(row) + " out of range");
    const auto& x_row = c.rows[row];
    const StratifiedCollection dual = dual_collection(c, Reflection::sigma);
    const auto& y_row = dual.rows[row];

    CanonicalLedger ledger;
    // Blowing up X(r) (trivial canonical class) along the strata, deepest
    // first; each smooth center of codimension c contributes (c - 1)E.
    DivisorExpr omega;
    for (std::size_t t = x_row.size(); t-- > 1;)
        omega.add(static_cast<int>(t), x_row[t].codim - 1);
    ledger.per_step.push_back(omega);
    // Contract onto the dual strata in order k = 1..mu(X(r)); the divisor
    // E^k goes away with discrepancy codim(Y(r)^k) - 1.
    for (std::size_t k = 1; k < y_row.size(); ++k) {
        const Integer discrepancy = y_row[k].codim - 1;
        if (omega.coefficient(static_cast<int>(k)) != discrepancy)
            ledger.discrepancies_match = false;
        omega.add(static_cast<int>(k), -discrepancy);
        ledger.per_step.push_back(omega);
    }
    ledger.final_trivial = omega.is_zero();
    return ledger;
}

std::optional<CastelnuovoCount> castelnuovo(const Genus& g) {
    const Integer disc = 4 * g.value() + 1;
    if (mpz_perfect_square_p(disc.get_mpz_t()) == 0)
        return std::nullopt;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
    const Integer m = (root - 1) / 2;
    if (m * (m + 1) != g.value())
        throw std::logic_error("Lagrangian G(mu,2mu+1) has dimension != g");

    mpq_class count = factorial(g.value());
    for (Integer i = 0; i <= m; ++i)
        count *= mpq_class(factorial(i), factorial(m + i));
    count.canonicalize();
    if (count.get_den() != 1)
        throw std::logic_error("Castelnuovo count is not an integer for g=" + g.value().get_str());
    return CastelnuovoCount{m, count.get_num()};
}

std::vector<MukaiVector> contraction_target(const MukaiVector& v) {
    const Integer chi = euler(v);
    if (mpz_even_p(chi.get_mpz_t()) != 0)
        return {v - trivial(chi / 2)};
    Integer lo = chi - 1;
    Integer hi = chi + 1;
    mpz_divexact_ui(lo.get_mpz_t(), lo.get_mpz_t(), 2);
    mpz_divexact_ui(hi.get_mpz_t(), hi.get_mpz_t(), 2);
    return {v - trivial(lo), v - trivial(hi)};
}

bool index_shift_check(const MukaiVector& v, int t, int k, const Genus& g) {
    if (t < 1)
        throw std::invalid_argument("index_shift_check: t must be >= 1");
    if (k < t)
        throw std::invalid_argument("index_shift_check: k must be >= t");
    const MukaiVector w = require_in_H(v, g);
    const int dir = euler(w) >= 0 ? 1 : -1;
    const MukaiVector shifted = w + trivial(dir * t);
    require_in_H(shifted, g);

    const Integer lhs = dim_moduli(w, g) - stratum_codim(w, k) + Grassmannian{t, k}.dim();
    const Grassmannian fiber{t, abs_chi(shifted) + k - t};
    const Integer rhs = fiber.dim() + dim_moduli(shifted, g) - stratum_codim(shifted, k - t);
    return lhs == rhs;
}

}  // namespace mdl::strata
