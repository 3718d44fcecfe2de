#include "mdl/nilorbit.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mdl::nilorbit {

using linalg::rank;

CotangentPoint::CotangentPoint(Subspace w, RationalMatrix psi) : w_(std::move(w)), psi_(std::move(psi)) {
    if (t() < 1 || 2 * t() > h())
        throw std::invalid_argument("CotangentPoint: need 1 <= t <= h/2, got t=" + std::to_string(t()) +
                                    " h=" + std::to_string(h()));
    if (psi_.rows() != t() || psi_.cols() != h() - t())
        throw std::invalid_argument("CotangentPoint: psi must be t x (h - t)");
}

RationalMatrix springer(const CotangentPoint& p) {
    return p.w().inclusion() * p.psi() * p.w().quotient_map();
}

std::size_t corank(const CotangentPoint& p) { return p.t() - rank(p.psi()); }

bool is_square_zero(const RationalMatrix& n) {
    return n.rows() == n.cols() && (n * n).is_zero();
}

CotangentPoint dual_point(const RationalMatrix& n, std::size_t t) {
    if (!is_square_zero(n))
        throw NotSquareZero("dual_point: N is not square-zero");
    const std::size_t r = rank(n);
    if (r < t)
        throw OffDenseOrbit("dual_point: off dense orbit (rank " + std::to_string(r) + " < t=" +
                            std::to_string(t) + ")");
    if (r > t)
        throw std::invalid_argument("dual_point: rank exceeds t");
    const RationalMatrix nt = n.transpose();
    Subspace w = linalg::image(nt);
    // psi'(q) = W'-coordinates of N^T applied to the lift of q.
    RationalMatrix psi = w.coordinate_map() * nt * w.section();
    return CotangentPoint(std::move(w), std::move(psi));
}

FiberDescriptor fiber_space(const RationalMatrix& n, std::size_t t) {
    if (!is_square_zero(n))
        throw NotSquareZero("fiber_space: N is not square-zero");
    const std::size_t h = n.rows();
    const std::size_t k = rank(n);
    if (k > t || 2 * t > h)
        throw std::invalid_argument("fiber_space: need rank(N) <= t <= h/2");
    FiberDescriptor f{k, t - k, h - 2 * k};
    // Grassmannian fibration G(r, n + 2r - 1), r = t - k, n = h - 2t + 1.
    const long nn = static_cast<long>(h) - 2 * static_cast<long>(t) + 1;
    if (static_cast<long>(f.ambient) != nn + 2 * static_cast<long>(f.sub) - 1)
        throw std::logic_error("fiber_space: descriptor disagrees with G(r, n+2r-1)");
    return f;
}

RationalMatrix deform(const CotangentPoint& p, const Rational& gamma) {
    const RationalMatrix projection = p.w().inclusion() * p.w().coordinate_map();
    return projection * gamma + springer(p);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i)
        os << (i ? "," : "") << parts_[i];
    os << ']';
    return os.str();
}

Partition dual_partition(const Partition& eta) {
    std::vector<int> cols;
    const auto& p = eta.parts();
    if (p.empty())
        return Partition({});
    for (int c = 1; c <= p.front(); ++c)
        cols.push_back(static_cast<int>(std::count_if(p.begin(), p.end(), [c](int x) { return x >= c; })));
    return Partition(std::move(cols));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

// Dimension of {X : XN = NX}, the nullity of X -> XN - NX on h x h matrices.
std::size_t centralizer_dim(const RationalMatrix& n) {
    const std::size_t h = n.rows();
    RationalMatrix op(h * h, h * h);
    // (XN - NX)_{ij} = sum_k X_{ik} N_{kj} - N_{ik} X_{kj}; X_{ab} sits at column a*h + b.
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j)
            for (std::size_t k = 0; k < h; ++k) {
                op(i * h + j, i * h + k) += n(k, j);
                op(i * h + j, k * h + j) -= n(i, k);
            }
    return linalg::nullity(op);
}

}  // namespace

std::vector<Partition> partitions(int h) {
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(h, h, cur, out);
    return out;
}

std::vector<int> flag_dims(const Partition& eta, const std::vector<int>& theta) {
    const Partition hat = dual_partition(eta);
    const std::size_t m = hat.length();
    if (theta.size() != m)
        throw std::invalid_argument("flag_dims: theta must permute the parts of the dual partition");
    std::vector<int> seen(m, 0);
    for (int x : theta) {
        if (x < 0 || static_cast<std::size_t>(x) >= m || seen[static_cast<std::size_t>(x)]++)
            throw std::invalid_argument("flag_dims: theta is not a permutation");
    }
    std::vector<int> dims;
    int sum = 0;
    for (std::size_t j = 0; j + 1 < m; ++j) {
        sum += hat.parts()[static_cast<std::size_t>(theta[j])];
        dims.push_back(sum);
    }
    return dims;
}

RationalMatrix jordan_nilpotent(const Partition& eta) {
    const auto h = static_cast<std::size_t>(eta.size());
    RationalMatrix n(h, h);
    std::size_t offset = 0;
    for (int p : eta.parts()) {
        for (int l = 1; l < p; ++l)
            n(offset + static_cast<std::size_t>(l) - 1, offset + static_cast<std::size_t>(l)) = 1;
        offset += static_cast<std::size_t>(p);
    }
    return n;
}

namespace {

// Flag from the Jordan basis: block b has levels 1..p_b; the steps available
// to it are S_b = {j : theta(j) < p_b}, and its l-th level goes to the l-th
// smallest step. Returns the step of every basis vector.
std::vector<std::size_t> jordan_flag_steps(const Partition& eta, const std::vector<int>& theta) {
    std::vector<std::size_t> step(static_cast<std::size_t>(eta.size()));
    std::size_t offset = 0;
    for (int p : eta.parts()) {
        std::vector<std::size_t> allowed;
        for (std::size_t j = 0; j < theta.size(); ++j)
            if (theta[j] < p)
                allowed.push_back(j);
        for (std::size_t l = 0; l < static_cast<std::size_t>(p); ++l)
            step[offset + l] = allowed.at(l);
        offset += static_cast<std::size_t>(p);
    }
    return step;
}

std::string check_flag(const Partition& eta, const std::vector<int>& theta, const RationalMatrix& n) {
    const std::size_t h = n.rows();
    const std::size_t m = theta.size();
    const auto step = jordan_flag_steps(eta, theta);
    const auto dims = flag_dims(eta, theta);

    std::vector<Subspace> flag;
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<std::size_t> axes;
        for (std::size_t x = 0; x < h; ++x)
            if (step[x] <= j)
                axes.push_back(x);
        flag.push_back(Subspace::coordinate(h, axes));
    }
    for (std::size_t j = 0; j + 1 < m; ++j)
        if (flag[j].dim() != static_cast<std::size_t>(dims[j]))
            return "F_" + std::to_string(j + 1) + " has dim " + std::to_string(flag[j].dim()) + ", expected " +
                   std::to_string(dims[j]);
    if (flag.back().dim() != h)
        return "last flag member is not H";
    for (std::size_t j = 0; j < m; ++j) {
        const Subspace image = linalg::image(n * flag[j].inclusion());
        if (j == 0 ? image.dim() != 0 : !flag[j - 1].contains(image))
            return "N(F_" + std::to_string(j + 1) + ") not inside the previous member";
    }
    return {};
}

}  // namespace

FlagReport verify_flag_resolution_dims(int h, int max_h) {
    if (h < 1 || h > max_h)
        throw std::invalid_argument("verify_flag_resolution_dims: h must be in [1, " + std::to_string(max_h) + "]");
    FlagReport report;
    report.h = h;
    const long h2 = static_cast<long>(h) * h;
    for (const Partition& eta : partitions(h)) {
        ++report.partitions;
        const Partition hat = dual_partition(eta);
        const RationalMatrix n = jordan_nilpotent(eta);
        const long orbit_dim = h2 - static_cast<long>(centralizer_dim(n));
        long hat_squares = 0;
        for (int c : hat.parts())
            hat_squares += static_cast<long>(c) * c;
        if (orbit_dim != h2 - hat_squares)
            report.failures.push_back({eta, {}, "orbit dimension " + std::to_string(orbit_dim) +
                                                    " != h^2 - sum(hat^2)"});
        // square-zero specialisation [2^t, 1^{h-2t}]
        if (eta.parts().front() <= 2) {
            const long t = std::count(eta.parts().begin(), eta.parts().end(), 2);
            if (orbit_dim != 2 * t * (h - t))
                report.failures.push_back({eta, {}, "square-zero orbit dimension != 2t(h-t)"});
        }

        std::vector<int> theta(hat.length());
        std::iota(theta.begin(), theta.end(), 0);
        do {
            ++report.flags_checked;
            long block_squares = 0;
            for (int idx : theta) {
                const long c = hat.parts()[static_cast<std::size_t>(idx)];
                block_squares += c * c;
            }
            // dim T*Flag = 2 dim Flag = h^2 - sum of squared block sizes
            if (h2 - block_squares != orbit_dim)
                report.failures.push_back({eta, theta, "dim T*Flag != orbit dimension"});
            if (auto msg = check_flag(eta, theta, n); !msg.empty())
                report.failures.push_back({eta, theta, msg});
        } while (std::next_permutation(theta.begin(), theta.end()));
    }
    return report;
}

std::size_t alpha_corank(const Subspace& w, const Subspace& wt) {
    if (w.ambient() != wt.ambient() || w.dim() + wt.dim() != w.ambient())
        throw std::invalid_argument("alpha_corank: need dim W + dim Wt = h");
    return w.dim() - rank(wt.quotient_map() * w.inclusion());
}

namespace {

RationalMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = dist(rng);
    return m;
}

Subspace random_subspace(std::size_t h, std::size_t t, std::mt19937_64& rng) {
    for (;;) {
        Subspace w = Subspace::row_span(random_matrix(t, h, rng, 3));
        if (w.dim() == t)
            return w;
    }
}

}  // namespace

CotangentPoint sample_point(std::size_t h, std::size_t t, std::mt19937_64& rng, bool dense) {
    Subspace w = random_subspace(h, t, rng);
    for (;;) {
        RationalMatrix psi = random_matrix(t, h - t, rng, 3);
        if (!dense || rank(psi) == t)
            return CotangentPoint(std::move(w), std::move(psi));
    }
}

CotangentPoint sample_point_with_rank(std::size_t h, std::size_t t, std::size_t k, std::mt19937_64& rng) {
    if (k > t)
        throw std::invalid_argument("sample_point_with_rank: k > t");
    Subspace w = random_subspace(h, t, rng);
    for (;;) {
        RationalMatrix psi = k == 0 ? RationalMatrix(t, h - t)
                                    : random_matrix(t, k, rng, 3) * random_matrix(k, h - t, rng, 3);
        if (rank(psi) == k)
            return CotangentPoint(std::move(w), std::move(psi));
    }
}

}  // namespace mdl::nilorbit
