#include "mdl/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mdl::linalg {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("RationalMatrix: ragged initializer");
        for (long v : r)
            data_.emplace_back(v);
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows,
                                         std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("RationalMatrix::from_rows: wrong row length");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Rational> RationalMatrix::column(std::size_t j) const {
    std::vector<Rational> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("RationalMatrix: shape mismatch in product");
    // p(i, j) = (sum_k a'(i, k) b'(k, j)) / (da_i db_j) with integer a', b'.
    std::vector<Integer> da(rows_, 1), db(rhs.cols_, 1);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            mpz_lcm(da[i].get_mpz_t(), da[i].get_mpz_t(), (*this)(i, k).get_den_mpz_t());
    for (std::size_t k = 0; k < rhs.rows_; ++k)
        for (std::size_t j = 0; j < rhs.cols_; ++j)
            mpz_lcm(db[j].get_mpz_t(), db[j].get_mpz_t(), rhs(k, j).get_den_mpz_t());
    // integer views: the numerator itself when the row/column denominator is 1
    std::vector<Integer> store_a, store_b;
    store_a.reserve(rows_ * cols_);
    store_b.reserve(rhs.rows_ * rhs.cols_);
    auto view = [](const Rational& x, const Integer& d, std::vector<Integer>& store) -> const Integer* {
        if (sgn(x) == 0)
            return nullptr;
        if (d == 1)
            return &x.get_num();
        Integer& out = store.emplace_back();
        mpz_divexact(out.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
        out *= x.get_num();
        return &out;
    };
    std::vector<const Integer*> a(rows_ * cols_), b(rhs.rows_ * rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            a[i * cols_ + k] = view((*this)(i, k), da[i], store_a);
    for (std::size_t k = 0; k < rhs.rows_; ++k)
        for (std::size_t j = 0; j < rhs.cols_; ++j)
            b[k * rhs.cols_ + j] = view(rhs(k, j), db[j], store_b);

    RationalMatrix p(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer* x = a[i * cols_ + k];
            if (x == nullptr)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                if (const Integer* y = b[k * rhs.cols_ + j])
                    mpz_addmul(p(i, j).get_num_mpz_t(), x->get_mpz_t(), y->get_mpz_t());
        }
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
            Rational& out = p(i, j);
            if (sgn(out) == 0 || (da[i] == 1 && db[j] == 1))
                continue;
            mpz_mul(out.get_den_mpz_t(), da[i].get_mpz_t(), db[j].get_mpz_t());
            out.canonicalize();
        }
    }
    return p;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("RationalMatrix: shape mismatch in sum");
    RationalMatrix s = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        s.data_[i] += rhs.data_[i];
    return s;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("RationalMatrix: shape mismatch in difference");
    RationalMatrix s = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        s.data_[i] -= rhs.data_[i];
    return s;
}

RationalMatrix RationalMatrix::operator*(const Rational& scalar) const {
    RationalMatrix s = *this;
    for (auto& x : s.data_)
        x *= scalar;
    return s;
}

std::vector<Rational> RationalMatrix::apply(std::span<const Rational> x) const {
    if (x.size() != cols_)
        throw std::invalid_argument("RationalMatrix::apply: length mismatch");
    std::vector<Rational> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            y[i] += (*this)(i, j) * x[j];
    return y;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool RationalMatrix::operator==(const RationalMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

RationalMatrix RationalMatrix::hcat(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_)
        throw std::invalid_argument("RationalMatrix::hcat: row mismatch");
    RationalMatrix m(rows_, cols_ + rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            m(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < rhs.cols_; ++j)
            m(i, cols_ + j) = rhs(i, j);
    }
    return m;
}

RationalMatrix RationalMatrix::vcat(const RationalMatrix& rhs) const {
    if (cols_ != rhs.cols_)
        throw std::invalid_argument("RationalMatrix::vcat: column mismatch");
    RationalMatrix m(rows_ + rhs.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(rhs.data_.begin(), rhs.data_.end(), m.data_.begin() + static_cast<long>(data_.size()));
    return m;
}

RationalMatrix RationalMatrix::select_rows(std::span<const std::size_t> idx) const {
    RationalMatrix m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(i, j) = (*this)(idx[i], j);
    return m;
}

RationalMatrix RationalMatrix::select_cols(std::span<const std::size_t> idx) const {
    RationalMatrix m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
            m(i, j) = (*this)(i, idx[j]);
    return m;
}

std::string RationalMatrix::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? "," : "") << m(i, j).get_str();
        os << ']';
    }
    return os << ']';
}

EchelonForm rref(const RationalMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    // Rows scaled to primitive integer vectors; row operations stay fraction-free.
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Integer den = 1;
        for (std::size_t j = 0; j < cols; ++j)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_divexact(a[i][j].get_mpz_t(), den.get_mpz_t(), m(i, j).get_den_mpz_t());
            a[i][j] *= m(i, j).get_num();
        }
    }
    auto make_primitive = [&](std::vector<Integer>& row, std::size_t from) {
        Integer content;
        for (std::size_t j = from; j < cols; ++j)
            if (sgn(row[j]) != 0) {
                mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), row[j].get_mpz_t());
                if (content == 1)
                    return;
            }
        if (content > 1)
            for (std::size_t j = from; j < cols; ++j)
                mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), content.get_mpz_t());
    };

    EchelonForm out;
    std::size_t r = 0;
    Integer scratch;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(a[p][c]) == 0)
            ++p;
        if (p == rows) {
            out.free.push_back(c);
            continue;
        }
        std::swap(a[p], a[r]);
        make_primitive(a[r], c);
        const Integer& pivot = a[r][c];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a[i][c]) == 0)
                continue;
            const Integer q = a[i][c];
            // row_i = pivot * row_i - q * row_r
            // row r vanishes left of c
            for (std::size_t j = 0; j < cols; ++j)
                if (sgn(a[i][j]) != 0)
                    a[i][j] *= pivot;
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(a[r][j]) != 0)
                    mpz_submul(a[i][j].get_mpz_t(), q.get_mpz_t(), a[r][j].get_mpz_t());
            make_primitive(a[i], 0);
        }
        out.pivots.push_back(c);
        ++r;
    }
    for (std::size_t c = out.pivots.empty() ? 0 : out.pivots.back() + 1; c < cols; ++c)
        if (std::find(out.free.begin(), out.free.end(), c) == out.free.end())
            out.free.push_back(c);
    std::sort(out.free.begin(), out.free.end());

    out.reduced = RationalMatrix(r, cols);
    for (std::size_t i = 0; i < r; ++i) {
        const std::size_t pc = out.pivots[i];
        for (std::size_t j = 0; j < cols; ++j) {
            if (sgn(a[i][j]) == 0)
                continue;
            Rational& x = out.reduced(i, j);
            x.get_num() = a[i][j];
            x.get_den() = a[i][pc];
            x.canonicalize();
        }
    }
    return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

RationalMatrix nullspace(const RationalMatrix& m) {
    const EchelonForm e = rref(m);
    RationalMatrix basis(m.cols(), e.free.size());
    for (std::size_t k = 0; k < e.free.size(); ++k) {
        const std::size_t f = e.free[k];
        basis(f, k) = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            basis(e.pivots[i], k) = -e.reduced(i, f);
    }
    return basis;
}

std::size_t nullity(const RationalMatrix& m) { return m.cols() - rank(m); }

Rational determinant(RationalMatrix a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a(p, c)) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j)
                swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(a(i, c)) == 0)
                continue;
            const Rational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j)
                a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    const EchelonForm e = rref(m.hcat(RationalMatrix::identity(n)));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
        throw std::domain_error("inverse: singular matrix");
    std::vector<std::size_t> right(n);
    for (std::size_t j = 0; j < n; ++j)
        right[j] = n + j;
    return e.reduced.select_cols(right);
}

Subspace Subspace::row_span(const RationalMatrix& spanning) {
    EchelonForm e = rref(spanning);
    Subspace s;
    s.ambient_ = spanning.cols();
    s.basis_ = std::move(e.reduced);
    s.pivots_ = std::move(e.pivots);
    s.free_ = std::move(e.free);
    return s;
}

Subspace Subspace::column_span(const RationalMatrix& spanning) {
    return row_span(spanning.transpose());
}

Subspace Subspace::coordinate(std::size_t ambient, std::span<const std::size_t> axes) {
    RationalMatrix m(axes.size(), ambient);
    for (std::size_t i = 0; i < axes.size(); ++i)
        m(i, axes[i]) = 1;
    return row_span(m);
}

RationalMatrix Subspace::quotient_map() const {
    // q(x)_j = x_j - sum_i x_{p_i} W(i, j) for non-pivot j.
    RationalMatrix q(free_.size(), ambient_);
    for (std::size_t k = 0; k < free_.size(); ++k) {
        const std::size_t j = free_[k];
        q(k, j) = 1;
        for (std::size_t i = 0; i < pivots_.size(); ++i)
            q(k, pivots_[i]) -= basis_(i, j);
    }
    return q;
}

RationalMatrix Subspace::section() const {
    RationalMatrix s(ambient_, free_.size());
    for (std::size_t k = 0; k < free_.size(); ++k)
        s(free_[k], k) = 1;
    return s;
}

RationalMatrix Subspace::coordinate_map() const {
    RationalMatrix c(pivots_.size(), ambient_);
    for (std::size_t i = 0; i < pivots_.size(); ++i)
        c(i, pivots_[i]) = 1;
    return c;
}

bool Subspace::contains(std::span<const Rational> x) const {
    if (x.size() != ambient_)
        return false;
    const auto q = quotient_map().apply(x);
    return std::all_of(q.begin(), q.end(), [](const Rational& v) { return sgn(v) == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        return false;
    return (quotient_map() * other.inclusion()).is_zero();
}

Subspace image(const RationalMatrix& m) { return Subspace::column_span(m); }

Subspace kernel(const RationalMatrix& m) { return Subspace::column_span(nullspace(m)); }

}  // namespace mdl::linalg
