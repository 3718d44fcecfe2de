#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace mdl::linalg {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense matrix of exact rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    // Rows are the given vectors.
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::vector<Rational> column(std::size_t j) const;

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix operator+(const RationalMatrix& rhs) const;
    RationalMatrix operator-(const RationalMatrix& rhs) const;
    RationalMatrix operator*(const Rational& scalar) const;
    std::vector<Rational> apply(std::span<const Rational> x) const;

    bool is_zero() const;
    bool operator==(const RationalMatrix& rhs) const;

    // Horizontal / vertical concatenation.
    RationalMatrix hcat(const RationalMatrix& rhs) const;
    RationalMatrix vcat(const RationalMatrix& rhs) const;
    RationalMatrix select_rows(std::span<const std::size_t> idx) const;
    RationalMatrix select_cols(std::span<const std::size_t> idx) const;

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

struct EchelonForm {
    RationalMatrix reduced;           // reduced row-echelon form, zero rows trimmed
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    std::vector<std::size_t> free;    // non-pivot columns, increasing
};

// Gauss-Jordan elimination with leftmost-pivot selection.
EchelonForm rref(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);
// Columns form the canonical null-space basis: one vector per free column f,
// with 1 at f and minus the reduced entries at the pivot positions.
RationalMatrix nullspace(const RationalMatrix& m);
std::size_t nullity(const RationalMatrix& m);
Rational determinant(RationalMatrix m);
// Throws std::domain_error on a singular input.
RationalMatrix inverse(const RationalMatrix& m);

// A linear subspace of Q^n stored by its canonical reduced row-echelon basis.
// The quotient Q^n / W is coordinatized by the non-pivot coordinates.
class Subspace {
public:
    Subspace() = default;
    // Span of the rows of `spanning`; ambient dimension is spanning.cols().
    static Subspace row_span(const RationalMatrix& spanning);
    static Subspace column_span(const RationalMatrix& spanning);
    static Subspace coordinate(std::size_t ambient, std::span<const std::size_t> axes);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    std::size_t codim() const { return ambient_ - dim(); }

    // dim() x ambient() matrix in RREF.
    const RationalMatrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    const std::vector<std::size_t>& complement_axes() const { return free_; }

    // ambient x dim matrix sending coordinates to vectors of W.
    RationalMatrix inclusion() const { return basis_.transpose(); }
    // codim x ambient matrix of Q^n -> Q^n / W.
    RationalMatrix quotient_map() const;
    // ambient x codim matrix lifting quotient coordinates to the standard complement.
    RationalMatrix section() const;
    // dim x ambient matrix returning W-coordinates of x minus its complement part.
    RationalMatrix coordinate_map() const;

    bool contains(std::span<const Rational> x) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& rhs) const = default;

private:
    std::size_t ambient_ = 0;
    RationalMatrix basis_;
    std::vector<std::size_t> pivots_;
    std::vector<std::size_t> free_;
};

// Image of m (column space) and kernel, as canonical subspaces.
Subspace image(const RationalMatrix& m);
Subspace kernel(const RationalMatrix& m);

}  // namespace mdl::linalg
