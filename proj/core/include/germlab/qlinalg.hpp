#pragma once

#include "germlab/rational.hpp"

#include <optional>
#include <vector>

namespace germlab {

/// Dense matrix over Q with deterministic exact elimination.
class QMat {
public:
    QMat() = default;
    QMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static QMat identity(size_t n);
    static QMat zero(size_t rows, size_t cols) { return QMat(rows, cols); }
    static QMat from_rows(const std::vector<std::vector<Rational>>& rows);
    static QMat from_columns(const std::vector<QMat>& cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    QMat operator*(const QMat& o) const;
    QMat operator+(const QMat& o) const;
    QMat operator-(const QMat& o) const;
    QMat operator*(const Rational& c) const;
    bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const QMat& o) const { return !(*this == o); }
    bool is_zero() const;

    QMat transpose() const;
    QMat column(size_t c) const;
    QMat columns(const std::vector<size_t>& idx) const;
    /// [this | o] side by side
    QMat hcat(const QMat& o) const;
    /// [this ; o] stacked
    QMat vcat(const QMat& o) const;
    QMat pow(unsigned n) const;

    size_t rank() const;
    /// Basis of the kernel {x : Ax = 0}, as columns.
    QMat kernel() const;
    /// Columns of this matrix that form a basis of the column space.
    QMat column_space() const;
    std::optional<QMat> inverse() const;

    /// One solution x of Ax = b (b as column matrix), or nullopt if inconsistent.
    std::optional<QMat> solve(const QMat& b) const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

/// Coordinates of each column of v in the given basis columns; nullopt if any
/// column lies outside the span.
std::optional<QMat> coords_in_basis(const QMat& basis, const QMat& v);

/// dim(span of columns).
size_t span_dim(const QMat& m);

/// True if every column of v lies in the column span of basis.
bool in_span(const QMat& basis, const QMat& v);

/// Columns of `big` extending span(small) to span([small | big]); returned
/// matrix B satisfies span([small | B]) = span([small | big]) with the columns
/// of B independent modulo span(small).
QMat complement_in(const QMat& small, const QMat& big);

/// Characteristic polynomial coefficients c0..cn of det(sI - A)
/// (Faddeev-LeVerrier), c[n] = 1.
std::vector<Rational> char_poly(const QMat& a);

/// p(A) for p given by coefficients c0..cn.
QMat eval_poly(const std::vector<Rational>& coeffs, const QMat& a);

} // namespace germlab
