#include "germlab/qlinalg.hpp"

#include <stdexcept>

namespace germlab {

QMat QMat::identity(size_t n) {
    QMat m(n, n);
    for (size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

QMat QMat::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty())
        return QMat();
    QMat m(rows.size(), rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_)
            throw std::invalid_argument("ragged rows in QMat::from_rows");
        for (size_t c = 0; c < m.cols_; ++c)
            m.at(r, c) = rows[r][c];
    }
    return m;
}

QMat QMat::from_columns(const std::vector<QMat>& cols) {
    if (cols.empty())
        return QMat();
    QMat m(cols[0].rows(), cols.size());
    for (size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].rows() != m.rows_ || cols[c].cols() != 1)
            throw std::invalid_argument("QMat::from_columns expects column vectors");
        for (size_t r = 0; r < m.rows_; ++r)
            m.at(r, c) = cols[c].at(r, 0);
    }
    return m;
}

QMat QMat::operator*(const QMat& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("QMat dimension mismatch in *");
    QMat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0)
                continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Rational& b = o.at(k, j);
                if (b != 0)
                    r.at(i, j) += aik * b;
            }
        }
    return r;
}

QMat QMat::operator+(const QMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("QMat dimension mismatch in +");
    QMat r = *this;
    for (size_t i = 0; i < a_.size(); ++i)
        r.a_[i] += o.a_[i];
    return r;
}

QMat QMat::operator-(const QMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("QMat dimension mismatch in -");
    QMat r = *this;
    for (size_t i = 0; i < a_.size(); ++i)
        r.a_[i] -= o.a_[i];
    return r;
}

QMat QMat::operator*(const Rational& c) const {
    QMat r = *this;
    for (auto& x : r.a_)
        x *= c;
    return r;
}

bool QMat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0)
            return false;
    return true;
}

QMat QMat::transpose() const {
    QMat r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

QMat QMat::column(size_t c) const {
    QMat r(rows_, 1);
    for (size_t i = 0; i < rows_; ++i)
        r.at(i, 0) = at(i, c);
    return r;
}

QMat QMat::columns(const std::vector<size_t>& idx) const {
    QMat r(rows_, idx.size());
    for (size_t j = 0; j < idx.size(); ++j)
        for (size_t i = 0; i < rows_; ++i)
            r.at(i, j) = at(i, idx[j]);
    return r;
}

QMat QMat::hcat(const QMat& o) const {
    if (rows_ == 0 && cols_ == 0)
        return o;
    if (o.rows_ == 0 && o.cols_ == 0)
        return *this;
    if (rows_ != o.rows_)
        throw std::invalid_argument("QMat row mismatch in hcat");
    QMat r(rows_, cols_ + o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j)
            r.at(i, j) = at(i, j);
        for (size_t j = 0; j < o.cols_; ++j)
            r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

QMat QMat::vcat(const QMat& o) const {
    if (rows_ == 0 && cols_ == 0)
        return o;
    if (o.rows_ == 0 && o.cols_ == 0)
        return *this;
    if (cols_ != o.cols_)
        throw std::invalid_argument("QMat column mismatch in vcat");
    QMat r(rows_ + o.rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            r.at(i, j) = at(i, j);
    for (size_t i = 0; i < o.rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

QMat QMat::pow(unsigned n) const {
    if (rows_ != cols_)
        throw std::invalid_argument("QMat::pow of non-square matrix");
    QMat r = identity(rows_);
    QMat base = *this;
    while (n) {
        if (n & 1)
            r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

namespace {

// Row echelon of a copy; returns pivot columns. If `reduce`, back-substitutes
// to reduced row echelon form.
std::vector<size_t> echelon(QMat& m, bool reduce) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t pr = row;
        while (pr < m.rows() && m.at(pr, col) == 0)
            ++pr;
        if (pr == m.rows())
            continue;
        if (pr != row)
            for (size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(pr, j), m.at(row, j));
        Rational inv = 1 / m.at(row, col);
        for (size_t j = col; j < m.cols(); ++j)
            m.at(row, j) *= inv;
        for (size_t i = reduce ? 0 : row + 1; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0)
                continue;
            Rational f = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

size_t QMat::rank() const {
    QMat m = *this;
    return echelon(m, false).size();
}

QMat QMat::kernel() const {
    QMat m = *this;
    std::vector<size_t> pivots = echelon(m, true);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : pivots)
        is_pivot[p] = true;
    size_t nfree = cols_ - pivots.size();
    QMat k(cols_, nfree);
    size_t kc = 0;
    for (size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free])
            continue;
        k.at(free, kc) = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            k.at(pivots[pi], kc) = -m.at(pi, free);
        ++kc;
    }
    return k;
}

QMat QMat::column_space() const {
    QMat m = *this;
    std::vector<size_t> pivots = echelon(m, false);
    return columns(pivots);
}

std::optional<QMat> QMat::inverse() const {
    if (rows_ != cols_)
        return std::nullopt;
    QMat aug = hcat(identity(rows_));
    std::vector<size_t> pivots = echelon(aug, true);
    if (pivots.size() != rows_)
        return std::nullopt;
    for (size_t p : pivots)
        if (p >= rows_)
            return std::nullopt;
    QMat inv(rows_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < rows_; ++j)
            inv.at(i, j) = aug.at(i, rows_ + j);
    return inv;
}

std::optional<QMat> QMat::solve(const QMat& b) const {
    if (b.rows() != rows_)
        throw std::invalid_argument("QMat::solve dimension mismatch");
    QMat aug = hcat(b);
    std::vector<size_t> pivots = echelon(aug, true);
    for (size_t p : pivots)
        if (p >= cols_)
            return std::nullopt; // pivot in the rhs block: inconsistent
    QMat x(cols_, b.cols());
    for (size_t pi = 0; pi < pivots.size(); ++pi)
        for (size_t j = 0; j < b.cols(); ++j)
            x.at(pivots[pi], j) = aug.at(pi, cols_ + j);
    return x;
}

std::optional<QMat> coords_in_basis(const QMat& basis, const QMat& v) {
    if (basis.cols() == 0) {
        if (!v.is_zero())
            return std::nullopt;
        return QMat(0, v.cols());
    }
    return basis.solve(v);
}

size_t span_dim(const QMat& m) { return m.rank(); }

bool in_span(const QMat& basis, const QMat& v) {
    return coords_in_basis(basis, v).has_value();
}

QMat complement_in(const QMat& small, const QMat& big) {
    QMat joint = small.hcat(big);
    QMat m = joint;
    std::vector<size_t> pivots = echelon(m, false);
    std::vector<size_t> fresh;
    for (size_t p : pivots)
        if (p >= small.cols())
            fresh.push_back(p - small.cols());
    return big.columns(fresh);
}

std::vector<Rational> char_poly(const QMat& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("char_poly of non-square matrix");
    size_t n = a.rows();
    // Faddeev-LeVerrier: c_n = 1; M_1 = A; c_{n-k} = -tr(A M_k)/k; M_{k+1} = A M_k + c_{n-k} I.
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    QMat m = QMat::identity(n);
    for (size_t k = 1; k <= n; ++k) {
        m = a * m;
        Rational tr = 0;
        for (size_t i = 0; i < n; ++i)
            tr += m.at(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
        for (size_t i = 0; i < n; ++i)
            m.at(i, i) += c[n - k];
    }
    return c;
}

QMat eval_poly(const std::vector<Rational>& coeffs, const QMat& a) {
    size_t n = a.rows();
    QMat r(n, n);
    for (size_t k = coeffs.size(); k-- > 0;) {
        r = r * a;
        for (size_t i = 0; i < n; ++i)
            r.at(i, i) += coeffs[k];
    }
    return r;
}

} // namespace germlab
