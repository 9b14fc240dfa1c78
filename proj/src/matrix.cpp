#include "lefzeta/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace lefzeta {

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    QMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < c; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch in addition");
    QMatrix m = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        m.data_[i] += o.data_[i];
    return m;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch in subtraction");
    QMatrix m = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        m.data_[i] -= o.data_[i];
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix shape mismatch in product");
    QMatrix m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& aik = (*this)(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < o.cols_; ++j)
                m(i, j) += aik * o(k, j);
        }
    return m;
}

QMatrix QMatrix::operator*(const Rational& c) const {
    QMatrix m = *this;
    for (auto& x : m.data_)
        x *= c;
    return m;
}

QMatrix QMatrix::operator-() const {
    QMatrix m = *this;
    for (auto& x : m.data_)
        x = -x;
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            m(j, i) = (*this)(i, j);
    return m;
}

Rational QMatrix::trace() const {
    if (rows_ != cols_)
        throw std::invalid_argument("trace of a non-square matrix");
    Rational t(0);
    for (int i = 0; i < rows_; ++i)
        t += (*this)(i, i);
    return t;
}

QMatrix QMatrix::pow(long k) const {
    if (rows_ != cols_)
        throw std::invalid_argument("power of a non-square matrix");
    if (k < 0)
        throw std::invalid_argument("negative matrix power");
    QMatrix result = identity(rows_);
    QMatrix base = *this;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

Rational QMatrix::det() const {
    if (rows_ != cols_)
        throw std::invalid_argument("determinant of a non-square matrix");
    QMatrix m = *this;
    Rational det(1);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int i = col; i < rows_; ++i)
            if (m(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            return Rational(0);
        if (pivot != col) {
            for (int j = 0; j < cols_; ++j)
                std::swap(m(pivot, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (int i = col + 1; i < rows_; ++i) {
            if (m(i, col) == 0)
                continue;
            const Rational f = m(i, col) / m(col, col);
            for (int j = col; j < cols_; ++j)
                m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

std::optional<QMatrix> QMatrix::inverse() const {
    if (rows_ != cols_)
        throw std::invalid_argument("inverse of a non-square matrix");
    QMatrix m = *this;
    QMatrix inv = identity(rows_);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int i = col; i < rows_; ++i)
            if (m(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            return std::nullopt;
        if (pivot != col)
            for (int j = 0; j < cols_; ++j) {
                std::swap(m(pivot, j), m(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        const Rational p = m(col, col);
        for (int j = 0; j < cols_; ++j) {
            m(col, j) /= p;
            inv(col, j) /= p;
        }
        for (int i = 0; i < rows_; ++i) {
            if (i == col || m(i, col) == 0)
                continue;
            const Rational f = m(i, col);
            for (int j = 0; j < cols_; ++j) {
                m(i, j) -= f * m(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

Polynomial QMatrix::char_poly() const {
    if (rows_ != cols_)
        throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const int n = rows_;
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    QMatrix m = QMatrix(n, n); // M_0 = 0
    for (int k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        m = (*this) * m;
        for (int i = 0; i < n; ++i)
            m(i, i) += c[n - k + 1];
        c[n - k] = -((*this) * m).trace() / Rational(k);
    }
    return Polynomial::from_coeffs(std::move(c));
}

Polynomial QMatrix::det_identity_minus_t() const {
    return char_poly().reversed(rows_);
}

Echelon QMatrix::rref() const {
    QMatrix m = *this;
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < cols_ && lead < rows_; ++col) {
        int pivot = -1;
        for (int i = lead; i < rows_; ++i)
            if (m(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != lead)
            for (int j = 0; j < cols_; ++j)
                std::swap(m(pivot, j), m(lead, j));
        const Rational p = m(lead, col);
        for (int j = 0; j < cols_; ++j)
            m(lead, j) /= p;
        for (int i = 0; i < rows_; ++i) {
            if (i == lead || m(i, col) == 0)
                continue;
            const Rational f = m(i, col);
            for (int j = 0; j < cols_; ++j)
                m(i, j) -= f * m(lead, j);
        }
        pivots.push_back(col);
        ++lead;
    }
    Echelon e;
    e.rank = static_cast<int>(pivots.size());
    e.pivot_cols = std::move(pivots);
    e.reduced = QMatrix(e.rank, cols_);
    for (int i = 0; i < e.rank; ++i)
        for (int j = 0; j < cols_; ++j)
            e.reduced(i, j) = m(i, j);
    return e;
}

std::vector<Rational> QMatrix::row(int i) const {
    std::vector<Rational> r(cols_);
    for (int j = 0; j < cols_; ++j)
        r[j] = (*this)(i, j);
    return r;
}

std::vector<Rational> QMatrix::col(int j) const {
    std::vector<Rational> c(rows_);
    for (int i = 0; i < rows_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

QMatrix direct_sum(const std::vector<QMatrix>& blocks) {
    int rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    QMatrix m(rows, cols);
    int ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j)
                m(ro + i, co + j) = b(i, j);
        ro += b.rows();
        co += b.cols();
    }
    return m;
}

bool in_row_space(const Echelon& span, const std::vector<Rational>& v) {
    if (span.reduced.cols() != static_cast<int>(v.size()))
        throw std::invalid_argument("vector length mismatch in row-space test");
    std::vector<Rational> rem = v;
    for (int i = 0; i < span.rank; ++i) {
        const Rational f = rem[span.pivot_cols[i]];
        if (f == 0)
            continue;
        for (int j = 0; j < span.reduced.cols(); ++j)
            rem[j] -= f * span.reduced(i, j);
    }
    for (const auto& x : rem)
        if (x != 0)
            return false;
    return true;
}

std::optional<std::vector<Rational>> solve_linear(const QMatrix& a, const std::vector<Rational>& b) {
    if (a.rows() != static_cast<int>(b.size()))
        throw std::invalid_argument("right-hand side length mismatch");
    // Eliminate on [A | b].
    QMatrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j)
            aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const auto e = aug.rref();
    std::vector<Rational> x(a.cols(), Rational(0));
    for (int i = 0; i < e.rank; ++i) {
        if (e.pivot_cols[i] == a.cols())
            return std::nullopt; // pivot in the constant column: inconsistent
        x[e.pivot_cols[i]] = e.reduced(i, a.cols());
    }
    return x;
}

} // namespace lefzeta
