#pragma once

#include "lefzeta/polynomial.hpp"
#include "lefzeta/rational.hpp"

#include <optional>
#include <vector>

namespace lefzeta {

struct Echelon;

// Dense matrix over the rationals. Everything here is exact; there is no
// floating point anywhere in the pipeline.
class QMatrix {
public:
    QMatrix() = default; // 0 x 0
    QMatrix(int rows, int cols);
    static QMatrix identity(int n);
    static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return data_[index(i, j)]; }
    const Rational& operator()(int i, int j) const { return data_[index(i, j)]; }

    bool operator==(const QMatrix& o) const = default;

    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator*(const Rational& c) const;
    QMatrix operator-() const;

    QMatrix transpose() const;
    Rational trace() const;
    // Square matrices only; k >= 0, binary powering.
    QMatrix pow(long k) const;

    // Exact Gaussian elimination.
    Rational det() const;
    std::optional<QMatrix> inverse() const;

    // Monic characteristic polynomial det(tI - A), Faddeev-LeVerrier recurrence.
    Polynomial char_poly() const;
    // det(I - tA): the coefficient reversal of char_poly.
    Polynomial det_identity_minus_t() const;

    Echelon rref() const;

    std::vector<Rational> row(int i) const;
    std::vector<Rational> col(int j) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;

    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }
};

struct Echelon {
    QMatrix reduced;             // reduced row echelon form, zero rows dropped
    std::vector<int> pivot_cols; // one per surviving row
    int rank = 0;
};

// Block-diagonal assembly; blocks may be 0 x 0.
QMatrix direct_sum(const std::vector<QMatrix>& blocks);

// Membership of v in the row space captured by an Echelon.
bool in_row_space(const Echelon& span, const std::vector<Rational>& v);

// Solves A x = b exactly; nullopt when inconsistent. For underdetermined
// systems returns one solution (free variables set to zero).
std::optional<std::vector<Rational>> solve_linear(const QMatrix& a, const std::vector<Rational>& b);

} // namespace lefzeta
