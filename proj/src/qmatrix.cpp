#include "orbitatlas/qmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitatlas {

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> entries)
    : QMatrix(rows, cols) {
    if (entries.size() != rows * cols)
        throw std::invalid_argument("entry count does not match dimensions");
    std::size_t i = 0;
    for (long v : entries) data_[i++] = Rational(v);
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool QMatrix::is_zero() const {
    for (const auto& q : data_)
        if (q != 0) return false;
    return true;
}

bool QMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool QMatrix::is_antisymmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

QMatrix QMatrix::transpose() const {
    QMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m.at(j, i) = at(i, j);
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("dimension mismatch in matrix product");
    QMatrix m(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                m.at(i, j) += a * other.at(k, j);
        }
    return m;
}

QMatrix QMatrix::operator+(const QMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("dimension mismatch in matrix sum");
    QMatrix m = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += other.data_[i];
    return m;
}

QMatrix QMatrix::operator-(const QMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("dimension mismatch in matrix difference");
    QMatrix m = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= other.data_[i];
    return m;
}

QMatrix QMatrix::scaled(const Rational& c) const {
    QMatrix m = *this;
    for (auto& q : m.data_) q *= c;
    return m;
}

QMatrix QMatrix::inverse() const {
    if (rows_ != cols_) throw std::domain_error("inverse of non-square matrix");
    const std::size_t n = rows_;
    QMatrix a = *this;
    QMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col) == 0) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Rational p = a.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            Rational f = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

namespace {

// Clears denominators row by row; rank is invariant under row scaling.
std::vector<std::vector<Integer>> to_integer_rows(const QMatrix& m) {
    std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer lcm = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Integer den = m.at(i, j).get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational q = m.at(i, j) * Rational(lcm);
            rows[i][j] = q.get_num();
        }
    }
    return rows;
}

} // namespace

std::size_t QMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    auto a = to_integer_rows(*this);
    const std::size_t nr = rows_, nc = cols_;
    std::size_t rank = 0;
    std::size_t col = 0;
    Integer prev = 1;
    while (rank < nr && col < nc) {
        // smallest-magnitude nonzero pivot in this column
        std::size_t piv = nr;
        for (std::size_t i = rank; i < nr; ++i) {
            if (a[i][col] == 0) continue;
            if (piv == nr ||
                mpz_cmpabs(a[i][col].get_mpz_t(), a[piv][col].get_mpz_t()) < 0)
                piv = i;
        }
        if (piv == nr) {
            ++col;
            continue;
        }
        std::swap(a[rank], a[piv]);
        for (std::size_t i = rank + 1; i < nr; ++i) {
            for (std::size_t j = col + 1; j < nc; ++j) {
                Integer t = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
        ++col;
    }
    return rank;
}

namespace {

// Reduced row echelon form; returns pivot column per reduced row.
std::vector<std::size_t> rref(QMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a.at(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
        Rational p = a.at(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) /= p;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col) == 0) continue;
            Rational f = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

QMatrix QMatrix::null_space() const {
    QMatrix a = *this;
    auto pivots = rref(a);
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0, p = 0; c < cols_; ++c) {
        if (p < pivots.size() && pivots[p] == c)
            ++p;
        else
            free_cols.push_back(c);
    }
    QMatrix basis(free_cols.size(), cols_);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        basis.at(k, free_cols[k]) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis.at(k, pivots[r]) = -a.at(r, free_cols[k]);
    }
    return basis;
}

QMatrix QMatrix::row_basis() const {
    QMatrix a = *this;
    auto pivots = rref(a);
    QMatrix basis(pivots.size(), cols_);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t j = 0; j < cols_; ++j) basis.at(r, j) = a.at(r, j);
    return basis;
}

QMatrix QMatrix::stacked(const QMatrix& other) const {
    if (cols_ != other.cols_)
        throw std::invalid_argument("dimension mismatch in row stack");
    QMatrix m(rows_ + other.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < other.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(rows_ + i, j) = other.at(i, j);
    return m;
}

std::size_t sum_dim(const QMatrix& a, const QMatrix& b) {
    return a.stacked(b).rank();
}

std::size_t intersection_dim(const QMatrix& a, const QMatrix& b) {
    return a.rank() + b.rank() - sum_dim(a, b);
}

QMatrix perp_space(const QMatrix& a, const QMatrix& gram) {
    if (a.cols() != gram.rows())
        throw std::invalid_argument("dimension mismatch in perp computation");
    // v is perpendicular to the row space of a iff (a gram) v = 0
    return (a * gram).null_space();
}

} // namespace orbitatlas
