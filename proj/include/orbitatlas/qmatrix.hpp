#ifndef ORBITATLAS_QMATRIX_HPP
#define ORBITATLAS_QMATRIX_HPP

#include "orbitatlas/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace orbitatlas {

/// Dense matrix over Q with exact elimination primitives.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    QMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> entries);

    static QMatrix identity(std::size_t n);
    static QMatrix zero(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const QMatrix& other) const = default;

    bool is_zero() const;
    bool is_symmetric() const;
    bool is_antisymmetric() const;

    QMatrix transpose() const;
    QMatrix operator*(const QMatrix& other) const;
    QMatrix operator+(const QMatrix& other) const;
    QMatrix operator-(const QMatrix& other) const;
    QMatrix scaled(const Rational& c) const;

    /// Exact inverse; throws std::domain_error on singular input.
    QMatrix inverse() const;

    /// Exact rank by fraction-free (Bareiss) elimination on the
    /// denominator-cleared integer matrix. Pivot choice: smallest nonzero
    /// magnitude in the active column block, which bounds coefficient growth.
    std::size_t rank() const;

    /// Basis of the right null space { v : M v = 0 }, returned as rows.
    QMatrix null_space() const;

    /// Rows forming a basis of the row space (a maximal independent subset).
    QMatrix row_basis() const;

    /// Stack other's rows below this matrix. Column counts must agree.
    QMatrix stacked(const QMatrix& other) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// Dimension of the intersection of the two row spaces.
std::size_t intersection_dim(const QMatrix& a, const QMatrix& b);

/// Dimension of the sum of the two row spaces.
std::size_t sum_dim(const QMatrix& a, const QMatrix& b);

/// Basis (rows) of { v : form(a_i, v) = 0 for every row a_i }, where the
/// bilinear form has Gram matrix `gram`: form(x, y) = x gram y^t.
QMatrix perp_space(const QMatrix& a, const QMatrix& gram);

} // namespace orbitatlas

#endif
