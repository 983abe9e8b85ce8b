#pragma once

// Sparse exact-rational matrices. Every operator in this library (Clifford
// generators, exterior-algebra operators, the oscillator on polynomial
// sections) is sparse in its natural basis, so rows are stored as ordered
// column -> value maps with no explicit zeros.

#include "pinidx/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace pinidx {

using SparseRow = std::map<std::size_t, Rational>;
using Vector = std::vector<Rational>;

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);

    static QMatrix identity(std::size_t n);
    static QMatrix diagonal(std::span<const Rational> entries);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    Rational get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Rational& value);
    void add_to(std::size_t i, std::size_t j, const Rational& value);
    const SparseRow& row(std::size_t i) const { return rows_.at(i); }

    QMatrix operator*(const QMatrix& other) const;
    QMatrix operator+(const QMatrix& other) const;
    QMatrix operator-(const QMatrix& other) const;
    QMatrix operator-() const;
    QMatrix operator*(const Rational& scalar) const;
    friend QMatrix operator*(const Rational& scalar, const QMatrix& m) { return m * scalar; }
    QMatrix& operator+=(const QMatrix& other);

    Vector apply(std::span<const Rational> v) const;
    QMatrix transpose() const;

    bool is_zero() const;
    bool is_diagonal() const;
    std::size_t nonzeros() const;
    bool operator==(const QMatrix& other) const;

private:
    std::size_t cols_ = 0;
    std::vector<SparseRow> rows_;
};

QMatrix kron(const QMatrix& a, const QMatrix& b);

// Reduced row echelon form of the given rows (in place), returning the
// pivot column of each surviving row in order.
std::vector<std::size_t> row_reduce(std::vector<SparseRow>& rows);

std::size_t rank(std::vector<SparseRow> rows);
std::size_t rank(const QMatrix& m);

// Basis of {x : m x = 0}, one vector per free column, each with a 1 in its
// free coordinate.
std::vector<Vector> nullspace(const QMatrix& m);

}  // namespace pinidx
