#include "pinidx/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace pinidx {

namespace {

void check_index(std::size_t i, std::size_t j, std::size_t r, std::size_t c) {
    if (i >= r || j >= c) throw std::out_of_range("matrix index out of range");
}

void accumulate(SparseRow& row, std::size_t col, const Rational& value) {
    if (value == 0) return;
    auto [it, inserted] = row.try_emplace(col, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) row.erase(it);
    }
}

}  // namespace

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace(i, 1);
    return m;
}

QMatrix QMatrix::diagonal(std::span<const Rational> entries) {
    QMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i] != 0) m.rows_[i].emplace(i, entries[i]);
    return m;
}

Rational QMatrix::get(std::size_t i, std::size_t j) const {
    check_index(i, j, rows(), cols_);
    auto it = rows_[i].find(j);
    return it == rows_[i].end() ? Rational(0) : it->second;
}

void QMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
    check_index(i, j, rows(), cols_);
    if (value == 0)
        rows_[i].erase(j);
    else
        rows_[i][j] = value;
}

void QMatrix::add_to(std::size_t i, std::size_t j, const Rational& value) {
    check_index(i, j, rows(), cols_);
    accumulate(rows_[i], j, value);
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
    if (cols_ != other.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    QMatrix out(rows(), other.cols_);
    for (std::size_t i = 0; i < rows(); ++i) {
        SparseRow& acc = out.rows_[i];
        for (const auto& [k, a] : rows_[i])
            for (const auto& [j, b] : other.rows_[k]) accumulate(acc, j, a * b);
    }
    return out;
}

QMatrix& QMatrix::operator+=(const QMatrix& other) {
    if (rows() != other.rows() || cols_ != other.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < rows(); ++i)
        for (const auto& [j, b] : other.rows_[i]) accumulate(rows_[i], j, b);
    return *this;
}

QMatrix QMatrix::operator+(const QMatrix& other) const {
    QMatrix out = *this;
    out += other;
    return out;
}

QMatrix QMatrix::operator-() const { return *this * Rational(-1); }

QMatrix QMatrix::operator-(const QMatrix& other) const { return *this + (-other); }

QMatrix QMatrix::operator*(const Rational& scalar) const {
    QMatrix out(rows(), cols_);
    if (scalar == 0) return out;
    for (std::size_t i = 0; i < rows(); ++i)
        for (const auto& [j, a] : rows_[i]) out.rows_[i].emplace(j, a * scalar);
    return out;
}

Vector QMatrix::apply(std::span<const Rational> v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector product: shape mismatch");
    Vector out(rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (const auto& [j, a] : rows_[i]) out[i] += a * v[j];
    return out;
}

QMatrix QMatrix::transpose() const {
    QMatrix out(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (const auto& [j, a] : rows_[i]) out.rows_[j].emplace(i, a);
    return out;
}

bool QMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const SparseRow& r) { return r.empty(); });
}

bool QMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows(); ++i)
        for (const auto& entry : rows_[i])
            if (entry.first != i) return false;
    return true;
}

std::size_t QMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

bool QMatrix::operator==(const QMatrix& other) const { return cols_ == other.cols_ && rows_ == other.rows_; }

QMatrix kron(const QMatrix& a, const QMatrix& b) {
    QMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (const auto& [j, x] : a.row(i))
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (const auto& [l, y] : b.row(k)) out.set(i * b.rows() + k, j * b.cols() + l, x * y);
    return out;
}

std::vector<std::size_t> row_reduce(std::vector<SparseRow>& rows) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    while (true) {
        // Pick the remaining row with the smallest leading column.
        std::size_t best = rows.size();
        for (std::size_t r = next; r < rows.size(); ++r) {
            if (rows[r].empty()) continue;
            if (best == rows.size() || rows[r].begin()->first < rows[best].begin()->first ||
                (rows[r].begin()->first == rows[best].begin()->first && rows[r].size() < rows[best].size()))
                best = r;
        }
        if (best == rows.size()) break;
        std::swap(rows[next], rows[best]);
        SparseRow& pivot_row = rows[next];
        const std::size_t col = pivot_row.begin()->first;
        const Rational inv = 1 / pivot_row.begin()->second;
        for (auto& [j, a] : pivot_row) a *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next) continue;
            auto it = rows[r].find(col);
            if (it == rows[r].end()) continue;
            const Rational factor = it->second;
            for (const auto& [j, a] : pivot_row) accumulate(rows[r], j, -factor * a);
        }
        pivots.push_back(col);
        ++next;
    }
    rows.resize(pivots.size());
    return pivots;
}

std::size_t rank(std::vector<SparseRow> rows) { return row_reduce(rows).size(); }

std::size_t rank(const QMatrix& m) {
    std::vector<SparseRow> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rank(std::move(rows));
}

std::vector<Vector> nullspace(const QMatrix& m) {
    std::vector<SparseRow> rows;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (!m.row(i).empty()) rows.push_back(m.row(i));
    const auto pivots = row_reduce(rows);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            auto it = rows[r].find(free);
            if (it != rows[r].end()) v[pivots[r]] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace pinidx
