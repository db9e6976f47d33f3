#pragma once

// Dense rational matrices and exact Gaussian elimination.

#include "curvlab/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace curvlab {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw DimensionError("from_rows: ragged row");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw DimensionError("from_columns: ragged column");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const { return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
    Vec col(std::size_t j) const {
        Vec c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    std::vector<Vec> row_list() const {
        std::vector<Vec> r;
        for (std::size_t i = 0; i < rows_; ++i) r.push_back(row(i));
        return r;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Vec operator*(const Vec& x) const {
        if (x.size() != cols_) throw DimensionError("matrix-vector: size mismatch");
        Vec y(rows_, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    Matrix operator*(const Matrix& b) const {
        if (cols_ != b.rows_) throw DimensionError("matrix product: size mismatch");
        Matrix c(rows_, b.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a * b(k, j);
            }
        return c;
    }

    Matrix operator+(const Matrix& b) const {
        check_same(b);
        Matrix c = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) c.data_[i] += b.data_[i];
        return c;
    }

    Matrix operator-(const Matrix& b) const {
        check_same(b);
        Matrix c = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) c.data_[i] -= b.data_[i];
        return c;
    }

    friend Matrix operator*(const Rational& s, const Matrix& m) {
        Matrix c = m;
        for (auto& x : c.data_) x *= s;
        return c;
    }

    bool operator==(const Matrix& b) const { return rows_ == b.rows_ && cols_ == b.cols_ && data_ == b.data_; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
    }

    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? ", " : "") << '[';
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << to_string((*this)(i, j));
            os << ']';
        }
        os << ']';
        return os.str();
    }

private:
    void check_same(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionError("matrix sum: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

inline Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("hstack: row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

inline Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw DimensionError("vstack: column mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

inline Echelon rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// Basis of {x : m x = 0}, one vector per free column.
inline std::vector<Vec> null_space(const Matrix& m) {
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v = zeros(m.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Basis of the row space (nonzero rows of the rref).
inline std::vector<Vec> row_space(const Matrix& m) {
    auto [r, pivots] = rref(m);
    std::vector<Vec> basis;
    for (std::size_t k = 0; k < pivots.size(); ++k) basis.push_back(r.row(k));
    return basis;
}

/// Canonical (rref) basis of span(vectors) in ambient dimension n.
inline std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t n) {
    if (vectors.empty()) return {};
    return row_space(Matrix::from_rows(vectors, n));
}

/// Some X with a X = b, or nullopt when inconsistent.
inline std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("solve: row mismatch");
    auto [r, pivots] = rref(hstack(a, b));
    for (auto p : pivots)
        if (p >= a.cols()) return std::nullopt;
    Matrix x(a.cols(), b.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[k], j) = r(k, a.cols() + j);
    return x;
}

inline std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    auto x = solve(a, Matrix::from_columns({b}, a.rows()));
    if (!x) return std::nullopt;
    return x->col(0);
}

/// Whether v lies in span(basis).
inline bool in_span(const std::vector<Vec>& basis, const Vec& v) {
    if (is_zero(v)) return true;
    if (basis.empty()) return false;
    return solve(Matrix::from_columns(basis, v.size()), v).has_value();
}

/// Right inverse of a full-row-rank matrix: a * result = I.
inline Matrix right_inverse(const Matrix& a) {
    auto x = solve(a, Matrix::identity(a.rows()));
    if (!x) throw DimensionError("right_inverse: matrix lacks full row rank");
    return *x;
}

/// Orthogonal projection of v onto the complement of span(basis).
inline Vec project_out(const Vec& v, const std::vector<Vec>& basis) {
    if (basis.empty()) return v;
    Matrix l = Matrix::from_columns(basis, v.size());
    Matrix gram = l.transpose() * l;
    auto coeff = solve(gram, l.transpose() * v);
    if (!coeff) throw DimensionError("project_out: dependent basis");
    return v - l * *coeff;
}

}  // namespace curvlab
