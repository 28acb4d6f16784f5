#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "glci/arith.hpp"
#include "glci/error.hpp"

namespace glci {

// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n, T(0));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> row(std::size_t r) const {
        return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
        Matrix s(rs.size(), cs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) s(i, j) = (*this)(rs[i], cs[j]);
        return s;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw InvalidInput("matrix product dimension mismatch");
        Matrix p(a.rows_, b.cols_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (x == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += x * b(k, j);
            }
        return p;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using RationalMatrix = Matrix<Rational>;
using BigIntMatrix = Matrix<BigInt>;

struct RowEchelon {
    RationalMatrix reduced;            // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon rref(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);

// Basis of {v : m v = 0}.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

Rational determinant(RationalMatrix m);
RationalMatrix inverse(const RationalMatrix& m);

// Fraction-free determinant.
BigInt bareiss_determinant(BigIntMatrix m);

// Diagonal of the Smith normal form: d_1 | d_2 | ... with d_i >= 0.
// Length is min(rows, cols); trailing zeros mark rank deficiency.
std::vector<BigInt> smith_invariant_factors(BigIntMatrix m);

// True iff every square minor of every size is nonzero.
bool all_minors_nonzero(const RationalMatrix& m);

}  // namespace glci
