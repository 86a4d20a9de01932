#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace delcoh {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// Dense row-major matrix. Empty shapes (0 x n, n x 0) are legal.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
        return out;
    }
    void set_col(std::size_t j, const std::vector<T>& v) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    // Copies `block` into this matrix with its top-left corner at (r0, c0).
    void set_block(std::size_t r0, std::size_t c0, const Matrix& block) {
        for (std::size_t i = 0; i < block.rows_; ++i)
            for (std::size_t j = 0; j < block.cols_; ++j) (*this)(r0 + i, c0 + j) = block(i, j);
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Matrix out(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    // row[dst] += k * row[src]
    void add_row(std::size_t dst, std::size_t src, const T& k) {
        if (k == 0) return;
        for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
    }
    // col[dst] += k * col[src]
    void add_col(std::size_t dst, std::size_t src, const T& k) {
        if (k == 0) return;
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);
RatVector operator*(const RatMatrix& a, const RatVector& x);
RatVector operator*(const IntMatrix& a, const RatVector& x);

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);
// Throws std::domain_error when an entry is not an integer.
IntVector to_integer(const RatVector& v);

// Stacks blocks; every block in a row of blocks must have equal row counts.
RatMatrix hstack(const std::vector<RatMatrix>& blocks);
RatMatrix vstack(const std::vector<RatMatrix>& blocks);
IntMatrix hstack(const std::vector<IntMatrix>& blocks);
IntMatrix vstack(const std::vector<IntMatrix>& blocks);

Rational dot(const RatVector& a, const RatVector& b);
Rational dot(const RatVector& a, const IntVector& b);
Integer dot(const IntVector& a, const IntVector& b);

RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector scale(const RatVector& a, const Rational& k);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector negate(const IntVector& a);
IntVector scale(const IntVector& a, const Integer& k);
RatVector concat(const RatVector& a, const RatVector& b);
IntVector concat(const IntVector& a, const IntVector& b);

bool is_integer(const Rational& q);
bool is_integral(const RatVector& v);
bool is_zero(const RatVector& v);
bool is_zero(const IntVector& v);

// Representative of q mod 1 in [0, 1).
Rational frac(const Rational& q);
// Floor division with nonnegative remainder for b > 0; rounds toward -inf in general.
Integer floor_div(const Integer& a, const Integer& b);

// "a/b" in lowest terms, "n" for integers.
std::string to_string(const Rational& q);
// Parses "a", "-a", "a/b"; throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);

}  // namespace delcoh
