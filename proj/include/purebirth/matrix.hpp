// Small dense row-major matrix used by the exact oracles and the
// eigendecomposition fixtures. Not a performance structure.
#pragma once

#include <stdexcept>
#include <vector>

#include "purebirth/numerics.hpp"
#include "purebirth/sympoly.hpp"

namespace purebirth {

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, ring::zero<T>()) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = ring::one<T>();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch");
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a.at(i, k);
                if (scalar_is_zero(aik)) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    c.at(i, j) = c.at(i, j) + aik * b.at(k, j);
                }
            }
        }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    static bool scalar_is_zero(const T& x) {
        if constexpr (std::is_same_v<T, mpz_class>) {
            return sgn(x) == 0;
        } else {
            return scalar_traits<T>::is_zero(x);
        }
    }

    int rows_, cols_;
    std::vector<T> a_;
};

template <class T>
Matrix<T> matrix_pow(const Matrix<T>& m, unsigned long t) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix_pow: square matrix required");
    Matrix<T> result = Matrix<T>::identity(m.rows());
    Matrix<T> base = m;
    while (t > 0) {
        if (t & 1UL) result = result * base;
        base = base * base;
        t >>= 1UL;
    }
    return result;
}

inline Matrix<Rational> to_rational(const Matrix<mpz_class>& m, const mpz_class& denominator = 1) {
    Matrix<Rational> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = Rational(m.at(i, j), denominator);
    return r;
}

}  // namespace purebirth
