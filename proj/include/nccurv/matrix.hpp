#ifndef NCCURV_MATRIX_HPP
#define NCCURV_MATRIX_HPP

#include <cassert>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace nccurv {

/// Dense real matrix, row-major. Sizes here are desk-scale, so no
/// attempt is made at blocking or expression templates.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0.0) {}

    static Matrix identity(int n) {
        Matrix I(n, n);
        for (int i = 0; i < n; ++i) I(i, i) = 1.0;
        return I;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix& operator+=(const Matrix& b) {
        assert(rows_ == b.rows_ && cols_ == b.cols_);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] += b.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& b) {
        assert(rows_ == b.rows_ && cols_ == b.cols_);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] -= b.a_[k];
        return *this;
    }
    Matrix& operator*=(double s) {
        for (double& x : a_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, double s) { return a *= s; }
    friend Matrix operator*(double s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const double aik = a(i, k);
                if (aik == 0.0) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    std::vector<double> apply(const std::vector<double>& x) const {
        assert(static_cast<int>(x.size()) == cols_);
        std::vector<double> y(rows_, 0.0);
        for (int i = 0; i < rows_; ++i) {
            double s = 0.0;
            for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (double x : a_) s += x * x;
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (double x : a_) m = std::max(m, std::abs(x));
        return m;
    }

    bool is_finite() const {
        for (double x : a_)
            if (!std::isfinite(x)) return false;
        return true;
    }

    /// Max |A - A^T| entry.
    double asymmetry() const {
        double m = 0.0;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j) m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
        return m;
    }

    /// Averages A and A^T in place. Throws if not square.
    void symmetrize() {
        if (rows_ != cols_) throw std::invalid_argument("symmetrize: matrix not square");
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j) {
                const double m = 0.5 * ((*this)(i, j) + (*this)(j, i));
                (*this)(i, j) = m;
                (*this)(j, i) = m;
            }
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

inline double dot(const std::vector<double>& x, const std::vector<double>& y) {
    assert(x.size() == y.size());
    double s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline double norm2(const std::vector<double>& x) { return std::sqrt(dot(x, x)); }

}  // namespace nccurv

#endif
