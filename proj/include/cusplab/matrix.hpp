#pragma once

#include <initializer_list>
#include <vector>

#include "cusplab/numbers.hpp"

namespace cusplab {

// Dense rectangular matrix over an exact scalar type.
template <typename T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, T fill = T(0))
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {}
    Mat(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
        a_.reserve(static_cast<std::size_t>(rows_) * cols_);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_) throw error("ragged matrix literal");
            for (const auto& x : r) a_.push_back(x);
        }
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const {
        check_same_shape(o);
        Mat r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] + o.a_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        check_same_shape(o);
        Mat r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] - o.a_[i];
        return r;
    }
    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw error("matrix product shape mismatch");
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& x = (*this)(i, k);
                if (x == T(0)) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r(i, j) = r(i, j) + x * o(k, j);
            }
        return r;
    }
    Mat scaled(const T& s) const {
        Mat r = *this;
        for (auto& x : r.a_) x = x * s;
        return r;
    }
    Mat transposed() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<T> col(int j) const {
        std::vector<T> v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void set_col(int j, const std::vector<T>& v) {
        for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }
    Mat cols_slice(int from, int count) const {
        Mat r(rows_, count);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < count; ++j) r(i, j) = (*this)(i, from + j);
        return r;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw error("matrix-vector shape mismatch");
        std::vector<T> r(rows_, T(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] = r[i] + (*this)(i, j) * v[j];
        return r;
    }

    void swap_rows(int i, int j) {
        for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    void swap_cols(int i, int j) {
        for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }
    // row i += f * row j
    void add_row(int i, int j, const T& f) {
        for (int c = 0; c < cols_; ++c) (*this)(i, c) = (*this)(i, c) + f * (*this)(j, c);
    }
    // col i += f * col j
    void add_col(int i, int j, const T& f) {
        for (int r = 0; r < rows_; ++r) (*this)(r, i) = (*this)(r, i) + f * (*this)(r, j);
    }
    void negate_row(int i) {
        for (int c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
    }
    void negate_col(int j) {
        for (int r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
    }

private:
    void check_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix shape mismatch");
    }
    int rows_, cols_;
    std::vector<T> a_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

inline RatMat to_rat(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

// Exact integer inverse converted from a rational one; throws unless every
// entry is integral (i.e. the matrix is unimodular).
IntMat to_int_checked(const RatMat& m);

// Fraction-free Bareiss determinant.
Int det(const IntMat& m);
// Clears row denominators, then Bareiss.
Rat det(const RatMat& m);

// Plain cofactor expansion over any commutative ring; for small n and as the
// independent oracle in tests.
template <typename T>
T det_cofactor(const Mat<T>& m) {
    if (!m.is_square()) throw nonsquare_error("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) return T(1);
    if (n == 1) return m(0, 0);
    T acc(0);
    for (int i = 0; i < n; ++i) {
        if (m(i, 0) == T(0)) continue;
        Mat<T> minor(n - 1, n - 1);
        for (int r = 0, rr = 0; r < n; ++r) {
            if (r == i) continue;
            for (int c = 1; c < n; ++c) minor(rr, c - 1) = m(r, c);
            ++rr;
        }
        T term = m(i, 0) * det_cofactor(minor);
        if (i % 2 == 0) acc = acc + term;
        else acc = acc - term;
    }
    return acc;
}

// Gaussian elimination helpers over a field type (Rat, RatFunc, Fp, GaussQ).
template <typename F>
int rank_field(Mat<F> m) {
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!(m(i, c) == F(0))) { piv = i; break; }
        if (piv < 0) continue;
        m.swap_rows(r, piv);
        for (int i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == F(0)) continue;
            F f = m(i, c) / m(r, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        ++r;
    }
    return r;
}

// Solves A x = b for square nonsingular A.
template <typename F>
std::vector<F> solve_field(Mat<F> a, std::vector<F> b) {
    if (!a.is_square() || static_cast<int>(b.size()) != a.rows())
        throw error("solve: shape mismatch");
    int n = a.rows();
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!(a(i, c) == F(0))) { piv = i; break; }
        if (piv < 0) throw degenerate_error("solve: singular matrix");
        a.swap_rows(c, piv);
        std::swap(b[c], b[piv]);
        for (int i = 0; i < n; ++i) {
            if (i == c || a(i, c) == F(0)) continue;
            F f = a(i, c) / a(c, c);
            for (int j = c; j < n; ++j) a(i, j) = a(i, j) - f * a(c, j);
            b[i] = b[i] - f * b[c];
        }
    }
    std::vector<F> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[i] / a(i, i);
    return x;
}

template <typename F>
Mat<F> inverse_field(const Mat<F>& a) {
    if (!a.is_square()) throw nonsquare_error("inverse of non-square matrix");
    int n = a.rows();
    Mat<F> inv(n, n);
    for (int j = 0; j < n; ++j) {
        std::vector<F> e(n, F(0));
        e[j] = F(1);
        inv.set_col(j, solve_field(a, e));
    }
    return inv;
}

// Kernel basis (as columns) over a field.
template <typename F>
Mat<F> kernel_field(Mat<F> m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!(m(i, c) == F(0))) { piv = i; break; }
        if (piv < 0) continue;
        m.swap_rows(r, piv);
        for (int i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == F(0)) continue;
            F f = m(i, c) / m(r, c);
            for (int j = 0; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<int> free_cols;
    {
        std::size_t pi = 0;
        for (int c = 0; c < cols; ++c) {
            if (pi < pivot_col.size() && pivot_col[pi] == c) { ++pi; continue; }
            free_cols.push_back(c);
        }
    }
    Mat<F> ker(cols, static_cast<int>(free_cols.size()));
    for (std::size_t fj = 0; fj < free_cols.size(); ++fj) {
        int fc = free_cols[fj];
        ker(fc, static_cast<int>(fj)) = F(1);
        for (int i = static_cast<int>(pivot_col.size()) - 1; i >= 0; --i)
            ker(pivot_col[i], static_cast<int>(fj)) = -(m(i, fc) / m(i, pivot_col[i]));
    }
    return ker;
}

} // namespace cusplab
