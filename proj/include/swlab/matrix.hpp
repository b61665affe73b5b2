#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "scalar.hpp"

namespace swlab {

struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kKronEntryCap = 100'000'000;

/// Dense row-major matrix over an exact quadratic scalar or double.
template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, scalar_ops<T>::zero()) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_ops<T>::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    const std::vector<T>& entries() const { return e_; }
    std::vector<T>& entries() { return e_; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.e_ == y.e_;
    }

    bool is_zero(double eps = 0.0) const {
        for (const T& v : e_)
            if (!scalar_ops<T>::is_zero(v, eps)) return false;
        return true;
    }

    bool is_identity(double eps = 0.0) const {
        if (rows_ != cols_) return false;
        Matrix d = *this - identity(rows_);
        return d.is_zero(eps);
    }

    Matrix operator+(const Matrix& y) const {
        check_same_shape(y);
        Matrix r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += y.e_[i];
        return r;
    }

    Matrix operator-(const Matrix& y) const {
        check_same_shape(y);
        Matrix r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= y.e_[i];
        return r;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (T& v : r.e_) v = -v;
        return r;
    }

    Matrix operator*(const T& s) const {
        Matrix r = *this;
        for (T& v : r.e_) v *= s;
        return r;
    }

    /// Zero operands are skipped; the operator grids here are mostly sparse.
    Matrix operator*(const Matrix& y) const {
        if (cols_ != y.rows_) throw dimension_error("Matrix multiply: shape mismatch");
        Matrix r(rows_, y.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (scalar_ops<T>::is_zero(a)) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) {
                    const T& b = y(k, j);
                    if (scalar_ops<T>::is_zero(b)) continue;
                    r(i, j) += a * b;
                }
            }
        }
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    T trace() const {
        T s = scalar_ops<T>::zero();
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
        return s;
    }

    double max_abs() const {
        double m = 0.0;
        for (const T& v : e_) m = std::max(m, std::abs(scalar_ops<T>::to_double(v)));
        return m;
    }

  private:
    void check_same_shape(const Matrix& y) const {
        if (rows_ != y.rows_ || cols_ != y.cols_)
            throw dimension_error("Matrix add/sub: shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<T> e_;
};

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    std::size_t R = a.rows() * b.rows(), C = a.cols() * b.cols();
    if (R != 0 && C > kKronEntryCap / R)
        throw cap_exceeded("kron: result exceeds the entry cap");
    Matrix<T> r(R, C);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const T& av = a(i, j);
            if (scalar_ops<T>::is_zero(av)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const T& bv = b(k, l);
                    if (scalar_ops<T>::is_zero(bv)) continue;
                    r(i * b.rows() + k, j * b.cols() + l) = av * bv;
                }
        }
    return r;
}

template <class T>
Matrix<double> to_double(const Matrix<T>& a) {
    Matrix<double> r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = scalar_ops<T>::to_double(a(i, j));
    return r;
}

namespace detail {

/// Integral element a + b*sqrt(d) of Z[sqrt(d)], the working ring of the
/// fraction-free elimination below.
struct ZQuad {
    mpz_class a, b;

    bool is_zero() const { return a == 0 && b == 0; }

    static ZQuad mul(const ZQuad& x, const ZQuad& y, unsigned long d) {
        return {x.a * y.a + x.b * y.b * mpz_class(d), x.a * y.b + x.b * y.a};
    }
    static ZQuad sub(const ZQuad& x, const ZQuad& y) { return {x.a - y.a, x.b - y.b}; }

    /// Exact division in Z[sqrt(d)]; Bareiss guarantees divisibility.
    static ZQuad div(const ZQuad& x, const ZQuad& y, unsigned long d) {
        mpz_class norm = y.a * y.a - y.b * y.b * mpz_class(d);
        ZQuad num = mul(x, {y.a, -y.b}, d);
        ZQuad q;
        mpz_divexact(q.a.get_mpz_t(), num.a.get_mpz_t(), norm.get_mpz_t());
        mpz_divexact(q.b.get_mpz_t(), num.b.get_mpz_t(), norm.get_mpz_t());
        return q;
    }
};

}  // namespace detail

/// Exact rank by fraction-free (Bareiss) elimination over Z[sqrt(d)].
/// Rows are first scaled integral; the update keeps every intermediate
/// value a minor of the scaled matrix, so divisions stay exact.
inline std::size_t mat_rank(const Matrix<QuadScalar>& m) {
    const std::size_t R = m.rows(), C = m.cols();
    if (R == 0 || C == 0) return 0;
    unsigned long d = 0;
    for (const QuadScalar& v : m.entries())
        if (v.disc() != 0) d = v.disc();

    std::vector<std::vector<detail::ZQuad>> w(R, std::vector<detail::ZQuad>(C));
    for (std::size_t i = 0; i < R; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < C; ++j) {
            mpz_class f = l / m(i, j).den();
            w[i][j] = {m(i, j).num_rat() * f, m(i, j).num_irr() * f};
        }
    }

    std::size_t rank = 0;
    detail::ZQuad prev{1, 0};
    for (std::size_t col = 0; col < C && rank < R; ++col) {
        std::size_t piv = rank;
        while (piv < R && w[piv][col].is_zero()) ++piv;
        if (piv == R) continue;
        std::swap(w[piv], w[rank]);
        const detail::ZQuad pivot = w[rank][col];
        for (std::size_t i = rank + 1; i < R; ++i) {
            for (std::size_t j = col + 1; j < C; ++j) {
                detail::ZQuad t = detail::ZQuad::sub(detail::ZQuad::mul(pivot, w[i][j], d),
                                                     detail::ZQuad::mul(w[i][col], w[rank][j], d));
                w[i][j] = detail::ZQuad::div(t, prev, d);
            }
            w[i][col] = {0, 0};
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

/// Float rank with a relative pivot threshold tau * max|entry|.
inline std::size_t mat_rank(const Matrix<double>& m, double rel_tol = 1e-8) {
    const std::size_t R = m.rows(), C = m.cols();
    if (R == 0 || C == 0) return 0;
    double thresh = rel_tol * std::max(m.max_abs(), 1e-300);
    Matrix<double> w = m;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < C && rank < R; ++col) {
        std::size_t piv = rank;
        double best = std::abs(w(rank, col));
        for (std::size_t i = rank + 1; i < R; ++i)
            if (std::abs(w(i, col)) > best) {
                best = std::abs(w(i, col));
                piv = i;
            }
        if (best <= thresh) continue;
        for (std::size_t j = 0; j < C; ++j) std::swap(w(rank, j), w(piv, j));
        for (std::size_t i = rank + 1; i < R; ++i) {
            double f = w(i, col) / w(rank, col);
            for (std::size_t j = col; j < C; ++j) w(i, j) -= f * w(rank, j);
        }
        ++rank;
    }
    return rank;
}

/// Affine solution set of A x = b: one particular solution per right-hand
/// column plus a basis of ker A, or inconsistent = true.
template <class T>
struct LinearSolution {
    bool consistent = true;
    Matrix<T> particular;  // cols(A) x cols(b)
    Matrix<T> kernel;      // cols(A) x dim ker
    std::size_t rank = 0;
};

template <class T>
LinearSolution<T> linear_solve(const Matrix<T>& a, const Matrix<T>& b, double eps = 0.0) {
    if (a.rows() != b.rows()) throw dimension_error("linear_solve: row mismatch");
    const std::size_t R = a.rows(), C = a.cols(), K = b.cols();
    if (!scalar_ops<T>::exact)
        eps = (eps > 0 ? eps : 1e-8) * std::max({a.max_abs(), b.max_abs(), 1e-300});

    // Gauss-Jordan on [A | b]
    Matrix<T> w(R, C + K);
    for (std::size_t i = 0; i < R; ++i) {
        for (std::size_t j = 0; j < C; ++j) w(i, j) = a(i, j);
        for (std::size_t j = 0; j < K; ++j) w(i, C + j) = b(i, j);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < C && rank < R; ++col) {
        std::size_t piv = rank;
        while (piv < R && scalar_ops<T>::is_zero(w(piv, col), eps)) ++piv;
        if (piv == R) continue;
        for (std::size_t j = 0; j < C + K; ++j) std::swap(w(rank, j), w(piv, j));
        T inv = scalar_ops<T>::one() / w(rank, col);
        for (std::size_t j = col; j < C + K; ++j) w(rank, j) *= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == rank || scalar_ops<T>::is_zero(w(i, col), eps)) continue;
            T f = w(i, col);
            for (std::size_t j = col; j < C + K; ++j) w(i, j) -= f * w(rank, j);
        }
        pivot_col.push_back(col);
        ++rank;
    }

    LinearSolution<T> out;
    out.rank = rank;
    for (std::size_t i = rank; i < R; ++i)
        for (std::size_t j = 0; j < K; ++j)
            if (!scalar_ops<T>::is_zero(w(i, C + j), eps)) out.consistent = false;
    out.particular = Matrix<T>(C, K);
    if (out.consistent)
        for (std::size_t r = 0; r < rank; ++r)
            for (std::size_t j = 0; j < K; ++j) out.particular(pivot_col[r], j) = w(r, C + j);

    std::vector<bool> is_pivot(C, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < C; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    out.kernel = Matrix<T>(C, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        out.kernel(free_cols[k], k) = scalar_ops<T>::one();
        for (std::size_t r = 0; r < rank; ++r)
            out.kernel(pivot_col[r], k) = -w(r, free_cols[k]);
    }
    return out;
}

/// Inverse of a square matrix; throws if singular.
template <class T>
Matrix<T> inverse(const Matrix<T>& a, double eps = 0.0) {
    if (a.rows() != a.cols()) throw dimension_error("inverse: not square");
    auto sol = linear_solve(a, Matrix<T>::identity(a.rows()), eps);
    if (!sol.consistent || sol.rank != a.rows())
        throw std::runtime_error("inverse: singular matrix");
    return sol.particular;
}

template <class T>
T determinant(const Matrix<T>& a, double eps = 0.0) {
    if (a.rows() != a.cols()) throw dimension_error("determinant: not square");
    const std::size_t n = a.rows();
    if (!scalar_ops<T>::exact) eps = (eps > 0 ? eps : 1e-12) * std::max(a.max_abs(), 1e-300);
    Matrix<T> w = a;
    T det = scalar_ops<T>::one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && scalar_ops<T>::is_zero(w(piv, col), eps)) ++piv;
        if (piv == n) return scalar_ops<T>::zero();
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w(col, j), w(piv, j));
            det = -det;
        }
        det *= w(col, col);
        T inv = scalar_ops<T>::one() / w(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (scalar_ops<T>::is_zero(w(i, col), eps)) continue;
            T f = w(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) w(i, j) -= f * w(col, j);
        }
    }
    return det;
}

}  // namespace swlab
