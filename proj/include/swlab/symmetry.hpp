#pragma once

#include <optional>
#include <string>
#include <utility>

#include "matrix.hpp"
#include "permutation.hpp"
#include "tensor.hpp"

namespace swlab {

struct constraint_violation : std::runtime_error {
    std::string equation;
    double residual;
    constraint_violation(std::string eq, double res)
        : std::runtime_error("constraint violated: " + eq +
                             " (residual " + std::to_string(res) + ")"),
          equation(std::move(eq)),
          residual(res) {}
};

struct verification_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Axiom check results; residuals are exact zeros in exact mode.
struct VerificationReport {
    bool involutive = false;
    bool qybe = false;
    bool site_conjugation = false;  // S^{23} = f^{12} f^{23} S^{12} f^{23} f^{12} on T^3
    double involutive_residual = 0.0;
    double qybe_residual = 0.0;
    double conjugation_residual = 0.0;

    bool all_ok() const { return involutive && qybe && site_conjugation; }
};

/// The flip x_k (x) x_l -> x_l (x) x_k as an n^2 x n^2 matrix.
template <class T>
Matrix<T> flip_matrix(int n) {
    Matrix<T> f(n * n, n * n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) f(l * n + k, k * n + l) = scalar_ops<T>::one();
    return f;
}

template <class T>
double residual_norm(const Matrix<T>& diff) {
    if constexpr (scalar_ops<T>::exact)
        return diff.is_zero() ? 0.0 : 1.0;
    else
        return diff.max_abs();
}

/**
 * Check the twist axioms on a candidate n^2 x n^2 operator: involutivity
 * S^2 = Id, the quantum Yang-Baxter equation on T^3(V), and the conjugation
 * identity S^{23} = f^{12} f^{23} S^{12} f^{23} f^{12} relating neighbouring
 * site operators through the ordinary flip f.
 */
template <class T>
VerificationReport verify_matrix(int n, const Matrix<T>& s, double tol = 1e-9) {
    if (s.rows() != static_cast<std::size_t>(n) * n || s.cols() != s.rows())
        throw dimension_error("verify: operator must be n^2 x n^2");
    VerificationReport rep;

    Matrix<T> id2 = Matrix<T>::identity(n * n);
    rep.involutive_residual = residual_norm(s * s - id2);
    rep.involutive = rep.involutive_residual <= (scalar_ops<T>::exact ? 0.0 : tol);

    Matrix<T> idn = Matrix<T>::identity(n);
    Matrix<T> s12 = kron(s, idn);
    Matrix<T> s23 = kron(idn, s);
    rep.qybe_residual = residual_norm(s12 * s23 * s12 - s23 * s12 * s23);
    rep.qybe = rep.qybe_residual <= (scalar_ops<T>::exact ? 0.0 : tol);

    Matrix<T> f = flip_matrix<T>(n);
    Matrix<T> f12 = kron(f, idn);
    Matrix<T> f23 = kron(idn, f);
    rep.conjugation_residual = residual_norm(s23 - f12 * f23 * s12 * f23 * f12);
    rep.site_conjugation = rep.conjugation_residual <= (scalar_ops<T>::exact ? 0.0 : tol);

    return rep;
}

enum class SymmetryKind { rank2, glued, super, custom };

inline const char* kind_name(SymmetryKind k) {
    switch (k) {
        case SymmetryKind::rank2: return "rank2";
        case SymmetryKind::glued: return "glued";
        case SymmetryKind::super: return "super";
        default: return "custom";
    }
}

/**
 * A verified involutive Yang-Baxter operator on V (x) V.
 *
 * Index convention, fixed once for the whole library: the matrix entry at
 * row (i,j), column (k,l) is the coefficient of x_i (x) x_j in S(x_k (x) x_l);
 * lower indices are outputs.  Construction refuses operators that fail
 * verify(), so downstream code may assume the axioms.
 */
template <class T>
class Symmetry {
  public:
    Symmetry(int n, Matrix<T> s, SymmetryKind kind = SymmetryKind::custom, double tol = 1e-9)
        : n_(n), s_(std::move(s)), kind_(kind), report_(verify_matrix(n, s_, tol)) {
        if (!report_.all_ok()) {
            std::string what = "symmetry rejected:";
            if (!report_.involutive) what += " involutivity";
            if (!report_.qybe) what += " qybe";
            if (!report_.site_conjugation) what += " conjugation";
            throw verification_failure(what);
        }
        ops_ = SiteOps<T>(n_, s_);
    }

    int dim() const { return n_; }
    const Matrix<T>& matrix() const { return s_; }
    SymmetryKind kind() const { return kind_; }
    const VerificationReport& report() const { return report_; }
    const SiteOps<T>& ops() const { return ops_; }

    /// rho_S(pi) on T^m(V) as an explicit matrix.
    Matrix<T> rho(int m, const Permutation& pi) const {
        std::int64_t N = tensor_dim(n_, m);
        if (N * N > static_cast<std::int64_t>(kKronEntryCap))
            throw cap_exceeded("rho: tensor power too large for a dense matrix");
        std::vector<int> word = pi.adjacent_word();
        Matrix<T> out(N, N);
        for (std::int64_t j = 0; j < N; ++j)
            for (auto& [i, x] : ops_.apply_word(m, word, sv_basis<T>(j)))
                out(i, j) = x;
        return out;
    }

  private:
    int n_;
    Matrix<T> s_;
    SymmetryKind kind_;
    VerificationReport report_;
    SiteOps<T> ops_;
};

/**
 * Rank-2 form S = Id - 2 u (x) v.  The contraction u.v = 1 makes S an
 * involution and u v u^t v^t = Id/4 is equivalent to the Yang-Baxter
 * equation; both are validated before the operator is accepted.
 */
template <class T>
Symmetry<T> build_rank2(const Matrix<T>& u, const Matrix<T>& v, double tol = 1e-9) {
    const int n = static_cast<int>(u.rows());
    if (u.cols() != u.rows() || v.rows() != u.rows() || v.cols() != u.rows() || n < 2)
        throw dimension_error("build_rank2: u, v must be square of equal size n >= 2");

    T dot = scalar_ops<T>::zero();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dot += u(i, j) * v(i, j);
    {
        Matrix<T> r(1, 1);
        r(0, 0) = dot - scalar_ops<T>::one();
        double res = residual_norm(r);
        if (res > (scalar_ops<T>::exact ? 0.0 : tol)) throw constraint_violation("u.v = 1", res);
    }
    {
        Matrix<T> lhs = u * v * u.transpose() * v.transpose();
        Matrix<T> target = Matrix<T>::identity(n) *
                           (scalar_ops<T>::one() / scalar_ops<T>::from_long(4));
        double res = residual_norm(lhs - target);
        if (res > (scalar_ops<T>::exact ? 0.0 : tol))
            throw constraint_violation("u v u^t v^t = Id/4", res);
    }

    Matrix<T> s = Matrix<T>::identity(n * n);
    T two = scalar_ops<T>::from_long(2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    s(i * n + j, k * n + l) -= two * u(i, j) * v(k, l);
    return Symmetry<T>(n, std::move(s), SymmetryKind::rank2, tol);
}

/**
 * The skew-diagonal two-parameter family on a three-dimensional space:
 * u_13 = a, u_22 = b, u_31 = -a/x, v^13 = x/(2a), v^22 = -1/(2b),
 * v^31 = -1/(2a), with x a root of x + 1/x = 3.  Both branches give a
 * symmetry with central determinant.
 */
inline std::pair<Matrix<QuadScalar>, Matrix<QuadScalar>> skew_diagonal_n3(
    const QuadScalar& a, const QuadScalar& b, bool plus_branch = true) {
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("skew_diagonal_n3: parameters must be nonzero");
    QuadScalar x(3, plus_branch ? 1 : -1, 2, 5);  // (3 +- sqrt 5)/2
    QuadScalar half = QuadScalar::rational(1, 2);
    Matrix<QuadScalar> u(3, 3), v(3, 3);
    u(0, 2) = a;
    u(1, 1) = b;
    u(2, 0) = -(a / x);
    v(0, 2) = x / (QuadScalar(2) * a);
    v(1, 1) = -(half / b);
    v(2, 0) = -(half / a);
    return {u, v};
}

/// The ordinary flip as a Symmetry (the classical case).
template <class T>
Symmetry<T> classical_flip(int n, double tol = 1e-9) {
    return Symmetry<T>(n, flip_matrix<T>(n), SymmetryKind::custom, tol);
}

/**
 * Gluing: the direct-sum space V1 (+) V2 with S restricted to each block and
 * the ordinary flip between them.  Poincare series multiply and ranks add.
 */
template <class T>
Symmetry<T> glue(const Symmetry<T>& s1, const Symmetry<T>& s2, double tol = 1e-9) {
    const int n1 = s1.dim(), n2 = s2.dim(), n = n1 + n2;
    auto block = [&](int i) { return i < n1 ? 0 : 1; };
    Matrix<T> s(n * n, n * n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            if (block(k) == 0 && block(l) == 0) {
                for (int i = 0; i < n1; ++i)
                    for (int j = 0; j < n1; ++j)
                        s(i * n + j, k * n + l) = s1.matrix()(i * n1 + j, k * n1 + l);
            } else if (block(k) == 1 && block(l) == 1) {
                for (int i = 0; i < n2; ++i)
                    for (int j = 0; j < n2; ++j)
                        s((n1 + i) * n + (n1 + j), k * n + l) =
                            s2.matrix()(i * n2 + j, (k - n1) * n2 + (l - n1));
            } else {
                s(l * n + k, k * n + l) = scalar_ops<T>::one();
            }
        }
    return Symmetry<T>(n, std::move(s), SymmetryKind::glued, tol);
}

/**
 * The two-dimensional symmetry S(x,x) = x(x)x + b y(x)y, S(x,y) = y(x)x,
 * S(y,x) = x(x)y, S(y,y) = -y(x)y.  Rational skew series (1+t)/(1-t); the
 * space splits into an even and an odd line only for b = 0.
 */
template <class T>
Symmetry<T> super_symmetry(const T& b, double tol = 1e-9) {
    Matrix<T> s(4, 4);
    s(0, 0) = scalar_ops<T>::one();   // x(x)x -> x(x)x ...
    s(3, 0) = b;                      // ... + b y(x)y
    s(2, 1) = scalar_ops<T>::one();   // x(x)y -> y(x)x
    s(1, 2) = scalar_ops<T>::one();   // y(x)x -> x(x)y
    s(3, 3) = -scalar_ops<T>::one();  // y(x)y -> -y(x)y
    return Symmetry<T>(2, std::move(s), SymmetryKind::super, tol);
}

/// Braid lift of the block transposition T^a (x) T^b -> T^b (x) T^a.
inline Permutation block_swap_perm(int a, int b) {
    std::vector<int> img(a + b);
    for (int i = 1; i <= a; ++i) img[i - 1] = i + b;
    for (int j = 1; j <= b; ++j) img[a + j - 1] = j;
    return Permutation(img);
}

}  // namespace swlab
