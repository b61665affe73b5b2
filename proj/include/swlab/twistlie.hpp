#pragma once

#include <optional>

#include "characters.hpp"
#include "poincare.hpp"
#include "schur.hpp"

namespace swlab {

struct ambiguity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * The symmetry extended to (V (+) V*)^(x)2 and to (End V)^(x)2.
 *
 * Basis order on W = V (+) V*: x_1..x_n then x^1..x^n, with the evaluation
 * pairing <x_i, x^j> = delta.  The three unknown blocks are obtained by
 * solving linear constraint systems (pairing invariance for V(x)V*,
 * involutivity for V*(x)V, invariance of the canonical element for
 * V*(x)V*), each required to have a unique solution; the assembled operator
 * is then re-verified from scratch.
 */
template <class T>
struct ExtendedSymmetry {
    int n = 0;
    Matrix<T> vv, vvs, vsv, vsvs;  // blocks in the library's row = output layout
    std::optional<Symmetry<T>> big;
    Matrix<T> s_end;  // restriction of the block swap to (V (x) V*)^(x)2
    bool pairing_ok = false;
    bool invariant_element_ok = false;
};

template <class T>
ExtendedSymmetry<T> crossings(const Symmetry<T>& s, double eps = 0.0, double tol = 1e-9) {
    const int n = s.dim();
    const int n2 = n * n;
    ExtendedSymmetry<T> out;
    out.n = n;
    out.vv = s.matrix();

    // Pairing invariance (ev (x) Id) S^{23} S^{12} = Id (x) ev on V (x) V (x) V*
    // pins the V (x) V* block: with Ahat[(i,j),(l,c)] := A[(i,l),(j,c)] it reads
    // S^T Ahat = Id.
    auto sol_a = linear_solve(s.matrix().transpose(), Matrix<T>::identity(n2), eps);
    if (!sol_a.consistent || sol_a.kernel.cols() != 0)
        throw ambiguity_error("crossings: pairing constraint is not uniquely solvable");
    out.vvs = Matrix<T>(n2, n2);
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l)
            for (int j = 0; j < n; ++j)
                for (int c = 0; c < n; ++c)
                    out.vvs(i * n + l, j * n + c) = sol_a.particular(i * n + j, l * n + c);

    // Involutivity of the assembled operator forces the V* (x) V block to be
    // the inverse of the V (x) V* block; solvability = invertible by column.
    auto sol_b = linear_solve(out.vvs, Matrix<T>::identity(n2), eps);
    if (!sol_b.consistent || sol_b.kernel.cols() != 0)
        throw ambiguity_error("crossings: operator is not invertible by column");
    out.vsv = sol_b.particular;

    // Invariance of the canonical element e = sum_i x^i (x) x_i crossed with
    // y in V*: sum_{l,i} D[(k,l),(a,i)] B[(s,t),(l,i)] = [k==s][t==a].
    {
        // unknown per fixed (k,a): the vector d[(l,i)] = D[(k,l),(a,i)]
        Matrix<T> rhs_cols(n2, n2);
        for (int k = 0; k < n; ++k)
            for (int a = 0; a < n; ++a)
                for (int ss = 0; ss < n; ++ss)
                    for (int t = 0; t < n; ++t)
                        rhs_cols(ss * n + t, k * n + a) =
                            (k == ss && t == a) ? scalar_ops<T>::one() : scalar_ops<T>::zero();
        auto sol_d = linear_solve(out.vsv, rhs_cols, eps);
        if (!sol_d.consistent || sol_d.kernel.cols() != 0)
            throw ambiguity_error("crossings: dual-dual block is not uniquely determined");
        out.vsvs = Matrix<T>(n2, n2);
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
                for (int a = 0; a < n; ++a)
                    for (int i = 0; i < n; ++i)
                        out.vsvs(k * n + l, a * n + i) = sol_d.particular(l * n + i, k * n + a);
    }

    // assemble the big operator on W (x) W, W = V (+) V*
    const int N = 2 * n;
    Matrix<T> big(N * N, N * N);
    auto put = [&](const Matrix<T>& block, int out1, int out2, int in1, int in2) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l)
                        big((i + out1 * n) * N + (j + out2 * n), (k + in1 * n) * N + (l + in2 * n)) =
                            block(i * n + j, k * n + l);
    };
    put(out.vv, 0, 0, 0, 0);
    put(out.vvs, 1, 0, 0, 1);  // V (x) V* -> V* (x) V
    put(out.vsv, 0, 1, 1, 0);  // V* (x) V -> V (x) V*
    put(out.vsvs, 1, 1, 1, 1);
    out.big.emplace(N, std::move(big), SymmetryKind::custom, tol);

    // re-check pairing invariance on V (x) V (x) V* directly
    {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                for (int c = 0; c < n && ok; ++c) {
                    // basis x_a (x) x_b (x) x^c of W^3
                    std::int64_t idx = (static_cast<std::int64_t>(a) * N + b) * N + (n + c);
                    auto w = out.big->ops().apply_site(3, 1, sv_basis<T>(idx), eps);
                    w = out.big->ops().apply_site(3, 2, w, eps);
                    // contract ev on factors 1,2: keep terms x_i (x) x^i (x) x_l
                    std::vector<T> lhs(n, scalar_ops<T>::zero());
                    for (auto& [id, val] : w) {
                        int f3 = static_cast<int>(id % N);
                        int f2 = static_cast<int>((id / N) % N);
                        int f1 = static_cast<int>(id / (N * N));
                        if (f1 < n && f2 >= n && f1 == f2 - n && f3 < n) lhs[f3] += val;
                    }
                    for (int l = 0; l < n; ++l) {
                        T expect = (b == c && a == l) ? scalar_ops<T>::one() : scalar_ops<T>::zero();
                        Matrix<T> r(1, 1);
                        r(0, 0) = lhs[l] - expect;
                        if (residual_norm(r) > (scalar_ops<T>::exact ? 0.0 : tol)) ok = false;
                    }
                }
        out.pairing_ok = ok;
    }

    // invariant element: S(y (x) e) = e (x) y for every basis y of W
    {
        bool ok = true;
        SparseVec<T> canon;
        for (int i = 0; i < n; ++i)
            canon.emplace_back(static_cast<std::int64_t>(n + i) * N + i, scalar_ops<T>::one());
        sv_compress(canon);
        for (int y = 0; y < N && ok; ++y) {
            SparseVec<T> in;
            for (auto& [id, val] : canon) in.emplace_back(y * N * N + id, val);
            sv_compress(in);
            auto w = out.big->ops().apply_word(3, {1, 2}, in, eps);  // move y past the pair
            SparseVec<T> expect;
            for (auto& [id, val] : canon) expect.emplace_back(id * N + y, val);
            sv_compress(expect);
            sv_axpy(w, -scalar_ops<T>::one(), expect, eps);
            if (!w.empty()) ok = false;
        }
        out.invariant_element_ok = ok;
    }

    // restriction of the block swap on W^(x)4 to the End-End sector
    Matrix<T> sector(n2 * n2, n2 * n2);
    {
        Permutation swap22 = block_swap_perm(2, 2);
        auto sector_index = [&](std::int64_t id, int& i, int& j, int& k, int& l) {
            int f4 = static_cast<int>(id % N);
            int f3 = static_cast<int>((id / N) % N);
            int f2 = static_cast<int>((id / (N * N)) % N);
            int f1 = static_cast<int>(id / (N * N * N));
            if (f1 >= n || f2 < n || f3 >= n || f4 < n) return false;
            i = f1;
            j = f2 - n;
            k = f3;
            l = f4 - n;
            return true;
        };
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        std::int64_t id = ((static_cast<std::int64_t>(i) * N + (n + j)) * N + k) * N +
                                          (n + l);
                        auto w = out.big->ops().apply_perm(4, swap22, sv_basis<T>(id), eps);
                        for (auto& [oid, val] : w) {
                            int a, b, c, d;
                            if (!sector_index(oid, a, b, c, d))
                                throw std::runtime_error(
                                    "crossings: block swap leaves the End sector");
                            sector((a * n + b) * n2 + (c * n + d),
                                   (i * n + j) * n2 + (k * n + l)) = val;
                        }
                    }
    }

    // Express the swap in the operator basis e_i^j = x_i (x) y^j, where
    // y^j = B^j_k x^k is the left-dual basis (the one whose pairing with V
    // is the Kronecker delta); in the raw x^k coordinates neither the
    // identity of End V nor the composition braids correctly.
    {
        auto duals = dual_tensors<T>(s, nullptr, eps);
        auto m1 = kron(Matrix<T>::identity(n), duals.B.transpose());
        auto m4 = kron(m1, m1);
        out.s_end = inverse(m4, eps) * sector * m4;
    }
    return out;
}

/**
 * Structure data of gl(V_S) and sl(V_S): the bracket mu (Id - S_End) on the
 * basis e_i^j = x_i (x) x^j, the trace vector, and the traceless projection.
 * All twisted Lie algebra axioms are checked exactly; any failure throws.
 */
template <class T>
struct LieData {
    int n = 0, p = 0;
    Matrix<T> bracket;        // n^2 rows, n^4 columns
    std::vector<T> trace;     // categorical trace <,>S; tr(Id) = p
    std::vector<T> trace_det; // determinant-side C_det[j][i], = trace / p on fixtures
    bool traces_agree = false;  // trace == p * trace_det
    Matrix<T> sl_basis;       // column (i n + j) = f_i^j in the e-basis
    bool skew_ok = false, jacobi_ok = false, invariance_ok = false;
    bool tra_ok = false;      // tr o [ , ] = 0
    bool f_sum_ok = false;    // f_i^i = 0
};

template <class T>
LieData<T> lie_data(const ExtendedSymmetry<T>& ext, const DualTensors<T>& duals,
                    const DetPair<T>& dp, double eps = 0.0, double tol = 1e-9) {
    const int n = ext.n, n2 = n * n;
    LieData<T> out;
    out.n = n;
    out.p = dp.p;

    // bracket = composition (Id - S_End); composition e_i^j e_k^l = [j==k] e_i^l
    Matrix<T> mu(n2, n2 * n2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (j == k)
                        mu(i * n + l, (i * n + j) * n2 + (k * n + l)) = scalar_ops<T>::one();
    out.bracket = mu * (Matrix<T>::identity(n2 * n2) - ext.s_end);

    SiteOps<T> end_ops(n2, ext.s_end);
    auto bracket_cols = [&](const SparseVec<T>& v) {
        // apply the bracket to a sparse vector on U (x) U, U = End V
        SparseVec<T> r;
        for (auto& [id, val] : v) {
            for (int row = 0; row < n2; ++row) {
                const T& c = out.bracket(row, id);
                if (!scalar_ops<T>::is_zero(c, eps)) r.emplace_back(row, c * val);
            }
        }
        sv_compress(r, eps);
        return r;
    };

    // skew-symmetry [ , ](Id + S_End) = 0
    {
        bool ok = true;
        for (int c = 0; c < n2 * n2 && ok; ++c) {
            auto v = sv_basis<T>(c);
            auto w = end_ops.apply_site(2, 1, v, eps);
            sv_axpy(w, scalar_ops<T>::one(), v, eps);
            if (!bracket_cols(w).empty()) ok = false;
        }
        out.skew_ok = ok;
    }

    // twisted Jacobi [ , ][ , ]^{12}(Id + S^{12}S^{23} + S^{23}S^{12}) = 0
    {
        bool ok = true;
        auto bracket12 = [&](const SparseVec<T>& v) {
            SparseVec<T> r;
            for (auto& [id, val] : v) {
                std::int64_t c3 = id % n2, c12 = id / n2;
                for (int row = 0; row < n2; ++row) {
                    const T& c = out.bracket(row, c12);
                    if (!scalar_ops<T>::is_zero(c, eps))
                        r.emplace_back(static_cast<std::int64_t>(row) * n2 + c3, c * val);
                }
            }
            sv_compress(r, eps);
            return r;
        };
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(n2) * n2 * n2 && ok; ++c) {
            auto v = sv_basis<T>(c);
            auto w = v;
            sv_axpy(w, scalar_ops<T>::one(),
                    end_ops.apply_site(3, 1, end_ops.apply_site(3, 2, v, eps), eps), eps);
            sv_axpy(w, scalar_ops<T>::one(),
                    end_ops.apply_site(3, 2, end_ops.apply_site(3, 1, v, eps), eps), eps);
            if (!bracket_cols(bracket12(w)).empty()) ok = false;
        }
        out.jacobi_ok = ok;
    }

    // invariance of the bracket under crossing from either side
    {
        bool ok = true;
        auto bracket12 = [&](const SparseVec<T>& v) {
            SparseVec<T> r;
            for (auto& [id, val] : v) {
                std::int64_t c3 = id % n2, c12 = id / n2;
                for (int row = 0; row < n2; ++row) {
                    const T& c = out.bracket(row, c12);
                    if (!scalar_ops<T>::is_zero(c, eps))
                        r.emplace_back(static_cast<std::int64_t>(row) * n2 + c3, c * val);
                }
            }
            sv_compress(r, eps);
            return r;
        };
        auto bracket23 = [&](const SparseVec<T>& v) {
            SparseVec<T> r;
            for (auto& [id, val] : v) {
                std::int64_t c23 = id % (static_cast<std::int64_t>(n2) * n2), c1 = id / (static_cast<std::int64_t>(n2) * n2);
                for (int row = 0; row < n2; ++row) {
                    const T& c = out.bracket(row, c23);
                    if (!scalar_ops<T>::is_zero(c, eps))
                        r.emplace_back(c1 * n2 + row, c * val);
                }
            }
            sv_compress(r, eps);
            return r;
        };
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(n2) * n2 * n2 && ok; ++c) {
            auto v = sv_basis<T>(c);
            // crossing a right factor over the bracketed pair
            auto lhs = end_ops.apply_site(2, 1, bracket12(v), eps);
            auto rhs = bracket23(end_ops.apply_site(3, 1, end_ops.apply_site(3, 2, v, eps), eps));
            sv_axpy(lhs, -scalar_ops<T>::one(), rhs, eps);
            if (!lhs.empty()) ok = false;
            // crossing a left factor
            auto lhs2 = end_ops.apply_site(2, 1, bracket23(v), eps);
            auto rhs2 = bracket12(end_ops.apply_site(3, 2, end_ops.apply_site(3, 1, v, eps), eps));
            sv_axpy(lhs2, -scalar_ops<T>::one(), rhs2, eps);
            if (!lhs2.empty()) ok = false;
        }
        out.invariance_ok = ok;
    }

    // trace vectors.  The categorical trace tr = <,> S: expand
    // e_i^j = x_i (x) y^j with y^j = B^j_k x^k, cross with the V V* block,
    // close with the left pairing <x^a, x_b> = C_a^b (the inverse Gram of y).
    // It is the one normalized to tr(Id) = p, so the sl projection uses it;
    // the determinant-side C_det reproduces it up to the factor p.
    out.trace.assign(n2, scalar_ops<T>::zero());
    out.trace_det.assign(n2, scalar_ops<T>::zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            out.trace_det[i * n + j] = duals.Cdet(j, i);
            T acc = scalar_ops<T>::zero();
            for (int k = 0; k < n; ++k) {
                const T& yc = duals.B(j, k);
                if (scalar_ops<T>::is_zero(yc, eps)) continue;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        acc += yc * ext.vvs(a * n + b, i * n + k) * duals.C(a, b);
            }
            out.trace[i * n + j] = acc;
        }
    {
        bool agree = true;
        T p_scalar = scalar_ops<T>::from_long(dp.p);
        for (int c = 0; c < n2; ++c) {
            Matrix<T> r(1, 1);
            r(0, 0) = out.trace[c] - p_scalar * out.trace_det[c];
            if (residual_norm(r) > (scalar_ops<T>::exact ? 0.0 : tol)) agree = false;
        }
        out.traces_agree = agree;
    }

    // tr o [ , ] = 0
    {
        bool ok = true;
        for (int c = 0; c < n2 * n2 && ok; ++c) {
            T acc = scalar_ops<T>::zero();
            for (int row = 0; row < n2; ++row) acc += out.trace[row] * out.bracket(row, c);
            Matrix<T> r(1, 1);
            r(0, 0) = acc;
            if (residual_norm(r) > (scalar_ops<T>::exact ? 0.0 : tol)) ok = false;
        }
        out.tra_ok = ok;
    }

    // sl projection f_i^j = e_i^j - p^{-1} t(e_i^j) Id
    out.sl_basis = Matrix<T>::identity(n2);
    {
        T pinv = scalar_ops<T>::one() / scalar_ops<T>::from_long(dp.p);
        for (int c = 0; c < n2; ++c)
            for (int a = 0; a < n; ++a)
                out.sl_basis(a * n + a, c) -= pinv * out.trace[c];
        // sum over i of f_i^i vanishes
        std::vector<T> diag_sum(n2, scalar_ops<T>::zero());
        for (int i = 0; i < n; ++i)
            for (int row = 0; row < n2; ++row) diag_sum[row] += out.sl_basis(row, i * n + i);
        bool ok = true;
        for (int row = 0; row < n2; ++row) {
            Matrix<T> r(1, 1);
            r(0, 0) = diag_sum[row];
            if (residual_norm(r) > (scalar_ops<T>::exact ? 0.0 : tol)) ok = false;
        }
        out.f_sum_ok = ok;
    }
    return out;
}

/// The Casimir on T^m(V): m p Id + 2 sum_{i<j} rho_S((i j)).
template <class T>
SparseVec<T> casimir_apply(const Symmetry<T>& s, int m, int p, const SparseVec<T>& v,
                           double eps = 0.0) {
    SparseVec<T> out = v;
    sv_scale(out, scalar_ops<T>::from_long(static_cast<long>(m) * p));
    T two = scalar_ops<T>::from_long(2);
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            Permutation t = Permutation::transposition(m, i, j);
            sv_axpy(out, two, s.ops().apply_perm(m, t, v, eps), eps);
        }
    return out;
}

template <class T>
Matrix<T> casimir_matrix(const Symmetry<T>& s, int m, int p) {
    std::int64_t N = tensor_dim(s.dim(), m);
    if (N * N > static_cast<std::int64_t>(kKronEntryCap))
        throw cap_exceeded("casimir_matrix: tensor power too large");
    Matrix<T> out(N, N);
    for (std::int64_t j = 0; j < N; ++j)
        for (auto& [i, x] : casimir_apply(s, m, p, sv_basis<T>(j)))
            out(i, j) = x;
    return out;
}

/// Restriction of the Casimir to V_lambda: verifies it is the scalar
/// m p + 2 gamma_lambda on the whole component.
template <class T>
struct CasimirScalar {
    T value;
    bool scalar_ok = false;
    bool formula_ok = false;  // value = m p + 2 gamma_lambda
};

template <class T>
CasimirScalar<T> casimir_on_component(const Symmetry<T>& s, const Partition& lam, int p,
                                      double eps = 0.0, double tol = 1e-9) {
    const int m = lam.weight();
    auto basis = schur_basis(s, lam, eps);
    if (basis.empty()) throw std::invalid_argument("casimir_on_component: V_lambda is zero");
    CasimirScalar<T> out{scalar_ops<T>::zero(), true, false};

    auto first = casimir_apply(s, m, p, basis[0], eps);
    // scalar from the leading coordinate of the first basis vector
    std::int64_t lead = basis[0].front().first;
    T scal = scalar_ops<T>::zero();
    for (auto& [i, x] : first)
        if (i == lead) scal = x / basis[0].front().second;
    out.value = scal;
    for (const auto& b : basis) {
        auto w = casimir_apply(s, m, p, b, eps);
        SparseVec<T> expect = b;
        sv_scale(expect, scal);
        sv_axpy(w, -scalar_ops<T>::one(), expect, eps);
        if (!w.empty()) out.scalar_ok = false;
    }
    QuadScalar gamma = gamma_eigenvalue(lam);
    T expect;
    if constexpr (scalar_ops<T>::exact)
        expect = QuadScalar(static_cast<long>(m) * p) + QuadScalar(2) * gamma;
    else
        expect = static_cast<double>(m) * p + 2.0 * gamma.to_double();
    Matrix<T> r(1, 1);
    r(0, 0) = out.value - expect;
    out.formula_ok = residual_norm(r) <= (scalar_ops<T>::exact ? 0.0 : tol);
    return out;
}

/// Eigenvalue of the traceless Casimir on V_lambda: m p + 2 gamma - m^2/p.
inline QuadScalar casimir_sl_eigenvalue(const Partition& lam, int p) {
    if (p < 2) throw std::invalid_argument("casimir_sl_eigenvalue: p >= 2");
    const long m = lam.weight();
    QuadScalar gamma = lam.weight() >= 2 ? gamma_eigenvalue(lam) : QuadScalar(0);
    return QuadScalar(m * p) + QuadScalar(2) * gamma -
           QuadScalar::rational(mpz_class(m) * m, p);
}

/**
 * Action of X = a_i^j e_j^i on the determinant via the alternating-sum
 * operator Q = Id - S^{12} + S^{23}S^{12} - ...: apply X to the first
 * factor, push through Q, project back to the top skew component, and read
 * off the scalar.  grid(k, j) is the coefficient of x_j in X(x_k).
 */
template <class T>
T act_on_det(const Symmetry<T>& s, const Matrix<T>& grid, const DetPair<T>& dp,
             double eps = 0.0) {
    const int n = s.dim(), p = dp.p;
    const std::int64_t Nrest = tensor_dim(n, p - 1);
    // w = (X (x) Id^{p-1}) v
    SparseVec<T> w;
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(dp.v.size()); ++idx) {
        const T& val = dp.v[idx];
        if (scalar_ops<T>::is_zero(val, eps)) continue;
        std::int64_t first = idx / Nrest, rest = idx % Nrest;
        for (int j = 0; j < n; ++j) {
            const T& g = grid(static_cast<int>(first), j);
            if (!scalar_ops<T>::is_zero(g, eps)) w.emplace_back(j * Nrest + rest, g * val);
        }
    }
    sv_compress(w, eps);

    // z = Q w
    SparseVec<T> z = w, chain = w;
    for (int j = 1; j <= p - 1; ++j) {
        chain = s.ops().apply_site(p, j, chain, eps);
        T c = (j % 2 == 1) ? -scalar_ops<T>::one() : scalar_ops<T>::one();
        sv_axpy(z, c, chain, eps);
    }
    auto y = s.ops().apply_projector(p, p, true, z, eps);

    // y must be proportional to v
    T scal = scalar_ops<T>::zero();
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(dp.v.size()); ++idx) {
        if (scalar_ops<T>::is_zero(dp.v[idx], eps)) continue;
        auto it = std::lower_bound(y.begin(), y.end(), idx,
                                   [](const auto& pr, std::int64_t l) { return pr.first < l; });
        if (it != y.end() && it->first == idx) scal = it->second / dp.v[idx];
        break;
    }
    SparseVec<T> expect;
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(dp.v.size()); ++idx)
        if (!scalar_ops<T>::is_zero(dp.v[idx], eps)) expect.emplace_back(idx, dp.v[idx] * scal);
    sv_compress(expect, eps);
    sv_axpy(expect, -scalar_ops<T>::one(), y, eps);
    if (!expect.empty())
        throw std::runtime_error("act_on_det: image is not proportional to the determinant");
    return scal;
}

/// The determinant-side trace p * sum grid(i,j) C_det(i,j) that act_on_det
/// must reproduce.
template <class T>
T det_trace_prediction(const Matrix<T>& grid, const Matrix<T>& cdet, int p) {
    T acc = scalar_ops<T>::zero();
    for (std::size_t i = 0; i < grid.rows(); ++i)
        for (std::size_t j = 0; j < grid.cols(); ++j) acc += grid(i, j) * cdet(i, j);
    return acc * scalar_ops<T>::from_long(p);
}

}  // namespace swlab
