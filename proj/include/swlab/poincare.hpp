#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "symmetry.hpp"

namespace swlab {

/// Full (anti)symmetrizer P_{+-}^k on T^k(V) as a dense matrix.
template <class T>
Matrix<T> projector(const Symmetry<T>& s, int k, bool minus) {
    std::int64_t N = tensor_dim(s.dim(), k);
    if (N * N > static_cast<std::int64_t>(kKronEntryCap))
        throw cap_exceeded("projector: tensor power too large");
    Matrix<T> out(N, N);
    for (std::int64_t j = 0; j < N; ++j)
        for (auto& [i, x] : s.ops().apply_projector(k, k, minus, sv_basis<T>(j)))
            out(i, j) = x;
    return out;
}

namespace detail {

/// Rank of P_{+-}^k by sparse elimination over its columns.
template <class T>
std::int64_t projector_rank_elim(const Symmetry<T>& s, int k, bool minus, double eps) {
    std::int64_t N = tensor_dim(s.dim(), k);
    SpanBuilder<T> span(eps);
    for (std::int64_t j = 0; j < N; ++j)
        span.offer(s.ops().apply_group_sum(k, k, minus, sv_basis<T>(j), eps));
    return static_cast<std::int64_t>(span.rank());
}

/// Rank of P_{+-}^k as its exact trace; the symmetrizer is idempotent
/// because rho_S is a representation, so trace = rank.
template <class T>
std::int64_t projector_rank_trace(const Symmetry<T>& s, int k, bool minus, double eps) {
    std::int64_t N = tensor_dim(s.dim(), k);
    T acc = scalar_ops<T>::zero();
    for (std::int64_t j = 0; j < N; ++j) {
        auto col = s.ops().apply_group_sum(k, k, minus, sv_basis<T>(j), eps);
        auto it = std::lower_bound(col.begin(), col.end(), j,
                                   [](const auto& p, std::int64_t l) { return p.first < l; });
        if (it != col.end() && it->first == j) acc += it->second;
    }
    long fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    double val = scalar_ops<T>::to_double(acc) / static_cast<double>(fact);
    auto r = static_cast<std::int64_t>(std::llround(val));
    if constexpr (scalar_ops<T>::exact) {
        if (acc != scalar_ops<T>::from_long(fact) * scalar_ops<T>::from_long(r))
            throw std::runtime_error("projector trace is not an integer");
    }
    return r;
}

}  // namespace detail

/// dim of the degree-k component of the (anti)symmetric algebra.
template <class T>
std::int64_t wedge_dim(const Symmetry<T>& s, int k, bool minus, double eps = 0.0,
                       std::int64_t elim_cap = 1024) {
    if (k == 0) return 1;
    if (k == 1) return s.dim();
    std::int64_t N = tensor_dim(s.dim(), k);
    if (N <= elim_cap) return detail::projector_rank_elim(s, k, minus, eps);
    return detail::projector_rank_trace(s, k, minus, eps);
}

enum class SeriesClass { even, odd, rational, undetermined };

inline const char* series_class_name(SeriesClass c) {
    switch (c) {
        case SeriesClass::even: return "even";
        case SeriesClass::odd: return "odd";
        case SeriesClass::rational: return "rational";
        default: return "undetermined";
    }
}

/**
 * Skew and symmetric Poincare series coefficients up to degree K, together
 * with the classification of the skew series: terminating monic polynomial
 * (even, of rank p), terminating monic symmetric side (odd), or rational
 * with a fitted minimal recurrence (bi-rank).
 */
struct PoincareData {
    std::vector<std::int64_t> minus, plus;  // k = 0..K
    SeriesClass cls = SeriesClass::undetermined;
    int rank = 0;                  // p for even
    std::pair<int, int> birank{0, 0};
    std::vector<QuadScalar> numer, denom;  // fitted P_-(t) = numer/denom, constant terms 1
    bool pp_ok = false;            // P_+(t) P_-(-t) = 1 through degree K
    std::vector<QuadScalar> alpha_exact;   // populated for p <= 2 (plus rational roots)
    std::vector<double> alpha_float;
};

namespace detail {

/// Minimal (deg A, deg B) with B * c = A, B(0) = 1, valid through c_K.
/// Returns false if no recurrence of total degree <= K fits.
inline bool fit_rational(const std::vector<std::int64_t>& c, std::vector<QuadScalar>& numer,
                         std::vector<QuadScalar>& denom) {
    const int K = static_cast<int>(c.size()) - 1;
    for (int total = 0; total <= K; ++total) {
        for (int dB = 0; dB <= total; ++dB) {
            int dA = total - dB;
            // unknowns b_1..b_dB; equations sum_{i=0}^{dB} b_i c_{k-i} = 0, k = dA+1..K
            int eqs = K - dA;
            if (eqs < dB) continue;  // underdetermined, skip
            Matrix<QuadScalar> A(eqs, dB), rhs(eqs, 1);
            for (int e = 0; e < eqs; ++e) {
                int k = dA + 1 + e;
                rhs(e, 0) = QuadScalar(-c[k]);
                for (int i = 1; i <= dB; ++i)
                    A(e, i - 1) = QuadScalar(k - i >= 0 ? c[k - i] : 0);
            }
            auto sol = linear_solve(A, rhs);
            if (!sol.consistent) continue;
            denom.assign(dB + 1, QuadScalar(0));
            denom[0] = QuadScalar(1);
            for (int i = 1; i <= dB; ++i) denom[i] = sol.particular(i - 1, 0);
            numer.assign(dA + 1, QuadScalar(0));
            for (int k = 0; k <= dA; ++k)
                for (int i = 0; i <= std::min(k, dB); ++i)
                    numer[k] += denom[i] * QuadScalar(c[k - i]);
            return true;
        }
    }
    return false;
}

}  // namespace detail

template <class T>
PoincareData poincare_series(const Symmetry<T>& s, int K, double eps = 0.0,
                             std::int64_t elim_cap = 1024) {
    if (K < 2) throw std::invalid_argument("poincare_series: K >= 2 required");
    PoincareData out;
    for (int k = 0; k <= K; ++k) {
        out.minus.push_back(wedge_dim(s, k, true, eps, elim_cap));
        out.plus.push_back(wedge_dim(s, k, false, eps, elim_cap));
    }

    out.pp_ok = true;
    for (int k = 1; k <= K; ++k) {
        std::int64_t acc = 0;
        for (int j = 0; j <= k; ++j)
            acc += (j % 2 ? -1 : 1) * out.minus[j] * out.plus[k - j];
        if (acc != 0) out.pp_ok = false;
    }

    auto last_nonzero = [](const std::vector<std::int64_t>& v) {
        int p = -1;
        for (int k = 0; k < static_cast<int>(v.size()); ++k)
            if (v[k] != 0) p = k;
        return p;
    };

    // Interior zeros cannot occur (each graded piece is generated in degree
    // one), so an observed zero tail is conclusive termination.
    int pm = last_nonzero(out.minus);
    int pp = last_nonzero(out.plus);
    if (pm < K && out.minus[pm] == 1) {
        out.cls = SeriesClass::even;
        out.rank = pm;
        out.birank = {pm, 0};
        out.numer.clear();
        for (int k = 0; k <= pm; ++k) out.numer.push_back(QuadScalar(out.minus[k]));
        out.denom = {QuadScalar(1)};
    } else if (pp < K && out.plus[pp] == 1) {
        out.cls = SeriesClass::odd;
        out.birank = {0, pp};
    } else {
        std::vector<QuadScalar> numer, denom;
        if (detail::fit_rational(out.minus, numer, denom)) {
            int dA = static_cast<int>(numer.size()) - 1;
            int dB = static_cast<int>(denom.size()) - 1;
            while (dA > 0 && numer[dA].is_zero()) --dA;
            numer.resize(dA + 1);
            // never guess from too little data
            if (K + 1 >= 2 * (dA + dB) + 2) {
                out.cls = SeriesClass::rational;
                out.birank = {dA, dB};
                out.numer = std::move(numer);
                out.denom = std::move(denom);
            }
        }
    }

    if (out.cls == SeriesClass::even) {
        if (out.rank <= 2) {
            // roots of t^2 + c1 t + 1 (or trivial cases), exact
            if (out.rank == 0) {
                // nothing
            } else if (out.rank == 1) {
                out.alpha_exact = {QuadScalar(1)};
            } else {
                long c1 = out.minus[1];
                long disc = c1 * c1 - 4;
                auto [sq, d] = squarefree_split(static_cast<unsigned long>(disc));
                QuadScalar root = d <= 1 ? QuadScalar(sq * (d == 0 ? 0 : 1))
                                         : QuadScalar(0, sq, 1, d);
                QuadScalar half = QuadScalar::rational(1, 2);
                out.alpha_exact = {(QuadScalar(c1) + root) * half,
                                   (QuadScalar(c1) - root) * half};
            }
            for (auto& a : out.alpha_exact) out.alpha_float.push_back(a.to_double());
        }
    }
    return out;
}

/// Numeric roots of the even skew polynomial, as the alpha multiset with
/// prod alpha = 1: Durand-Kerner on prod (1 + alpha t), Newton polish,
/// then reciprocal pairing to restore the palindromic symmetry.
std::vector<double> roots_alpha_numeric(const std::vector<std::int64_t>& coeffs);

inline std::vector<double> roots_alpha(const PoincareData& data) {
    if (data.cls != SeriesClass::even)
        throw std::invalid_argument("roots_alpha: series is not even");
    if (!data.alpha_float.empty()) return data.alpha_float;
    std::vector<std::int64_t> c(data.minus.begin(), data.minus.begin() + data.rank + 1);
    return roots_alpha_numeric(c);
}

inline std::vector<double> roots_alpha_numeric(const std::vector<std::int64_t>& coeffs) {
    const int p = static_cast<int>(coeffs.size()) - 1;
    // roots of sum c_k t^k; alpha_i = -1/t_i
    std::vector<std::complex<double>> z(p), cpoly(p + 1);
    for (int k = 0; k <= p; ++k) cpoly[k] = static_cast<double>(coeffs[k]);
    for (int i = 0; i < p; ++i)
        z[i] = std::polar(0.4 + 0.9 * i / p, 0.9 * i + 0.5);  // standard spread start
    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = 0;
        for (int k = p; k >= 0; --k) acc = acc * x + cpoly[k];
        return acc;
    };
    for (int it = 0; it < 500; ++it) {
        double shift = 0;
        for (int i = 0; i < p; ++i) {
            std::complex<double> denom = cpoly[p];
            for (int j = 0; j < p; ++j)
                if (j != i) denom *= z[i] - z[j];
            std::complex<double> dz = eval(z[i]) / denom;
            z[i] -= dz;
            shift = std::max(shift, std::abs(dz));
        }
        if (shift < 1e-15) break;
    }
    std::vector<double> alpha;
    for (auto& t : z) {
        std::complex<double> a = -1.0 / t;
        alpha.push_back(a.real());
    }
    std::sort(alpha.begin(), alpha.end());
    // reciprocal pairing: alpha_i * alpha_{p+1-i} = 1 for a reciprocal polynomial
    for (int i = 0, j = p - 1; i < j; ++i, --j) {
        double g = std::sqrt(alpha[i] * alpha[j]);
        alpha[i] /= g;
        alpha[j] /= g;
    }
    return alpha;
}

/**
 * Generator v of the one-dimensional top skew component Im P_-^p and its
 * dual u with P_-^p = v u^T and u.v = 1.  Gauge: the first nonzero
 * coordinate of v (in flattened lexicographic order) is 1.
 */
template <class T>
struct DetPair {
    int p = 0;
    std::vector<T> v, u;  // length n^p
};

template <class T>
DetPair<T> determinant_pair(const Symmetry<T>& s, int p, double eps = 0.0) {
    const std::int64_t N = tensor_dim(s.dim(), p);
    DetPair<T> out;
    out.p = p;
    out.v.assign(N, scalar_ops<T>::zero());
    out.u.assign(N, scalar_ops<T>::zero());

    std::vector<SparseVec<T>> cols(N);
    SpanBuilder<T> span(eps);
    for (std::int64_t j = 0; j < N; ++j) {
        cols[j] = s.ops().apply_projector(p, p, true, sv_basis<T>(j), eps);
        span.offer(cols[j]);
    }
    if (span.rank() != 1)
        throw std::runtime_error("determinant_pair: top skew projector has rank " +
                                 std::to_string(span.rank()) + ", expected 1");

    // gauge: scale the one basis column so its first nonzero coordinate is 1
    auto basis = span.basis()[0];  // already normalized to leading coefficient 1
    std::int64_t lead = basis.front().first;
    for (auto& [i, x] : basis) out.v[i] = x;
    for (std::int64_t j = 0; j < N; ++j) {
        auto it = std::lower_bound(cols[j].begin(), cols[j].end(), lead,
                                   [](const auto& pr, std::int64_t l) { return pr.first < l; });
        if (it != cols[j].end() && it->first == lead) out.u[j] = it->second;
    }

    T dot = scalar_ops<T>::zero();
    for (std::int64_t j = 0; j < N; ++j) dot += out.u[j] * out.v[j];
    Matrix<T> r(1, 1);
    r(0, 0) = dot - scalar_ops<T>::one();
    if (residual_norm(r) > (scalar_ops<T>::exact ? 0.0 : 1e-9))
        throw std::runtime_error("determinant_pair: u.v != 1");
    return out;
}

/// M and N contractions of the determinant pair, with the product and
/// commutation identities checked against the braid lift of S.
template <class T>
struct MNData {
    Matrix<T> M, N;
    bool prod_ok = false;  // M N = Id / p^2
    bool com_ok = false;   // S(v (x) x_i) = (-1)^{p-1} p M_i^j (x_j (x) v) and mirror
};

template <class T>
MNData<T> mn_matrices(const Symmetry<T>& s, const DetPair<T>& dp, double eps = 0.0) {
    const int n = s.dim(), p = dp.p;
    std::int64_t Nrest = tensor_dim(n, p - 1);
    MNData<T> out{Matrix<T>(n, n), Matrix<T>(n, n), false, false};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            T m = scalar_ops<T>::zero(), nn = scalar_ops<T>::zero();
            for (std::int64_t r = 0; r < Nrest; ++r) {
                m += dp.u[r * n + i] * dp.v[j * Nrest + r];
                nn += dp.u[i * Nrest + r] * dp.v[r * n + j];
            }
            out.M(i, j) = m;
            out.N(i, j) = nn;
        }

    T p2inv = scalar_ops<T>::one() / scalar_ops<T>::from_long(static_cast<long>(p) * p);
    out.prod_ok =
        residual_norm(out.M * out.N - Matrix<T>::identity(n) * p2inv) <=
        (scalar_ops<T>::exact ? 0.0 : 1e-9);

    // braid commutation relations (com)
    T c = scalar_ops<T>::from_long(p % 2 == 1 ? p : -p);  // (-1)^{p-1} p
    auto sparse_v = [&](bool v_first, int i) {
        SparseVec<T> w;
        for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(dp.v.size()); ++idx) {
            if (scalar_ops<T>::is_zero(dp.v[idx], eps)) continue;
            w.emplace_back(v_first ? idx * n + i : i * dp.v.size() + idx, dp.v[idx]);
        }
        sv_compress(w, eps);
        return w;
    };
    bool com = true;
    for (int i = 0; i < n && com; ++i) {
        auto lhs = s.ops().apply_perm(p + 1, block_swap_perm(p, 1), sparse_v(true, i), eps);
        SparseVec<T> rhs;
        for (int j = 0; j < n; ++j) {
            T coeff = c * out.M(i, j);
            if (scalar_ops<T>::is_zero(coeff, eps)) continue;
            sv_axpy(rhs, coeff, sparse_v(false, j), eps);
        }
        SparseVec<T> diff = lhs;
        sv_axpy(diff, -scalar_ops<T>::one(), rhs, eps);
        if (!diff.empty()) com = false;

        auto lhs2 = s.ops().apply_perm(p + 1, block_swap_perm(1, p), sparse_v(false, i), eps);
        SparseVec<T> rhs2;
        for (int j = 0; j < n; ++j) {
            T coeff = c * out.N(i, j);
            if (scalar_ops<T>::is_zero(coeff, eps)) continue;
            sv_axpy(rhs2, coeff, sparse_v(true, j), eps);
        }
        SparseVec<T> diff2 = lhs2;
        sv_axpy(diff2, -scalar_ops<T>::one(), rhs2, eps);
        if (!diff2.empty()) com = false;
    }
    out.com_ok = com;
    return out;
}

/// Central determinant test: (-1)^{p-1} p M = Id = (-1)^{p-1} p N.
template <class T>
struct CentralityResult {
    bool central = false;
    Matrix<T> M, N;
};

template <class T>
CentralityResult<T> centrality(const Symmetry<T>& s, const DetPair<T>& dp, double eps = 0.0) {
    auto mn = mn_matrices(s, dp, eps);
    T c = scalar_ops<T>::from_long(dp.p % 2 == 1 ? dp.p : -dp.p);
    bool okM = residual_norm(mn.M * c - Matrix<T>::identity(s.dim())) <=
               (scalar_ops<T>::exact ? 0.0 : 1e-9);
    bool okN = residual_norm(mn.N * c - Matrix<T>::identity(s.dim())) <=
               (scalar_ops<T>::exact ? 0.0 : 1e-9);
    return {okM && okN, mn.M, mn.N};
}

/**
 * The column inverse T with S_ij^kl T_km^in = delta_m^l delta_j^n, stored as
 * the matrix X[(k,i),(m,n)] = T_km^in, plus the derived operators
 * C_i^j = T_ik^jk, B_i^j = T_ki^kj and the determinant-side C_det.
 */
template <class T>
struct DualTensors {
    Matrix<T> X;     // n^2 x n^2, rows (k,i), cols (m,n)
    Matrix<T> C, B, Cdet;
    T trace;         // sum T_ij^ij, the inner dimension
    bool bc_ok = false;        // B C = Id
    bool c_p_cdet_ok = false;  // C = p C_det (the conjectured identification)
    bool b_p_cdet_ok = false;  // B = p C_det (what the fixtures actually satisfy)
};

template <class T>
DualTensors<T> dual_tensors(const Symmetry<T>& s, const DetPair<T>* dp = nullptr,
                            double eps = 0.0) {
    const int n = s.dim();
    // In the defining relation S_ij^kl T_km^in = delta_m^l delta_j^n the
    // S-indices follow the source convention S(x_i (x) x_j) = S_ij^kl x_k (x) x_l,
    // i.e. the transpose of this library's matrix layout.  Reading them the
    // other way lands C and B exchanged and breaks C = p C_det.
    Matrix<T> m1(n * n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    m1(l * n + j, k * n + i) = s.matrix()(k * n + l, i * n + j);
    DualTensors<T> out{Matrix<T>(), Matrix<T>(n, n), Matrix<T>(n, n), Matrix<T>(n, n),
                       scalar_ops<T>::zero(), false, false};
    try {
        out.X = inverse(m1, eps);
    } catch (const std::runtime_error&) {
        throw std::runtime_error("dual_tensors: operator is not invertible by column");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                out.C(i, j) += out.X(i * n + j, k * n + k);
                out.B(i, j) += out.X(k * n + k, i * n + j);
            }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.trace += out.X(i * n + i, j * n + j);
    out.bc_ok = residual_norm(out.B * out.C - Matrix<T>::identity(n)) <=
                (scalar_ops<T>::exact ? 0.0 : 1e-9);
    if (dp) {
        std::int64_t Nrest = tensor_dim(n, dp->p - 1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (std::int64_t r = 0; r < Nrest; ++r)
                    out.Cdet(i, j) += dp->v[i * Nrest + r] * dp->u[j * Nrest + r];
        double tol = scalar_ops<T>::exact ? 0.0 : 1e-9;
        T p = scalar_ops<T>::from_long(dp->p);
        out.c_p_cdet_ok = residual_norm(out.C - out.Cdet * p) <= tol;
        out.b_p_cdet_ok = residual_norm(out.B - out.Cdet * p) <= tol;
    }
    return out;
}

}  // namespace swlab
