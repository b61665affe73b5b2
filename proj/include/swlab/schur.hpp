#pragma once

#include <complex>

#include "group_algebra.hpp"
#include "poincare.hpp"

namespace swlab {

/// Complete homogeneous symmetric values h_0..h_K from the elementary values
/// e_0..e_p (Newton's recursion sum_{i} (-1)^i e_i h_{k-i} = 0).
template <class T>
std::vector<T> h_from_e(const std::vector<T>& e, int K) {
    std::vector<T> h(K + 1, scalar_ops<T>::zero());
    h[0] = scalar_ops<T>::one();
    for (int k = 1; k <= K; ++k) {
        T acc = scalar_ops<T>::zero();
        for (int i = 1; i <= k && i < static_cast<int>(e.size()); ++i) {
            T term = e[i] * h[k - i];
            acc += (i % 2 == 1) ? term : -term;
        }
        h[k] = acc;
    }
    return h;
}

/// Elementary symmetric values e_0..e_p of the multiset alpha.
template <class T>
std::vector<T> e_from_alpha(const std::vector<T>& alpha) {
    std::vector<T> e(alpha.size() + 1, scalar_ops<T>::zero());
    e[0] = scalar_ops<T>::one();
    std::size_t used = 0;
    for (const T& a : alpha) {
        ++used;
        for (std::size_t k = used; k >= 1; --k) e[k] += a * e[k - 1];
    }
    return e;
}

/// Jacobi-Trudi determinant s_lambda = det(h_{lambda_i - i + j}).
template <class T>
T schur_from_h(const Partition& lam, const std::vector<T>& h) {
    const int L = static_cast<int>(lam.length());
    if (L == 0) return scalar_ops<T>::one();
    Matrix<T> jt(L, L);
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) {
            int k = lam.part(i) - i + j;
            jt(i, j) = (k < 0 || k >= static_cast<int>(h.size())) ? scalar_ops<T>::zero()
                                                                  : h[k];
        }
    return determinant(jt);
}

/// Schur polynomial evaluated at the multiset alpha.
template <class T>
T schur_poly(const Partition& lam, const std::vector<T>& alpha) {
    int K = lam.empty() ? 0 : lam.part(0) + static_cast<int>(lam.length());
    auto h = h_from_e(e_from_alpha(alpha), K);
    return schur_from_h(lam, h);
}

/// Schur value from the skew Poincare coefficients of an even symmetry:
/// e_k = dim wedge_-^k, so everything stays an exact integer.
inline QuadScalar schur_from_minus_series(const Partition& lam,
                                          const std::vector<std::int64_t>& minus, int rank) {
    std::vector<QuadScalar> e;
    for (int k = 0; k <= rank && k < static_cast<int>(minus.size()); ++k)
        e.push_back(QuadScalar(minus[k]));
    int K = lam.empty() ? 0 : lam.part(0) + static_cast<int>(lam.length());
    auto h = h_from_e(e, K);
    return schur_from_h(lam, h);
}

/// Basis of V_lambda = Im rho_S(p_lambda) inside T^m(V), as sparse columns.
template <class T>
std::vector<SparseVec<T>> schur_basis(const Symmetry<T>& s, const Partition& lam,
                                      double eps = 0.0) {
    const int m = lam.weight();
    const std::int64_t N = tensor_dim(s.dim(), m);
    auto p_lam = young_symmetrizer(lam);
    SpanBuilder<T> span(eps);
    for (std::int64_t j = 0; j < N; ++j)
        span.offer(p_lam.template apply<T>(s.ops(), sv_basis<T>(j), eps));
    return span.basis();
}

/// dim V_lambda as the rank of rho_S(p_lambda) on T^m(V).
template <class T>
std::int64_t schur_dim(const Symmetry<T>& s, const Partition& lam, double eps = 0.0) {
    return static_cast<std::int64_t>(schur_basis(s, lam, eps).size());
}

/// dim of the full isotypic component, the rank of the central idempotent.
template <class T>
std::int64_t isotypic_dim(const Symmetry<T>& s, const Partition& lam, double eps = 0.0) {
    const int m = lam.weight();
    const std::int64_t N = tensor_dim(s.dim(), m);
    auto z = central_idempotent(lam);
    SpanBuilder<T> span(eps);
    for (std::int64_t j = 0; j < N; ++j)
        span.offer(z.template apply<T>(s.ops(), sv_basis<T>(j), eps));
    return static_cast<std::int64_t>(span.rank());
}

/// Sparse outer product: (a (x) b) on T^{ma+mb} with b's index space of size dimB.
template <class T>
SparseVec<T> sv_kron(const SparseVec<T>& a, const SparseVec<T>& b, std::int64_t dimB) {
    SparseVec<T> out;
    out.reserve(a.size() * b.size());
    for (auto& [i, x] : a)
        for (auto& [j, y] : b) out.emplace_back(i * dimB + j, x * y);
    sv_compress(out);
    return out;
}

/**
 * The braid lift S: V_lam (x) V_mu -> V_mu (x) V_lam restricted to the
 * computed bases.  closed = the image really lands in V_mu (x) V_lam;
 * matrix = the coordinates (dim products square) when it does.
 */
template <class T>
struct RestrictedBlock {
    bool closed = false;
    Matrix<T> matrix;
};

template <class T>
RestrictedBlock<T> restricted_swap(const Symmetry<T>& s, const Partition& lam,
                                   const Partition& mu, double eps = 0.0) {
    const int ml = lam.weight(), mm = mu.weight();
    const std::int64_t N = tensor_dim(s.dim(), ml + mm);
    auto Ul = schur_basis(s, lam, eps);
    auto Um = schur_basis(s, mu, eps);
    const std::int64_t Nl = tensor_dim(s.dim(), ml), Nm = tensor_dim(s.dim(), mm);

    // target basis V_mu (x) V_lam as dense columns
    Matrix<T> target(N, Um.size() * Ul.size());
    std::size_t c = 0;
    for (const auto& bm : Um)
        for (const auto& bl : Ul) {
            for (auto& [i, x] : sv_kron(bm, bl, Nl)) target(i, c) = x;
            ++c;
        }

    Permutation swap = block_swap_perm(ml, mm);
    Matrix<T> rhs(N, Ul.size() * Um.size());
    c = 0;
    for (const auto& bl : Ul)
        for (const auto& bm : Um) {
            auto w = s.ops().apply_perm(ml + mm, swap, sv_kron(bl, bm, Nm), eps);
            for (auto& [i, x] : w) rhs(i, c) = x;
            ++c;
        }

    auto sol = linear_solve(target, rhs, eps);
    RestrictedBlock<T> out;
    out.closed = sol.consistent;
    if (sol.consistent) out.matrix = sol.particular;
    return out;
}

/// Trace of the braid representation of a c-cycle on T^c(W) for an operator
/// S_W on W (x) W, contracted as a staircase without forming T^c(W).
template <class T>
T cycle_trace(const Matrix<T>& sw, int dimW, int c) {
    const int w = dimW;
    auto s = [&](int o1, int o2, int i1, int i2) -> const T& {
        return sw(o1 * w + o2, i1 * w + i2);
    };
    if (c == 1) return scalar_ops<T>::from_long(w);
    if (c == 2) return sw.trace();
    // state vectors indexed by (bond, pending global input)
    std::vector<T> state(w * w, scalar_ops<T>::zero());
    for (int b = 0; b < w; ++b)       // bond out of the first step
        for (int a2 = 0; a2 < w; ++a2) {
            T acc = scalar_ops<T>::zero();
            for (int a1 = 0; a1 < w; ++a1) acc += s(a1, b, a1, a2);
            state[b * w + a2] = acc;
        }
    for (int step = 0; step < c - 3; ++step) {
        std::vector<T> next(w * w, scalar_ops<T>::zero());
        for (int bp = 0; bp < w; ++bp)
            for (int ap = 0; ap < w; ++ap) {
                T acc = scalar_ops<T>::zero();
                for (int b = 0; b < w; ++b)
                    for (int a = 0; a < w; ++a) acc += s(a, bp, b, ap) * state[b * w + a];
                next[bp * w + ap] = acc;
            }
        state = std::move(next);
    }
    T total = scalar_ops<T>::zero();
    for (int b = 0; b < w; ++b)
        for (int a = 0; a < w; ++a) {
            T end = scalar_ops<T>::zero();
            for (int ac = 0; ac < w; ++ac) end += s(a, ac, b, ac);
            total += end * state[b * w + a];
        }
    return total;
}

/// Skew series coefficients e_0..e_K of an operator on W (x) W via projector
/// traces assembled from cycle traces (exact; no tensor power is formed).
template <class T>
std::vector<QuadScalar> minus_series_by_traces(const Matrix<T>& sw, int dimW, int K)
    requires scalar_ops<T>::exact
{
    std::vector<T> powers(K + 1, scalar_ops<T>::zero());
    for (int c = 1; c <= K; ++c) powers[c] = cycle_trace(sw, dimW, c);
    std::vector<QuadScalar> e{QuadScalar(1)};
    for (int k = 1; k <= K; ++k) {
        QuadScalar acc;
        for (const auto& mu : partitions_of(k)) {
            T prod = scalar_ops<T>::one();
            for (int part : mu.parts()) prod *= powers[part];
            QuadScalar sign((k - static_cast<int>(mu.length())) % 2 ? -1 : 1);
            acc += sign * QuadScalar(class_size(mu), 0, 1, 0) * prod;
        }
        mpz_class fact = 1;
        for (int i = 2; i <= k; ++i) fact *= i;
        e.push_back(acc / QuadScalar(fact, 0, 1, 0));
    }
    return e;
}

/// Semistandard fillings of lam with entries 1..p; returns content vectors.
inline std::vector<std::vector<int>> ssyt_contents(const Partition& lam, int p) {
    std::vector<std::vector<int>> cells;  // (row, col) in order
    std::vector<std::vector<int>> fill(lam.length());
    for (std::size_t r = 0; r < lam.length(); ++r) fill[r].assign(lam.part(r), 0);
    std::vector<std::vector<int>> out;
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == static_cast<int>(lam.length())) {
            std::vector<int> content(p, 0);
            for (const auto& row : fill)
                for (int v : row) ++content[v - 1];
            out.push_back(content);
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= lam.part(r)) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, fill[r][c - 1]);
        if (r > 0 && c < lam.part(r - 1)) lo = std::max(lo, fill[r - 1][c] + 1);
        for (int v = lo; v <= p; ++v) {
            fill[r][c] = v;
            self(self, nr, nc);
        }
        fill[r][c] = 0;
    };
    if (lam.empty())
        out.push_back(std::vector<int>(p, 0));
    else
        rec(rec, 0, 0);
    return out;
}

/// The diagonal weight multiset of diag(alpha) on the classical module lam.
inline std::vector<double> classical_weights(const Partition& lam,
                                             const std::vector<double>& alpha) {
    std::vector<double> out;
    for (const auto& content : ssyt_contents(lam, static_cast<int>(alpha.size()))) {
        double w = 1.0;
        for (std::size_t i = 0; i < alpha.size(); ++i)
            w *= std::pow(alpha[i], content[i]);
        out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/**
 * Numerical probe of the root-transport conjecture: the negated roots of the
 * skew series of the induced operator on V_lam should be the diagonal weight
 * multiset of the classical module at the alpha of V.  Reports, never asserts.
 */
struct Conjecture34Report {
    Partition lambda;
    bool closed = false;             // braid restriction lands in V_lam (x) V_lam
    bool induced_is_symmetry = false;
    std::int64_t dim = 0;            // dim V_lam
    std::int64_t classical_dim = 0;  // expected degree of the induced skew series
    std::vector<std::int64_t> minus_series;
    bool series_terminates = false;
    std::vector<double> roots;    // negated roots of the induced skew polynomial
    std::vector<double> weights;  // W_lambda(alpha)
    bool agree = false;
    double max_deviation = 0.0;
};

template <class T>
Conjecture34Report probe_conjecture34(const Symmetry<T>& s, const Partition& lam,
                                      const std::vector<double>& alpha, double eps = 0.0,
                                      double tol = 1e-6) {
    Conjecture34Report rep;
    rep.lambda = lam;

    auto blk = restricted_swap(s, lam, lam, eps);
    rep.closed = blk.closed;
    if (!rep.closed) return rep;
    const int w = static_cast<int>(std::llround(std::sqrt(static_cast<double>(blk.matrix.rows()))));
    rep.dim = w;
    auto ver = verify_matrix(w, blk.matrix, 1e-9);
    rep.induced_is_symmetry = ver.all_ok();
    if (!rep.induced_is_symmetry) return rep;

    rep.weights = classical_weights(lam, alpha);
    rep.classical_dim = static_cast<std::int64_t>(rep.weights.size());

    int K = static_cast<int>(rep.classical_dim) + 1;
    std::vector<std::int64_t> series;
    if constexpr (scalar_ops<T>::exact) {
        auto e = minus_series_by_traces(blk.matrix, w, K);
        for (auto& v : e) {
            double d = v.to_double();
            series.push_back(static_cast<std::int64_t>(std::llround(d)));
        }
    } else {
        // float route: same trace assembly in doubles with integer rounding
        std::vector<double> powers(K + 1, 0.0);
        for (int c = 1; c <= K; ++c) powers[c] = cycle_trace(blk.matrix, w, c);
        series.push_back(1);
        for (int k = 1; k <= K; ++k) {
            double acc = 0;
            for (const auto& mu : partitions_of(k)) {
                double prod = 1;
                for (int part : mu.parts()) prod *= powers[part];
                double sign = (k - static_cast<int>(mu.length())) % 2 ? -1.0 : 1.0;
                acc += sign * class_size(mu).get_d() * prod;
            }
            double fact = 1;
            for (int i = 2; i <= k; ++i) fact *= i;
            series.push_back(static_cast<std::int64_t>(std::llround(acc / fact)));
        }
    }
    rep.minus_series = series;
    rep.series_terminates = series.back() == 0 && series[rep.classical_dim] == 1;

    if (rep.series_terminates) {
        std::vector<std::int64_t> poly(series.begin(), series.begin() + rep.classical_dim + 1);
        rep.roots = roots_alpha_numeric(poly);
        std::sort(rep.roots.begin(), rep.roots.end());
        double dev = 0;
        for (std::size_t i = 0; i < rep.roots.size(); ++i)
            dev = std::max(dev, std::abs(rep.roots[i] - rep.weights[i]) /
                                    std::max(1.0, std::abs(rep.weights[i])));
        rep.max_deviation = dev;
        rep.agree = dev < tol;
    }
    return rep;
}

}  // namespace swlab
