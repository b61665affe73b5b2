#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "matrix.hpp"
#include "permutation.hpp"

namespace swlab {

/// Sparse coefficient vector over the basis of a tensor power, sorted by index.
template <class T>
using SparseVec = std::vector<std::pair<std::int64_t, T>>;

template <class T>
SparseVec<T> sv_basis(std::int64_t idx) {
    return {{idx, scalar_ops<T>::one()}};
}

template <class T>
void sv_compress(SparseVec<T>& v, double eps = 0.0) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec<T> out;
    for (auto& [i, x] : v) {
        if (!out.empty() && out.back().first == i)
            out.back().second += x;
        else
            out.emplace_back(i, x);
    }
    std::erase_if(out, [&](const auto& p) { return scalar_ops<T>::is_zero(p.second, eps); });
    v = std::move(out);
}

/// dst += coeff * src (both sorted; result sorted).
template <class T>
void sv_axpy(SparseVec<T>& dst, const T& coeff, const SparseVec<T>& src, double eps = 0.0) {
    SparseVec<T> out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            out.emplace_back(src[j].first, coeff * src[j].second);
            ++j;
        } else {
            T s = dst[i].second + coeff * src[j].second;
            if (!scalar_ops<T>::is_zero(s, eps)) out.emplace_back(dst[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

template <class T>
void sv_scale(SparseVec<T>& v, const T& s) {
    for (auto& [i, x] : v) x *= s;
}

template <class T>
std::vector<T> sv_dense(const SparseVec<T>& v, std::int64_t dim) {
    std::vector<T> out(dim, scalar_ops<T>::zero());
    for (auto& [i, x] : v) out[i] = x;
    return out;
}

/**
 * An n^2 x n^2 operator on V (x) V together with the bookkeeping to apply
 * Id^(i-1) (x) S (x) Id^(m-i-1) to sparse vectors on T^m(V).  Basis vectors
 * of T^m(V) are flattened big-endian: factor 1 is the most significant digit.
 */
template <class T>
class SiteOps {
  public:
    SiteOps() = default;
    SiteOps(int n, const Matrix<T>& s) : n_(n), cols_(n * n) {
        for (int c = 0; c < n * n; ++c)
            for (int r = 0; r < n * n; ++r)
                if (!scalar_ops<T>::is_zero(s(r, c))) cols_[c].emplace_back(r, s(r, c));
    }

    int dim() const { return n_; }

    /// w = S^{i,i+1} v on T^m(V), 1 <= i <= m-1.
    SparseVec<T> apply_site(int m, int i, const SparseVec<T>& v, double eps = 0.0) const {
        std::int64_t stride = 1;
        for (int k = 0; k < m - i - 1; ++k) stride *= n_;
        const std::int64_t block = stride * n_ * n_;
        SparseVec<T> out;
        out.reserve(v.size() * 2);
        for (const auto& [idx, val] : v) {
            std::int64_t prefix = idx / block;
            std::int64_t mid = (idx / stride) % (n_ * n_);
            std::int64_t suffix = idx % stride;
            for (const auto& [row, s] : cols_[mid])
                out.emplace_back(prefix * block + row * stride + suffix, s * val);
        }
        sv_compress(out, eps);
        return out;
    }

    /// Apply a word of adjacent transpositions in application order.
    SparseVec<T> apply_word(int m, const std::vector<int>& word, SparseVec<T> v,
                            double eps = 0.0) const {
        for (int i : word) v = apply_site(m, i, v, eps);
        return v;
    }

    SparseVec<T> apply_perm(int m, const Permutation& pi, const SparseVec<T>& v,
                            double eps = 0.0) const {
        return apply_word(m, pi.adjacent_word(), v, eps);
    }

    /**
     * Sum over the symmetric group S(k) acting on the first k factors,
     * v -> sum_pi (sgn pi)^{use_sign} rho_S(pi) v, built by the coset
     * recursion A_k = R_k A_{k-1} with R_k = sum_i (+-) S^{i,i+1}...S^{k-1,k};
     * costs k(k-1)/2 site applications instead of k! permutation applies.
     */
    SparseVec<T> apply_group_sum(int m, int k, bool use_sign, SparseVec<T> v,
                                 double eps = 0.0) const {
        for (int j = 2; j <= k; ++j) {
            SparseVec<T> acc = v;  // i = j term: identity coset representative
            SparseVec<T> w = std::move(v);
            for (int i = j - 1; i >= 1; --i) {
                w = apply_site(m, i, w, eps);
                T c = (use_sign && ((j - i) % 2 == 1)) ? -scalar_ops<T>::one()
                                                       : scalar_ops<T>::one();
                sv_axpy(acc, c, w, eps);
            }
            v = std::move(acc);
        }
        return v;
    }

    /// P_{+-}^k v = apply_group_sum / k!
    SparseVec<T> apply_projector(int m, int k, bool minus, SparseVec<T> v,
                                 double eps = 0.0) const {
        v = apply_group_sum(m, k, minus, std::move(v), eps);
        long fact = 1;
        for (int i = 2; i <= k; ++i) fact *= i;
        sv_scale(v, scalar_ops<T>::one() / scalar_ops<T>::from_long(fact));
        return v;
    }

  private:
    int n_ = 0;
    std::vector<std::vector<std::pair<int, T>>> cols_;
};

inline std::int64_t tensor_dim(int n, int m) {
    std::int64_t d = 1;
    for (int i = 0; i < m; ++i) d *= n;
    return d;
}

/**
 * Incremental exact/thresholded Gaussian elimination over sparse columns.
 * Feeding every column of an operator yields its rank and an image basis.
 */
template <class T>
class SpanBuilder {
  public:
    explicit SpanBuilder(double eps = 0.0) : eps_(eps) {}

    /// Returns true if the column enlarged the span.
    bool offer(SparseVec<T> col) {
        reduce(col);
        if (col.empty()) return false;
        T inv = scalar_ops<T>::one() / col.front().second;
        sv_scale(col, inv);
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), col.front().first,
                                    [](const auto& p, std::int64_t l) { return p.first < l; });
        pivots_.insert(pos, {col.front().first, std::move(col)});
        return true;
    }

    /// Residual of col after reduction against the current span.
    SparseVec<T> residual(SparseVec<T> col) const {
        reduce(col);
        return col;
    }

    bool contains(SparseVec<T> col) const { return residual(std::move(col)).empty(); }

    std::size_t rank() const { return pivots_.size(); }

    std::vector<SparseVec<T>> basis() const {
        std::vector<SparseVec<T>> out;
        out.reserve(pivots_.size());
        for (const auto& p : pivots_) out.push_back(p.second);
        return out;
    }

  private:
    void reduce(SparseVec<T>& col) const {
        for (const auto& [lead, vec] : pivots_) {
            auto it = std::lower_bound(col.begin(), col.end(), lead,
                                       [](const auto& p, std::int64_t l) { return p.first < l; });
            if (it == col.end() || it->first != lead) continue;
            T c = -it->second;
            sv_axpy(col, c, vec, eps_);
        }
    }

    double eps_;
    std::vector<std::pair<std::int64_t, SparseVec<T>>> pivots_;
};

}  // namespace swlab
