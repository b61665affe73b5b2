#pragma once

#include <map>

#include "characters.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "tensor.hpp"

namespace swlab {

/// Element of the rational group algebra of S(m), a finite sum of permutations.
class GroupAlgebraElement {
  public:
    explicit GroupAlgebraElement(int m) : m_(m) {}

    int symbols() const { return m_; }
    const std::map<Permutation, QuadScalar>& terms() const { return terms_; }

    void add(const Permutation& pi, const QuadScalar& c) {
        auto [it, fresh] = terms_.try_emplace(pi, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    static GroupAlgebraElement unit(int m) {
        GroupAlgebraElement e(m);
        e.add(Permutation(m), QuadScalar(1));
        return e;
    }

    friend GroupAlgebraElement operator*(const GroupAlgebraElement& x,
                                         const GroupAlgebraElement& y) {
        GroupAlgebraElement out(x.m_);
        for (const auto& [pi, a] : x.terms_)
            for (const auto& [tau, b] : y.terms_) out.add(pi * tau, a * b);
        return out;
    }

    friend GroupAlgebraElement operator*(const QuadScalar& c, const GroupAlgebraElement& x) {
        GroupAlgebraElement out(x.m_);
        for (const auto& [pi, a] : x.terms_) out.add(pi, c * a);
        return out;
    }

    friend GroupAlgebraElement operator+(const GroupAlgebraElement& x,
                                         const GroupAlgebraElement& y) {
        GroupAlgebraElement out = x;
        for (const auto& [pi, a] : y.terms_) out.add(pi, a);
        return out;
    }

    friend bool operator==(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
        return x.m_ == y.m_ && x.terms_ == y.terms_;
    }

    /// rho_S applied to a sparse vector on T^m(V).
    template <class T, class Ops>
    SparseVec<T> apply(const Ops& ops, const SparseVec<T>& v, double eps = 0.0) const {
        SparseVec<T> out;
        for (const auto& [pi, c] : terms_) {
            T coeff;
            if constexpr (scalar_ops<T>::exact)
                coeff = c;
            else
                coeff = c.to_double();
            sv_axpy(out, coeff, ops.apply_perm(m_, pi, v, eps), eps);
        }
        return out;
    }

  private:
    int m_;
    std::map<Permutation, QuadScalar> terms_;
};

namespace detail {

/// Canonical column filling of lam: 1..m written down consecutive columns.
inline std::vector<std::vector<int>> column_filled_tableau(const Partition& lam) {
    const auto conj = lam.conjugate();
    std::vector<std::vector<int>> t(lam.length());
    for (std::size_t r = 0; r < lam.length(); ++r) t[r].resize(lam.part(r));
    int next = 1;
    for (std::size_t c = 0; c < conj.length(); ++c)
        for (int r = 0; r < conj.part(c); ++r) t[r][c] = next++;
    return t;
}

/// Sum over the subgroup permuting each listed block of symbols, with or
/// without sign.
inline GroupAlgebraElement block_symmetrizer(int m, const std::vector<std::vector<int>>& blocks,
                                             bool sign) {
    GroupAlgebraElement out = GroupAlgebraElement::unit(m);
    for (const auto& block : blocks) {
        GroupAlgebraElement factor(m);
        std::vector<int> order(block);
        std::sort(order.begin(), order.end());
        std::vector<int> perm = order;
        do {
            std::vector<int> img(m);
            std::iota(img.begin(), img.end(), 1);
            for (std::size_t i = 0; i < order.size(); ++i) img[order[i] - 1] = perm[i];
            Permutation pi(img);
            factor.add(pi, QuadScalar(sign ? pi.sign() : 1));
        } while (std::next_permutation(perm.begin(), perm.end()));
        out = out * factor;
    }
    return out;
}

}  // namespace detail

/**
 * Young symmetrizer p_lambda = c_lambda r_lambda for the canonical
 * column-filled tableau: r sums the row group, c the signed column group.
 * Quasi-idempotent with p^2 = (m!/dim M_lambda) p.
 */
inline GroupAlgebraElement young_symmetrizer(const Partition& lam) {
    const int m = lam.weight();
    auto tab = detail::column_filled_tableau(lam);

    std::vector<std::vector<int>> rows(tab.size());
    for (std::size_t r = 0; r < tab.size(); ++r) rows[r] = tab[r];

    const auto conj = lam.conjugate();
    std::vector<std::vector<int>> cols(conj.length());
    for (std::size_t c = 0; c < conj.length(); ++c)
        for (int r = 0; r < conj.part(c); ++r) cols[c].push_back(tab[r][c]);

    auto r_lam = detail::block_symmetrizer(m, rows, false);
    auto c_lam = detail::block_symmetrizer(m, cols, true);
    return c_lam * r_lam;
}

/// Central idempotent z_lambda = (dim M_lambda / m!) sum_pi chi_lambda(pi) pi.
inline GroupAlgebraElement central_idempotent(const Partition& lam) {
    const int m = lam.weight();
    mpz_class fact = 1;
    for (int i = 2; i <= m; ++i) fact *= i;
    QuadScalar scale = QuadScalar::rational(hook_dim(lam), fact);
    GroupAlgebraElement out(m);
    for (const auto& pi : all_permutations(m)) {
        long chi = character(lam, Partition(pi.cycle_type()));
        if (chi != 0) out.add(pi, scale * QuadScalar(chi));
    }
    return out;
}

}  // namespace swlab
