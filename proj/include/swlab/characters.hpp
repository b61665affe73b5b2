#pragma once

#include <map>
#include <utility>

#include "partition.hpp"
#include "scalar.hpp"

namespace swlab {

namespace detail {

/// Border strips of given size whose removal from lam leaves a partition;
/// returns (remaining shape, strip height - 1) pairs.
inline std::vector<std::pair<Partition, int>> strip_removals(const Partition& lam, int size) {
    std::vector<std::pair<Partition, int>> out;
    const int L = static_cast<int>(lam.length());
    // A border strip is determined by its topmost row r: walk down the rim.
    for (int r = 0; r < L; ++r) {
        std::vector<int> parts = lam.parts();
        int remaining = size;
        int row = r;
        // peel rim cells row by row: in row `row` the strip occupies columns
        // from max(parts[row+1]-1, parts[row]-remaining) .. parts[row]-1
        bool ok = true;
        while (remaining > 0 && row < L) {
            int next = row + 1 < L ? parts[row + 1] : 0;
            int low = std::max(next - 1, parts[row] - remaining);
            if (low < 0) low = 0;
            int take = parts[row] - low;
            if (take <= 0) {
                ok = false;
                break;
            }
            parts[row] = low;
            remaining -= take;
            if (remaining == 0) break;
            // strip continues into the next row only if it stays connected
            if (row + 1 >= L || low != next - 1 || next == 0) {
                ok = false;
                break;
            }
            ++row;
        }
        if (!ok || remaining != 0) continue;
        // rows must remain weakly decreasing
        bool valid = true;
        for (int i = 0; i + 1 < L; ++i)
            if (parts[i] < parts[i + 1]) valid = false;
        if (!valid) continue;
        out.emplace_back(Partition(parts), row - r);
    }
    return out;
}

}  // namespace detail

/**
 * Irreducible symmetric group character chi_lambda on the conjugacy class of
 * cycle type mu, by the Murnaghan-Nakayama border-strip recursion
 * (memoized on the pair of partitions).
 */
inline long character(const Partition& lam, const Partition& mu) {
    if (lam.weight() != mu.weight())
        throw std::invalid_argument("character: |lambda| != |cycle type|");
    static std::map<std::pair<Partition, Partition>, long> memo;
    if (lam.weight() == 0) return 1;
    auto key = std::make_pair(lam, mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int part = mu.parts().front();
    std::vector<int> rest_parts(mu.parts().begin() + 1, mu.parts().end());
    Partition rest(rest_parts);

    long acc = 0;
    for (auto& [shape, height] : detail::strip_removals(lam, part))
        acc += (height % 2 ? -1 : 1) * character(shape, rest);
    memo[key] = acc;
    return acc;
}

/// Size of the conjugacy class of cycle type mu in S(m): m! / z_mu with
/// z_mu = prod(parts) * prod(multiplicity!).
inline mpz_class class_size(const Partition& mu) {
    const int m = mu.weight();
    mpz_class fact = 1;
    for (int i = 2; i <= m; ++i) fact *= i;
    mpz_class z = 1;
    for (int p : mu.parts()) z *= p;
    std::map<int, int> mult;
    for (int p : mu.parts()) ++mult[p];
    for (auto& [p, c] : mult)
        for (int i = 2; i <= c; ++i) z *= i;
    return fact / z;
}

/// Cycle type of the transposition class (2, 1^{m-2}).
inline Partition transposition_class(int m) {
    std::vector<int> parts{2};
    for (int i = 0; i < m - 2; ++i) parts.push_back(1);
    return Partition(parts);
}

/**
 * gamma_lambda = (m^2 - m) chi_lambda(transposition class) / (2 dim M_lambda),
 * the eigenvalue of the sum of all transpositions on M_lambda.  Computed by
 * the character formula and by the independent content-sum oracle; any
 * disagreement is a hard error.
 */
inline QuadScalar gamma_eigenvalue(const Partition& lam) {
    const int m = lam.weight();
    if (m < 2) return QuadScalar(0);
    long chi = character(lam, transposition_class(m));
    QuadScalar by_character =
        QuadScalar::rational(mpz_class(m) * (m - 1) * chi, 2 * mpz_class(hook_dim(lam)));
    QuadScalar by_content(static_cast<long>(lam.content_sum()));
    if (by_character != by_content)
        throw std::runtime_error("gamma: character route and content sum disagree on " +
                                 lam.str());
    return by_character;
}

}  // namespace swlab
