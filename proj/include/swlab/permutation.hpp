#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace swlab {

/**
 * Permutation of {1..m}, stored in one-line notation images[i-1] = pi(i).
 * Composition is function composition: (pi * tau)(x) = pi(tau(x)).
 */
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::size_t m) : img_(m) {
        std::iota(img_.begin(), img_.end(), 1);
    }
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
                throw std::invalid_argument("Permutation: not a bijection");
            seen[v - 1] = true;
        }
    }

    static Permutation transposition(std::size_t m, int i, int j) {
        Permutation p(m);
        std::swap(p.img_[i - 1], p.img_[j - 1]);
        return p;
    }

    std::size_t size() const { return img_.size(); }
    int operator()(int x) const { return img_[x - 1]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != static_cast<int>(i) + 1) return false;
        return true;
    }

    friend Permutation operator*(const Permutation& pi, const Permutation& tau) {
        if (pi.size() != tau.size()) throw std::invalid_argument("Permutation: size mismatch");
        Permutation r;
        r.img_.resize(pi.size());
        for (std::size_t x = 1; x <= pi.size(); ++x) r.img_[x - 1] = pi(tau(static_cast<int>(x)));
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.img_.resize(size());
        for (std::size_t x = 1; x <= size(); ++x) r.img_[img_[x - 1] - 1] = static_cast<int>(x);
        return r;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

    /**
     * Factor into adjacent transpositions s_i = (i, i+1) by bubble sort.
     * Each recorded swap at position w multiplies the current one-line word
     * by s_w on the right, so pi = s_{w_k} o ... o s_{w_1} and the returned
     * word w_1, ..., w_k is in application order (apply s_{w_1} first).
     */
    std::vector<int> adjacent_word() const {
        std::vector<int> w = img_;
        std::vector<int> word;
        bool moved = true;
        while (moved) {
            moved = false;
            for (std::size_t j = 0; j + 1 < w.size(); ++j) {
                if (w[j] > w[j + 1]) {
                    std::swap(w[j], w[j + 1]);
                    word.push_back(static_cast<int>(j) + 1);
                    moved = true;
                }
            }
        }
        return word;
    }

    int sign() const { return adjacent_word().size() % 2 == 0 ? 1 : -1; }

    /// Cycle type as a weakly decreasing list of cycle lengths (including fixed points).
    std::vector<int> cycle_type() const {
        std::vector<bool> seen(size(), false);
        std::vector<int> type;
        for (std::size_t s = 1; s <= size(); ++s) {
            if (seen[s - 1]) continue;
            int len = 0;
            int x = static_cast<int>(s);
            while (!seen[x - 1]) {
                seen[x - 1] = true;
                x = img_[x - 1];
                ++len;
            }
            type.push_back(len);
        }
        std::sort(type.rbegin(), type.rend());
        return type;
    }

  private:
    std::vector<int> img_;
};

/// All m! permutations of {1..m} in lexicographic one-line order.
inline std::vector<Permutation> all_permutations(std::size_t m) {
    std::vector<int> v(m);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace swlab
