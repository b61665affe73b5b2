#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace swlab {

/// Weakly decreasing sequence of positive integers (trailing zeros dropped).
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> p) : parts_(p) { normalize(); }
    explicit Partition(std::vector<int> p) : parts_(std::move(p)) { normalize(); }

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    bool empty() const { return parts_.empty(); }

    bool contains_cell(int row, int col) const {  // 0-based
        return row < static_cast<int>(parts_.size()) && col < parts_[row];
    }

    Partition conjugate() const {
        if (parts_.empty()) return {};
        std::vector<int> conj(parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++conj[j];
        return Partition(std::move(conj));
    }

    int hook_length(int row, int col) const {
        int arm = parts_[row] - col - 1;
        int leg = 0;
        for (std::size_t i = row + 1; i < parts_.size(); ++i)
            if (parts_[i] > col) ++leg;
        return arm + leg + 1;
    }

    /// Sum of j - i over cells (i, j); the eigenvalue of the transposition
    /// class sum on the irreducible module labelled by this shape.
    long content_sum() const {
        long s = 0;
        for (std::size_t i = 0; i < parts_.size(); ++i)
            for (int j = 0; j < parts_[i]; ++j) s += j - static_cast<long>(i);
        return s;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

  private:
    void normalize() {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
            if (parts_[i] < parts_[i + 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        for (int p : parts_)
            if (p < 0) throw std::invalid_argument("Partition: negative part");
    }

    std::vector<int> parts_;
};

/// All partitions of m, in lexicographically decreasing order.
inline std::vector<Partition> partitions_of(int m) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, m, m);
    return out;
}

/**
 * Rank-p reduction: a diagram of length p loses its full height-p columns
 * (subtract the last part from every part); shorter diagrams are untouched.
 * Diagrams longer than p label the zero object and are rejected here.
 */
inline Partition reduce_partition(const Partition& lam, int p) {
    if (static_cast<int>(lam.length()) > p)
        throw std::invalid_argument("reduce: diagram longer than the rank labels the zero object");
    if (static_cast<int>(lam.length()) < p) return lam;
    std::vector<int> parts;
    int shift = lam.parts().back();
    for (int v : lam.parts()) parts.push_back(v - shift);
    return Partition(std::move(parts));
}

/// dim of the irreducible symmetric group module, by the hook length formula.
inline std::int64_t hook_dim(const Partition& lam) {
    const int m = lam.weight();
    std::int64_t fact = 1;
    for (int i = 2; i <= m; ++i) fact *= i;
    std::int64_t hooks = 1;
    for (std::size_t i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam.part(i); ++j) hooks *= lam.hook_length(static_cast<int>(i), j);
    return fact / hooks;
}

}  // namespace swlab
