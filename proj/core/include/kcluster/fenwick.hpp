#ifndef KCLUSTER_FENWICK_HPP
#define KCLUSTER_FENWICK_HPP

#include <vector>

namespace kcluster {

// Binary indexed tree over positions 1..n, used for the range counting
// behind the split-bound precomputation.
class FenwickTree {
public:
    explicit FenwickTree(int n) : n_(n), bit_(static_cast<std::size_t>(n) + 1, 0) {}

    void add(int idx, int delta) {
        for (; idx <= n_; idx += idx & -idx) bit_[static_cast<std::size_t>(idx)] += delta;
    }

    // Sum over [1, idx].
    int prefix(int idx) const {
        int sum = 0;
        for (; idx > 0; idx -= idx & -idx) sum += bit_[static_cast<std::size_t>(idx)];
        return sum;
    }

    // Sum over [lo, hi]; empty when lo > hi.
    int range(int lo, int hi) const {
        if (lo > hi) return 0;
        return prefix(hi) - prefix(lo - 1);
    }

private:
    int n_;
    std::vector<int> bit_;
};

} // namespace kcluster

#endif // KCLUSTER_FENWICK_HPP
