#include "kcluster/cliques.hpp"

#include <algorithm>
#include <numeric>

#include "kcluster/fenwick.hpp"

namespace kcluster {

std::vector<int> clique_members(const NirForm& f, int row) {
    std::vector<int> members;
    for (int j = 1; j <= row; ++j) {
        if (f.stop(j) >= row) members.push_back(j);
    }
    return members;
}

CliqueSequence maximal_cliques(const NirForm& f) {
    const int n = f.n();

    // stops_here[r] = some column's chain of 1's ends exactly at row r.
    std::vector<char> stops_here(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 1; j <= n; ++j) {
        if (f.reach[j - 1] > 0) stops_here[static_cast<std::size_t>(f.stop(j))] = 1;
    }

    CliqueSequence out;
    for (int row = 1; row <= n; ++row) {
        const bool anchored = row == n || f.reach[row - 1] == 0 ||
                              stops_here[static_cast<std::size_t>(row)] != 0;
        if (anchored) out.anchor_rows.push_back(row);
    }

    // |Q_t| = #{j <= a_t : stop(j) >= a_t}, all anchors in one ascending
    // sweep: drop each node once its chain ends above the current anchor.
    std::vector<int> by_stop(static_cast<std::size_t>(n));
    std::iota(by_stop.begin(), by_stop.end(), 1);
    std::sort(by_stop.begin(), by_stop.end(),
              [&](int a, int b) { return f.stop(a) < f.stop(b); });
    FenwickTree alive(n);
    for (int j = 1; j <= n; ++j) alive.add(j, 1);
    std::size_t next_drop = 0;
    out.sizes.reserve(out.anchor_rows.size());
    for (int row : out.anchor_rows) {
        while (next_drop < by_stop.size() && f.stop(by_stop[next_drop]) < row) {
            alive.add(by_stop[next_drop], -1);
            ++next_drop;
        }
        out.sizes.push_back(alive.prefix(row));
    }
    return out;
}

StairSet stairs(const SnirForm& f) {
    if (!f.nir().stops_monotone()) {
        // SnirForm construction already guarantees this; a violation means
        // the value was tampered with.
        throw InternalError("stair extraction on a non-monotone form");
    }
    const CliqueSequence cliques = maximal_cliques(f.nir());

    StairSet out;
    out.pick_rows = cliques.anchor_rows;
    out.pick_cols.reserve(cliques.anchor_rows.size());
    // With monotone stops the members of the clique at row a are the
    // contiguous block [b, a] where b is the first column reaching a.
    int b = 1;
    for (int a : cliques.anchor_rows) {
        while (f.stop(b) < a) ++b;
        out.pick_cols.push_back(b);
    }
    return out;
}

} // namespace kcluster
