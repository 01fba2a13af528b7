#include "kcluster/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "kcluster/errors.hpp"

namespace kcluster {

namespace {

using Mask = std::uint32_t;

void check_budget(const NirForm& f, const OracleBudget& budget) {
    if (f.n() > budget.max_n || f.n() > 30) {
        throw BudgetError("oracle refuses n = " + std::to_string(f.n()) + " (budget " +
                          std::to_string(std::min(budget.max_n, 30)) + ")");
    }
}

// Adjacency rows straight from the matrix definition, nothing shared with
// the solvers.
std::vector<Mask> adjacency_rows(const NirForm& f) {
    const int n = f.n();
    std::vector<Mask> adj(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            const int lo = std::min(i, j);
            const int hi = std::max(i, j);
            if (f.stop(lo) >= hi) adj[static_cast<std::size_t>(i)] |= Mask(1) << (j - 1);
        }
    }
    return adj;
}

std::int64_t mask_edges(const std::vector<Mask>& adj, Mask subset) {
    std::int64_t twice = 0;
    for (Mask rest = subset; rest != 0; rest &= rest - 1) {
        const int node = std::countr_zero(rest) + 1;
        twice += std::popcount(adj[static_cast<std::size_t>(node)] & subset);
    }
    return twice / 2;
}

bool mask_connected(const std::vector<Mask>& adj, Mask subset) {
    if (subset == 0) return true;
    const Mask start = subset & (~subset + 1);
    Mask seen = start;
    Mask frontier = start;
    while (frontier != 0) {
        Mask next = 0;
        for (Mask rest = frontier; rest != 0; rest &= rest - 1) {
            const int node = std::countr_zero(rest) + 1;
            next |= adj[static_cast<std::size_t>(node)] & subset;
        }
        next &= ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == subset;
}

std::vector<int> mask_nodes(Mask subset) {
    std::vector<int> nodes;
    for (Mask rest = subset; rest != 0; rest &= rest - 1) {
        nodes.push_back(std::countr_zero(rest) + 1);
    }
    return nodes;
}

} // namespace

ClusterSolution brute_force_kcluster(const NirForm& f, int k, bool connected,
                                     const OracleBudget& budget) {
    check_budget(f, budget);
    const int n = f.n();
    if (k < 0) throw ArgumentError("k must be non-negative");
    if (k > n) throw ArgumentError("k exceeds n");

    ClusterSolution out;
    out.k = k;
    out.connected = connected;
    if (k == 0) {
        out.value = 0;
        return out;
    }

    const auto adj = adjacency_rows(f);
    bool found = false;
    std::int64_t best = 0;
    Mask best_mask = 0;
    // Gosper's hack walks the k-subsets in increasing mask order, which is
    // colex order on the sets; keeping strict improvements makes the
    // witness the colex-smallest optimum.
    Mask subset = (Mask(1) << k) - 1;
    const Mask limit = Mask(1) << n;
    while (subset < limit) {
        if (!connected || mask_connected(adj, subset)) {
            const std::int64_t edges = mask_edges(adj, subset);
            if (!found || edges > best) {
                found = true;
                best = edges;
                best_mask = subset;
            }
        }
        const Mask low = subset & (~subset + 1);
        const Mask ripple = subset + low;
        subset = ripple | (((subset ^ ripple) >> 2) / low);
    }
    if (found) {
        out.value = best;
        out.nodes = mask_nodes(best_mask);
    }
    return out;
}

OracleAllK oracle_all_k(const NirForm& f, const OracleBudget& budget) {
    check_budget(f, budget);
    const int n = f.n();
    const auto adj = adjacency_rows(f);

    OracleAllK out;
    out.plain.resize(static_cast<std::size_t>(n) + 1);
    out.connected.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        out.plain[static_cast<std::size_t>(k)].k = k;
        out.connected[static_cast<std::size_t>(k)].k = k;
        out.connected[static_cast<std::size_t>(k)].connected = true;
    }
    out.plain[0].value = 0;
    out.connected[0].value = 0;

    const Mask limit = Mask(1) << n;
    for (Mask subset = 1; subset < limit; ++subset) {
        const int k = std::popcount(subset);
        const std::int64_t edges = mask_edges(adj, subset);
        auto& plain = out.plain[static_cast<std::size_t>(k)];
        if (!plain.value || edges > *plain.value) {
            plain.value = edges;
            plain.nodes = mask_nodes(subset);
        }
        if (mask_connected(adj, subset)) {
            auto& conn = out.connected[static_cast<std::size_t>(k)];
            if (!conn.value || edges > *conn.value) {
                conn.value = edges;
                conn.nodes = mask_nodes(subset);
            }
        }
    }
    return out;
}

std::vector<std::vector<int>> brute_force_cliques(const NirForm& f, const OracleBudget& budget) {
    check_budget(f, budget);
    const int n = f.n();
    const auto adj = adjacency_rows(f);

    std::vector<std::vector<int>> cliques;
    const Mask limit = Mask(1) << n;
    for (Mask subset = 1; subset < limit; ++subset) {
        bool clique = true;
        for (Mask rest = subset; clique && rest != 0; rest &= rest - 1) {
            const int node = std::countr_zero(rest) + 1;
            const Mask others = subset & ~(Mask(1) << (node - 1));
            clique = (adj[static_cast<std::size_t>(node)] & others) == others;
        }
        if (!clique) continue;
        bool maximal = true;
        for (int v = 1; maximal && v <= n; ++v) {
            const Mask bit = Mask(1) << (v - 1);
            if (subset & bit) continue;
            const Mask with = subset;
            maximal = (adj[static_cast<std::size_t>(v)] & with) != with;
        }
        if (maximal) cliques.push_back(mask_nodes(subset));
    }
    std::sort(cliques.begin(), cliques.end());
    return cliques;
}

bool connectivity_check(const NirForm& f, const std::vector<int>& nodes) {
    const int n = f.n();
    Mask subset = 0;
    for (int v : nodes) {
        if (v < 1 || v > n) throw ArgumentError("connectivity_check node out of range");
        subset |= Mask(1) << (v - 1);
    }
    if (n > 30) throw BudgetError("connectivity_check limited to n <= 30");
    return mask_connected(adjacency_rows(f), subset);
}

} // namespace kcluster
