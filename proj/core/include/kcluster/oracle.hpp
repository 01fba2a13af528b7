#ifndef KCLUSTER_ORACLE_HPP
#define KCLUSTER_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "kcluster/nir.hpp"
#include "kcluster/solver.hpp"

namespace kcluster {

// Hard cap on exhaustive enumeration. The oracle refuses anything larger
// rather than approximating.
struct OracleBudget {
    int max_n = 24;
};

// Exact k-cluster value by enumerating every k-subset in colex order
// (Gosper's hack over bitmasks). The witness is the colex-smallest
// optimum. Throws BudgetError beyond the budget.
ClusterSolution brute_force_kcluster(const NirForm& f, int k, bool connected,
                                     const OracleBudget& budget = {});

// One sweep over all 2^n subsets: exact values and witnesses for every k
// at once, both connectivity modes share the pass. Result is indexed by k.
struct OracleAllK {
    std::vector<ClusterSolution> plain;
    std::vector<ClusterSolution> connected;
};
OracleAllK oracle_all_k(const NirForm& f, const OracleBudget& budget = {});

// All maximal cliques by direct subset search: a set is kept iff it is a
// clique and no single node extends it. Sorted node lists, lexicographic
// order.
std::vector<std::vector<int>> brute_force_cliques(const NirForm& f,
                                                  const OracleBudget& budget = {});

// True iff `nodes` induces a connected subgraph. Empty and singleton sets
// count as connected.
bool connectivity_check(const NirForm& f, const std::vector<int>& nodes);

} // namespace kcluster

#endif // KCLUSTER_ORACLE_HPP
