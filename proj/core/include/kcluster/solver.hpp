#ifndef KCLUSTER_SOLVER_HPP
#define KCLUSTER_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "kcluster/cliques.hpp"
#include "kcluster/nir.hpp"
#include "kcluster/split_bounds.hpp"

namespace kcluster {

struct SolveOptions {
    // Skip witness reconstruction; `nodes` stays empty.
    bool value_only = false;
    // Fault injection for harness power checks (never set in normal use).
    std::optional<SplitMutation> mutation;
};

struct SolveStats {
    std::int64_t states = 0;     // dp states evaluated
    std::int64_t elapsed_ns = 0; // wall time of the solve call
    // The backlink walk could not realize the dp bookkeeping and the
    // witness was rebuilt by value-preserving node deletion instead.
    bool fallback_reconstruction = false;
    // edge_count(nodes) was checked against `value` and matched.
    bool witness_verified = false;
};

// Result of one k-cluster solve. `value` is empty iff no feasible subset
// exists (only possible in connected mode for k >= 2). Nodes are reported
// in the form's own 1-based order, ascending; callers that converted from
// a realization translate back through the conversion's node_order.
struct ClusterSolution {
    int k = 0;
    bool connected = false;
    std::optional<std::int64_t> value;
    std::vector<int> nodes;
    SolveStats stats;

    bool feasible() const { return value.has_value(); }
};

// Optimal k-cluster on a stair form, O(n k^5). Throws ArgumentError when
// k is out of 0..n.
ClusterSolution solve_proper(const SnirForm& f, int k, bool connected,
                             const SolveOptions& options = {});

// Optimal k-cluster on a general NIR form, O(n k^6).
ClusterSolution solve_interval(const NirForm& f, int k, bool connected,
                               const SolveOptions& options = {});

// Batched variants: one dp table answers every k in 0..n. Returns n+1
// solutions indexed by k. Used by the differential harness where every k
// of every instance is compared.
std::vector<ClusterSolution> solve_proper_all_k(const SnirForm& f, bool connected,
                                                const SolveOptions& options = {});
std::vector<ClusterSolution> solve_interval_all_k(const NirForm& f, bool connected,
                                                  const SolveOptions& options = {});

} // namespace kcluster

#endif // KCLUSTER_SOLVER_HPP
