#ifndef KCLUSTER_SPLIT_BOUNDS_HPP
#define KCLUSTER_SPLIT_BOUNDS_HPP

#include <optional>
#include <vector>

#include "kcluster/cliques.hpp"
#include "kcluster/nir.hpp"

namespace kcluster {

// Region capacities for the recursion step at clique t >= 2 on a stair
// form. The five regions partition the nodes 1..a_t; which node set each
// bound describes depends on whether Q_t and Q_{t-2} overlap:
//
//   overlap (b_t <= a_{t-2}):          disjoint (b_t > a_{t-2}):
//     x: Q_t \ Q_{t-1}                   x: Q_t \ Q_{t-1}
//     y: Q_{t-1} \ Q_{t-2}               y: Q_t and Q_{t-1}
//     z: Q_t and Q_{t-2}                 z: Q_{t-1} \ (Q_t u Q_{t-2})
//     w: Q_{t-1} \ Q_t                   w: Q_{t-1} and Q_{t-2}
//     u: everything below b_{t-1}        u: everything below b_{t-1}
struct SplitBoundsProper {
    bool deep_overlap; // Q_t and Q_{t-2} share nodes
    int x_max;
    int y_max;
    int z_max;
    int w_max;
    int u_max;
};

SplitBoundsProper split_bounds_proper(const StairSet& s, int t);

// Region capacities for the recursion step at clique t >= 2 on a general
// NIR form. The six regions partition 1..a_t:
//   x: Q_t \ Q_{t-1}                    (the block (a_{t-1}, a_t])
//   y: (Q_t and Q_{t-1}) \ Q_{t-2}      (block (a_{t-2}, a_{t-1}], reach >= a_t)
//   z: Q_{t-1} \ (Q_t u Q_{t-2})        (same block, reach < a_t)
//   w: Q_t and Q_{t-2}                  (nodes <= a_{t-2}, reach >= a_t)
//   u: (Q_{t-1} and Q_{t-2}) \ Q_t      (nodes <= a_{t-2}, a_{t-1} <= reach < a_t)
//   v: the rest of 1..a_{t-2}
struct SplitBoundsInterval {
    int x_max;
    int y_max;
    int z_max;
    int w_max;
    int u_max;
    int v_max;
};

// Direct evaluation of the defining sums, linear in a_t. Kept as the
// reference for differential tests of the precomputed table.
SplitBoundsInterval split_bounds_interval_naive(const CliqueSequence& c, const NirForm& f, int t);

// All split bounds computed up front with a Fenwick sweep over reach
// values: O(n log n) for the whole table instead of O(n) per clique.
class SplitTable {
public:
    SplitTable(const CliqueSequence& c, const NirForm& f);

    const SplitBoundsInterval& at(int t) const { return bounds_[static_cast<std::size_t>(t) - 2]; }

private:
    std::vector<SplitBoundsInterval> bounds_; // index 0 holds t = 2
};

// Deliberate off-by-one fault injection for harness power checks: adds
// `delta` to the selected bound before the solver uses it. Only the fuzz
// and acceptance machinery ever sets this.
struct SplitMutation {
    enum class Field { x_max, y_max, z_max, w_max, u_max, v_max };
    Field field;
    int delta;
};

void apply_mutation(SplitBoundsProper& b, const SplitMutation& m);
void apply_mutation(SplitBoundsInterval& b, const SplitMutation& m);

} // namespace kcluster

#endif // KCLUSTER_SPLIT_BOUNDS_HPP
