#ifndef KCLUSTER_CLIQUES_HPP
#define KCLUSTER_CLIQUES_HPP

#include <utility>
#include <vector>

#include "kcluster/nir.hpp"

namespace kcluster {

// The ordered maximal cliques of an NIR form, top to bottom. Clique t
// (1-based) occurs at matrix row anchor_rows[t-1] and its members are
// exactly the nodes j <= a_t with stop(j) >= a_t. The sentinel Q_0 is the
// empty clique with anchor row 0.
struct CliqueSequence {
    std::vector<int> anchor_rows; // strictly increasing, last one is n
    std::vector<int> sizes;

    int count() const { return static_cast<int>(anchor_rows.size()); }
    int anchor(int t) const { return t == 0 ? 0 : anchor_rows[t - 1]; }
    int size(int t) const { return t == 0 ? 0 : sizes[t - 1]; }
};

// Members of the clique anchored at `row`, ascending.
std::vector<int> clique_members(const NirForm& f, int row);

// Extracts the clique sequence: a row anchors a maximal clique iff it is
// the last row, its diagonal has no chain below it (reach == 0), or some
// column's chain stops exactly there.
CliqueSequence maximal_cliques(const NirForm& f);

// Picks of a stair matrix, top to bottom: pick_rows[t-1] = a_t,
// pick_cols[t-1] = b_t, and the stair at pick t covers nodes b_t..a_t.
struct StairSet {
    std::vector<int> pick_rows;
    std::vector<int> pick_cols;

    int count() const { return static_cast<int>(pick_rows.size()); }
    int row(int t) const { return t == 0 ? 0 : pick_rows[t - 1]; }
    int col(int t) const { return pick_cols[t - 1]; }
    int clique_size(int t) const { return row(t) - col(t) + 1; }
};

// Extracts the picks of an SNIR matrix. The stairs induce exactly the
// cliques of maximal_cliques, member for member.
StairSet stairs(const SnirForm& f);

} // namespace kcluster

#endif // KCLUSTER_CLIQUES_HPP
