#ifndef KCLUSTER_NIR_HPP
#define KCLUSTER_NIR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "kcluster/errors.hpp"
#include "kcluster/realization.hpp"

namespace kcluster {

// Heaviside step: 1 for x >= 0, else 0.
constexpr int heaviside(std::int64_t x) { return x >= 0 ? 1 : 0; }

// Normal interval representation: node i (1-based) owns the half-open
// interval [i-1, i-1 + reach_i + 1) ... equivalently [i-1, stop(i)) with
// stop(i) = i + reach_i. reach_i counts how many of the later intervals
// intersect interval i, and the implied lower-triangular 0/1 matrix is
// entry(i, j) = H(stop(j) - i) for i > j. The matrix is never stored;
// everything is computed from `reach`.
struct NirForm {
    std::vector<int> reach; // reach[i-1] = x_i, 0 <= x_i <= n - i

    int n() const { return static_cast<int>(reach.size()); }

    // Row index where the chain of 1's under diagonal element i ends.
    int stop(int i) const { return i + reach[i - 1]; }

    // Well-formedness: n >= 1 and 1 <= i + x_i <= n for every i.
    bool well_formed() const;

    // Right endpoints non-decreasing: stop(i) <= stop(j) for i < j.
    bool stops_monotone() const;

    // The induced subgraph after deleting `node`, renumbered 1..n-1 with
    // the original order preserved. Works because each interval covers a
    // contiguous block of successors, so removing one node just closes
    // the gap.
    NirForm without_node(int node) const;
};

// An NIR form whose right endpoints are non-decreasing (the stair shape).
// Construction is the validity witness: adopt() refuses non-monotone input.
class SnirForm {
public:
    static std::optional<SnirForm> adopt(NirForm form) {
        if (!form.well_formed() || !form.stops_monotone()) return std::nullopt;
        return SnirForm(std::move(form));
    }
    static SnirForm require(NirForm form) {
        auto s = adopt(std::move(form));
        if (!s) throw ArgumentError("reach vector is not in stair form");
        return *std::move(s);
    }

    const NirForm& nir() const { return form_; }
    int n() const { return form_.n(); }
    int stop(int i) const { return form_.stop(i); }

private:
    explicit SnirForm(NirForm form) : form_(std::move(form)) {}
    NirForm form_;
};

// Result of converting a realization: the canonical form plus the node
// permutation. node_order[i-1] is the original input index of NIR node i.
struct NirConversion {
    NirForm form;
    std::vector<int> node_order;
};

struct SnirConversion {
    SnirForm form;
    std::vector<int> node_order;
};

// Converts an arbitrary closed-interval realization to NIR form. The
// conversion is purely combinatorial: endpoints are totally ordered with
// left endpoints before right endpoints at equal coordinates (ties within
// a kind break by input index), then each right endpoint snaps up to the
// next left endpoint. Adjacency is preserved exactly.
NirConversion to_nir(const IntervalRealization& r);

// As to_nir, but requires the input to be proper (no strict containment);
// the result then satisfies the stair property. Identical input intervals
// keep input order and receive equal right endpoints. Throws
// NotProperError with a witness pair otherwise.
SnirConversion to_snir(const IntervalRealization& r);

// Matrix entry: 1 iff i > j and stop(j) >= i. Indices are checked.
int nir_entry(const NirForm& f, int i, int j);

// Number of edges induced by `nodes` (set semantics; duplicates collapse):
// sum over pairs i > j in the set of H(stop(j) - i).
std::int64_t edge_count(const NirForm& f, const std::vector<int>& nodes);

} // namespace kcluster

#endif // KCLUSTER_NIR_HPP
