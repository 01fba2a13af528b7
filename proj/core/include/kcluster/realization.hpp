#ifndef KCLUSTER_REALIZATION_HPP
#define KCLUSTER_REALIZATION_HPP

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "kcluster/rational.hpp"

namespace kcluster {

// One closed interval [left, right] on the rational line. Degenerate
// points (left == right) are allowed.
struct ClosedInterval {
    Rational left;
    Rational right;
};

// Closed intervals intersect iff neither ends before the other begins.
inline bool intersects(const ClosedInterval& a, const ClosedInterval& b) {
    return a.left <= b.right && b.left <= a.right;
}

// Whether `outer` contains `inner` strictly as a point set (subset and
// not equal). Identical intervals do not contain each other strictly.
inline bool contains_strictly(const ClosedInterval& outer, const ClosedInterval& inner) {
    if (!(outer.left <= inner.left && inner.right <= outer.right)) return false;
    return outer.left != inner.left || outer.right != inner.right;
}

// An interval realization: one closed interval per node, nodes numbered
// 1..n in input order.
struct IntervalRealization {
    std::vector<ClosedInterval> intervals;

    int n() const { return static_cast<int>(intervals.size()); }
    const ClosedInterval& at(int node) const { return intervals[node - 1]; }
};

// Parses the instance document: first non-comment line `n`, then n lines
// `left right` (integers or Rationals `p/q`). Lines starting with `#` are
// comments. Throws ParseError naming the offending physical line.
IntervalRealization parse_realization(std::string_view text);

// Searches for a strict containment pair. Returns (container, contained)
// as 1-based input indices, or nullopt when the realization is proper.
// The witness is deterministic: the leftmost-widest interval that strictly
// contains another, paired with its innermost contained interval.
std::optional<std::pair<int, int>> containment_witness(const IntervalRealization& r);

// Fast check used by class=auto dispatch: true iff no interval strictly
// contains another.
bool is_proper(const IntervalRealization& r);

} // namespace kcluster

#endif // KCLUSTER_REALIZATION_HPP
