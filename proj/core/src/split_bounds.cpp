#include "kcluster/split_bounds.hpp"

#include <algorithm>
#include <numeric>

#include "kcluster/errors.hpp"
#include "kcluster/fenwick.hpp"

namespace kcluster {

SplitBoundsProper split_bounds_proper(const StairSet& s, int t) {
    if (t < 2 || t > s.count()) throw ArgumentError("split_bounds_proper: clique index out of range");
    const int a2 = s.row(t);      // a_t
    const int a1 = s.row(t - 1);  // a_{t-1}
    const int a0 = s.row(t - 2);  // a_{t-2}, 0 for t == 2
    const int b2 = s.col(t);      // b_t
    const int b1 = s.col(t - 1);  // b_{t-1}

    SplitBoundsProper out;
    out.deep_overlap = heaviside(a0 - b2) == 1;
    out.x_max = a2 - a1;
    if (out.deep_overlap) {
        out.y_max = a1 - a0;
        out.z_max = a0 - b2 + 1;
        out.w_max = b2 - b1;
        out.u_max = b1 - 1;
    } else {
        out.y_max = a1 - b2 + 1;
        out.z_max = b2 - a0 - 1;
        out.w_max = a0 - b1 + 1;
        out.u_max = b1 - 1;
    }
    return out;
}

SplitBoundsInterval split_bounds_interval_naive(const CliqueSequence& c, const NirForm& f, int t) {
    if (t < 2 || t > c.count()) {
        throw ArgumentError("split_bounds_interval: clique index out of range");
    }
    const int a2 = c.anchor(t);
    const int a1 = c.anchor(t - 1);
    const int a0 = c.anchor(t - 2);

    SplitBoundsInterval out;
    out.x_max = a2 - a1;
    out.y_max = 0;
    for (int l = a0 + 1; l <= a1; ++l) out.y_max += heaviside(f.stop(l) - a2);
    out.z_max = a1 - a0 - out.y_max;
    out.w_max = 0;
    out.u_max = 0;
    for (int l = 1; l <= a0; ++l) {
        out.w_max += heaviside(f.stop(l) - a2);
        out.u_max += heaviside(f.stop(l) - a1) * heaviside(a2 - f.stop(l) - 1);
    }
    out.v_max = a0 - out.w_max - out.u_max;
    return out;
}

SplitTable::SplitTable(const CliqueSequence& c, const NirForm& f) {
    const int m = c.count();
    const int n = f.n();
    if (m < 2) return;
    bounds_.resize(static_cast<std::size_t>(m) - 1);

    std::vector<int> by_stop(static_cast<std::size_t>(n));
    std::iota(by_stop.begin(), by_stop.end(), 1);
    std::sort(by_stop.begin(), by_stop.end(),
              [&](int a, int b) { return f.stop(a) > f.stop(b); });

    // Anchors shrink as t walks down, so each Fenwick absorbs every node
    // once. `hi` tracks stop >= a_t, `lo` tracks stop >= a_{t-1}.
    FenwickTree hi(n);
    FenwickTree lo(n);
    std::size_t next_hi = 0;
    std::size_t next_lo = 0;
    for (int t = m; t >= 2; --t) {
        const int a2 = c.anchor(t);
        const int a1 = c.anchor(t - 1);
        const int a0 = c.anchor(t - 2);
        while (next_hi < by_stop.size() && f.stop(by_stop[next_hi]) >= a2) {
            hi.add(by_stop[next_hi], 1);
            ++next_hi;
        }
        while (next_lo < by_stop.size() && f.stop(by_stop[next_lo]) >= a1) {
            lo.add(by_stop[next_lo], 1);
            ++next_lo;
        }

        SplitBoundsInterval& b = bounds_[static_cast<std::size_t>(t) - 2];
        b.x_max = a2 - a1;
        b.y_max = hi.range(a0 + 1, a1);
        b.z_max = a1 - a0 - b.y_max;
        b.w_max = hi.prefix(a0);
        b.u_max = lo.prefix(a0) - b.w_max;
        b.v_max = a0 - b.w_max - b.u_max;
    }
}

void apply_mutation(SplitBoundsProper& b, const SplitMutation& m) {
    switch (m.field) {
    case SplitMutation::Field::x_max: b.x_max += m.delta; break;
    case SplitMutation::Field::y_max: b.y_max += m.delta; break;
    case SplitMutation::Field::z_max: b.z_max += m.delta; break;
    case SplitMutation::Field::w_max: b.w_max += m.delta; break;
    case SplitMutation::Field::u_max: b.u_max += m.delta; break;
    case SplitMutation::Field::v_max: break; // no v region in the stair split
    }
}

void apply_mutation(SplitBoundsInterval& b, const SplitMutation& m) {
    switch (m.field) {
    case SplitMutation::Field::x_max: b.x_max += m.delta; break;
    case SplitMutation::Field::y_max: b.y_max += m.delta; break;
    case SplitMutation::Field::z_max: b.z_max += m.delta; break;
    case SplitMutation::Field::w_max: b.w_max += m.delta; break;
    case SplitMutation::Field::u_max: b.u_max += m.delta; break;
    case SplitMutation::Field::v_max: b.v_max += m.delta; break;
    }
}

} // namespace kcluster
