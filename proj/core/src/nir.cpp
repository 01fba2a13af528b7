#include "kcluster/nir.hpp"

#include <algorithm>
#include <string>

namespace kcluster {

bool NirForm::well_formed() const {
    const int nn = n();
    if (nn < 1) return false;
    for (int i = 1; i <= nn; ++i) {
        if (reach[i - 1] < 0 || stop(i) > nn) return false;
    }
    return true;
}

bool NirForm::stops_monotone() const {
    for (int i = 1; i < n(); ++i) {
        if (stop(i) > stop(i + 1)) return false;
    }
    return true;
}

NirForm NirForm::without_node(int node) const {
    NirForm out;
    out.reach.reserve(reach.size() - 1);
    for (int i = 1; i <= n(); ++i) {
        if (i == node) continue;
        int x = reach[i - 1];
        if (i < node && node <= stop(i)) --x;
        out.reach.push_back(x);
    }
    return out;
}

namespace {

struct Endpoint {
    Rational coord;
    int kind; // 0 = left, 1 = right; lefts first at equal coordinates
    int node; // 1-based input index
};

} // namespace

NirConversion to_nir(const IntervalRealization& r) {
    const int n = r.n();
    if (n < 1) throw ArgumentError("empty realization");

    std::vector<Endpoint> events;
    events.reserve(2 * static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) {
        events.push_back(Endpoint{r.at(v).left, 0, v});
        events.push_back(Endpoint{r.at(v).right, 1, v});
    }
    std::sort(events.begin(), events.end(), [](const Endpoint& a, const Endpoint& b) {
        if (a.coord != b.coord) return a.coord < b.coord;
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.node < b.node;
    });

    // One pass: left events take the next NIR position; a right event snaps
    // up to the next left endpoint, which in rank terms is just the number
    // of left endpoints seen so far.
    std::vector<int> nir_index(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> snapped_right(static_cast<std::size_t>(n) + 1, 0);
    int lefts_seen = 0;
    for (const Endpoint& e : events) {
        if (e.kind == 0) {
            nir_index[static_cast<std::size_t>(e.node)] = ++lefts_seen;
        } else {
            snapped_right[static_cast<std::size_t>(e.node)] = lefts_seen;
        }
    }

    NirConversion out;
    out.form.reach.assign(static_cast<std::size_t>(n), 0);
    out.node_order.assign(static_cast<std::size_t>(n), 0);
    for (int v = 1; v <= n; ++v) {
        const int i = nir_index[static_cast<std::size_t>(v)];
        out.form.reach[static_cast<std::size_t>(i) - 1] = snapped_right[static_cast<std::size_t>(v)] - i;
        out.node_order[static_cast<std::size_t>(i) - 1] = v;
    }
    return out;
}

SnirConversion to_snir(const IntervalRealization& r) {
    if (const auto pair = containment_witness(r)) {
        throw NotProperError("realization is not proper: interval " +
                                 std::to_string(pair->first) + " strictly contains interval " +
                                 std::to_string(pair->second),
                             pair->first, pair->second);
    }
    NirConversion nir = to_nir(r);
    auto snir = SnirForm::adopt(std::move(nir.form));
    if (!snir) {
        throw InternalError("proper realization converted to a non-stair NIR form");
    }
    return SnirConversion{*std::move(snir), std::move(nir.node_order)};
}

int nir_entry(const NirForm& f, int i, int j) {
    const int n = f.n();
    if (i < 1 || i > n || j < 1 || j > n) {
        throw ArgumentError("nir_entry index out of range");
    }
    if (i <= j) return 0;
    return heaviside(f.stop(j) - i);
}

std::int64_t edge_count(const NirForm& f, const std::vector<int>& nodes) {
    const int n = f.n();
    std::vector<int> set = nodes;
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (!set.empty() && (set.front() < 1 || set.back() > n)) {
        throw ArgumentError("edge_count node index out of range");
    }

    // Node j reaches exactly the block (j, stop(j)], so count set members
    // in that block for each j.
    std::int64_t total = 0;
    for (std::size_t idx = 0; idx < set.size(); ++idx) {
        const int j = set[idx];
        const auto hi = std::upper_bound(set.begin(), set.end(), f.stop(j));
        total += (hi - set.begin()) - static_cast<std::int64_t>(idx) - 1;
    }
    return total;
}

} // namespace kcluster
