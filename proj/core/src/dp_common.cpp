#include "dp_common.hpp"

namespace kcluster::detail {

std::vector<int> reduce_witness(
    const NirForm& original, int k, bool connected, std::int64_t target,
    const std::function<std::optional<std::int64_t>(const NirForm&, int, bool)>& value_of) {
    NirForm cur = original;
    std::vector<int> alive(static_cast<std::size_t>(original.n()));
    for (int i = 0; i < original.n(); ++i) alive[static_cast<std::size_t>(i)] = i + 1;

    for (int pos = cur.n(); pos >= 1; --pos) {
        if (cur.n() <= k) break;
        NirForm candidate = cur.without_node(pos);
        const auto v = value_of(candidate, k, connected);
        if (v && *v == target) {
            cur = std::move(candidate);
            alive.erase(alive.begin() + (pos - 1));
        }
    }
    return alive;
}

bool fill_staircase(int lo, int hi, int count, std::vector<IndexQuota> in_range,
                    std::vector<int>& out) {
    if (count < 0 || count > hi - lo) return false;

    // Sort by boundary descending; equal boundaries must agree on the
    // required count or no placement exists.
    std::sort(in_range.begin(), in_range.end(),
              [](const IndexQuota& a, const IndexQuota& b) { return a.boundary > b.boundary; });
    for (std::size_t i = 1; i < in_range.size(); ++i) {
        if (in_range[i].boundary == in_range[i - 1].boundary &&
            in_range[i].required != in_range[i - 1].required) {
            return false;
        }
    }
    in_range.erase(std::unique(in_range.begin(), in_range.end(),
                               [](const IndexQuota& a, const IndexQuota& b) {
                                   return a.boundary == b.boundary;
                               }),
                   in_range.end());

    // Cells between consecutive boundaries, topmost first. Cell q spans
    // [boundary_q, prev_boundary) and must hold required_q - required_{q-1}
    // nodes; the leftover goes below the last boundary.
    int prev_required = 0;
    int cell_top = hi; // inclusive
    for (const IndexQuota& q : in_range) {
        if (q.boundary <= lo || q.boundary > hi) return false;
        const int cell_count = q.required - prev_required;
        const int width = cell_top - q.boundary + 1;
        if (cell_count < 0 || cell_count > width) return false;
        for (int node = cell_top; node > cell_top - cell_count; --node) out.push_back(node);
        prev_required = q.required;
        cell_top = q.boundary - 1;
    }
    const int rest = count - prev_required;
    const int width = cell_top - lo;
    if (rest < 0 || rest > width) return false;
    for (int node = cell_top; node > cell_top - rest; --node) out.push_back(node);
    return true;
}

} // namespace kcluster::detail
