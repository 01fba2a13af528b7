#ifndef KCLUSTER_DP_COMMON_HPP
#define KCLUSTER_DP_COMMON_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "kcluster/errors.hpp"
#include "kcluster/nir.hpp"

namespace kcluster::detail {

constexpr std::int64_t choose2(std::int64_t v) { return v < 2 ? 0 : v * (v - 1) / 2; }

// A dp state's value. Infeasibility is a distinct case rather than a
// sentinel integer; `edges` is meaningless unless `feasible`.
struct DpValue {
    bool feasible = false;
    std::int64_t edges = 0;

    static DpValue none() { return DpValue{}; }
    static DpValue of(std::int64_t e) { return DpValue{true, e}; }
};

enum class Branch : std::uint8_t {
    unset = 0,
    base,   // all j nodes inside the current clique
    expand, // recursed with the recorded tuple
    dead,   // infeasible
};

struct BackLink {
    Branch branch = Branch::unset;
    std::int16_t y = 0, z = 0, w = 0, u = 0, v = 0; // v unused by the stair dp
};

struct DpEntry {
    std::int64_t edges = 0;
    BackLink link;
    std::uint8_t status = 0; // 0 unvisited, 1 feasible, 2 infeasible
};

// Ragged memo over states (level t, size j, fresh x, shared s): the x and
// s dimensions are clipped per level, which keeps the table near
// (n + m) * k^2 entries instead of m * k^3.
class DpStore {
public:
    DpStore(const std::vector<int>& xcap, const std::vector<int>& scap, int maxj) {
        const std::size_t levels = xcap.size(); // index 0 unused
        xdim_.assign(levels, 0);
        sdim_.assign(levels, 0);
        offset_.assign(levels, 0);
        std::size_t total = 0;
        for (std::size_t t = 1; t < levels; ++t) {
            xdim_[t] = static_cast<std::size_t>(std::max(xcap[t], 0)) + 1;
            sdim_[t] = static_cast<std::size_t>(std::max(scap[t], 0)) + 1;
            offset_[t] = total;
            total += static_cast<std::size_t>(maxj + 1) * xdim_[t] * sdim_[t];
        }
        if (total > kMaxEntries) {
            throw BudgetError("dp table would need " + std::to_string(total) +
                              " states; reduce k or raise the limit");
        }
        entries_.resize(total);
    }

    DpEntry& at(int t, int j, int x, int s) {
        const std::size_t st = static_cast<std::size_t>(t);
        return entries_[offset_[st] +
                        ((static_cast<std::size_t>(j) * xdim_[st] + static_cast<std::size_t>(x)) *
                             sdim_[st] +
                         static_cast<std::size_t>(s))];
    }

private:
    static constexpr std::size_t kMaxEntries = std::size_t(1) << 26;

    std::vector<std::size_t> xdim_;
    std::vector<std::size_t> sdim_;
    std::vector<std::size_t> offset_;
    std::vector<DpEntry> entries_;
};

// Deterministic fallback witness: starting from the full form, delete the
// highest-indexed node whose removal keeps the k-cluster value at
// `target`, one descending pass. Ends with exactly k nodes whenever
// `value_of` is consistent. Returns indices into the ORIGINAL form.
std::vector<int> reduce_witness(
    const NirForm& original, int k, bool connected, std::int64_t target,
    const std::function<std::optional<std::int64_t>(const NirForm&, int, bool)>& value_of);

// Exact-count placement used by the reconstruction walks: fills `count`
// nodes into the index range (lo, hi], honoring quotas that demand an
// exact number of chosen nodes at-or-above each boundary. Highest indices
// win inside every cell. Returns false when the quotas cannot be met.
struct IndexQuota {
    int boundary;
    int required;
};

bool fill_staircase(int lo, int hi, int count, std::vector<IndexQuota> in_range,
                    std::vector<int>& out);

} // namespace kcluster::detail

#endif // KCLUSTER_DP_COMMON_HPP
