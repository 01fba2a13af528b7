#include <algorithm>
#include <chrono>
#include <optional>

#include "dp_common.hpp"
#include "kcluster/cliques.hpp"
#include "kcluster/solver.hpp"
#include "kcluster/split_bounds.hpp"

namespace kcluster {

namespace {

using detail::BackLink;
using detail::Branch;
using detail::choose2;
using detail::DpEntry;
using detail::DpStore;
using detail::DpValue;
using detail::IndexQuota;

// Top-down evaluation of the stair-form recurrence. State (t, j, x, s):
// best j-cluster on the first t cliques using exactly x nodes of
// Q_t \ Q_{t-1} and s nodes of Q_t and Q_{t-1}.
class StairDp {
public:
    StairDp(const SnirForm& f, int maxj, bool connected, const SolveOptions& options)
        : form_(f),
          picks_(stairs(f)),
          maxj_(maxj),
          connected_(connected),
          m_(picks_.count()),
          bounds_(static_cast<std::size_t>(m_) + 1),
          xcap_(static_cast<std::size_t>(m_) + 1, 0),
          scap_(static_cast<std::size_t>(m_) + 1, 0) {
        xcap_[1] = std::min(picks_.row(1), maxj_); // Q_1 is the prefix [1, a_1]
        for (int t = 2; t <= m_; ++t) {
            SplitBoundsProper b = split_bounds_proper(picks_, t);
            if (options.mutation) apply_mutation(b, *options.mutation);
            bounds_[static_cast<std::size_t>(t)] = b;
            xcap_[static_cast<std::size_t>(t)] = std::clamp(b.x_max, 0, maxj_);
            const int shared = b.deep_overlap ? b.y_max + b.z_max : b.y_max;
            scap_[static_cast<std::size_t>(t)] = std::clamp(shared, 0, maxj_);
        }
        store_.emplace(xcap_, scap_, maxj_);
    }

    int cliques() const { return m_; }
    int xcap(int t) const { return xcap_[static_cast<std::size_t>(t)]; }
    int scap(int t) const { return scap_[static_cast<std::size_t>(t)]; }
    std::int64_t states() const { return states_; }
    const StairSet& picks() const { return picks_; }

    DpValue eval(int t, int j, int x, int s) {
        if (x < 0 || s < 0 || x + s > j) return DpValue::none();
        if (x > xcap(t) || s > scap(t)) return DpValue::none();

        DpEntry& e = store_->at(t, j, x, s);
        if (e.status == 1) return DpValue::of(e.edges);
        if (e.status == 2) return DpValue::none();
        ++states_;

        DpValue best = DpValue::none();
        BackLink link;

        if (t == 1) {
            // Single stair: the j nodes must all come from Q_1.
            if (s == 0 && x == j) {
                best = DpValue::of(choose2(j));
                link.branch = Branch::base;
            }
        } else if (x + s == j) {
            // Everything fits inside Q_t, so take a subclique.
            best = DpValue::of(choose2(j));
            link.branch = Branch::base;
        } else if (connected_ && x > 0 && s == 0) {
            // Fresh nodes reach the rest only through Q_t and Q_{t-1}.
        } else {
            const SplitBoundsProper& b = bounds_[static_cast<std::size_t>(t)];
            const int rest = j - x - s; // nodes taken strictly below the shared zone
            const std::int64_t gain = choose2(x) + static_cast<std::int64_t>(x) * s;
            if (b.deep_overlap) {
                // Shared zone splits as s = y + z with z inside Q_{t-2}.
                const int ylo = std::max(0, s - b.z_max);
                const int yhi = std::min(b.y_max, s);
                for (int y = ylo; y <= yhi; ++y) {
                    const int z = s - y;
                    const int wcap = std::min(b.w_max, rest);
                    for (int w = 0; w <= wcap; ++w) {
                        const int u = rest - w;
                        if (u > b.u_max) continue;
                        const DpValue deep = eval(t - 1, j - x, y, z + w);
                        if (!deep.feasible) continue;
                        const std::int64_t cand = deep.edges + gain;
                        if (!best.feasible || cand > best.edges) {
                            best = DpValue::of(cand);
                            link = BackLink{Branch::expand, static_cast<std::int16_t>(y),
                                            static_cast<std::int16_t>(z), static_cast<std::int16_t>(w),
                                            static_cast<std::int16_t>(u), 0};
                        }
                    }
                }
            } else {
                // Disjoint case: the whole shared zone is the y region.
                const int y = s;
                if (y <= b.y_max) {
                    const int zcap = std::min(b.z_max, rest);
                    for (int z = 0; z <= zcap; ++z) {
                        const int wcap = std::min(b.w_max, rest - z);
                        for (int w = 0; w <= wcap; ++w) {
                            const int u = rest - z - w;
                            if (u > b.u_max) continue;
                            const DpValue deep = eval(t - 1, j - x, y + z, w);
                            if (!deep.feasible) continue;
                            const std::int64_t cand = deep.edges + gain;
                            if (!best.feasible || cand > best.edges) {
                                best = DpValue::of(cand);
                                link = BackLink{Branch::expand, static_cast<std::int16_t>(y),
                                                static_cast<std::int16_t>(z),
                                                static_cast<std::int16_t>(w),
                                                static_cast<std::int16_t>(u), 0};
                            }
                        }
                    }
                }
            }
        }

        if (best.feasible) {
            e.status = 1;
            e.edges = best.edges;
            e.link = link;
        } else {
            e.status = 2;
            e.link.branch = Branch::dead;
        }
        return best;
    }

    const BackLink& link_of(int t, int j, int x, int s) { return store_->at(t, j, x, s).link; }

    // Walks the backlinks, materializing the fresh lot of each level as the
    // highest-indexed nodes of its block subject to the exact-count quotas
    // accumulated from the shallower levels. Returns nullopt when the
    // bookkeeping cannot be realized by any placement.
    std::optional<std::vector<int>> reconstruct(int j, int x, int s) {
        std::vector<int> nodes;
        std::vector<IndexQuota> quotas;
        int t = m_;
        while (true) {
            const int hi = picks_.row(t);
            const int lo = picks_.row(t - 1);

            // Split quotas around this block: boundaries above the block are
            // out of reach for every remaining node, boundaries inside it are
            // settled here, boundaries below decrement by the whole lot.
            std::vector<IndexQuota> in_range;
            std::vector<IndexQuota> below;
            for (const IndexQuota& q : quotas) {
                if (q.boundary > hi) {
                    if (q.required != 0) return std::nullopt;
                } else if (q.boundary > lo) {
                    in_range.push_back(q);
                } else {
                    below.push_back(IndexQuota{q.boundary, q.required - x});
                    if (below.back().required < 0) return std::nullopt;
                }
            }
            if (!detail::fill_staircase(lo, hi, x, std::move(in_range), nodes)) {
                return std::nullopt;
            }

            const BackLink link = link_of(t, j, x, s);
            if (link.branch == Branch::base) {
                // The shared lot [b_t, a_{t-1}] closes out the walk.
                const int slo = picks_.col(t) - 1;
                std::vector<IndexQuota> shared_range;
                for (const IndexQuota& q : below) {
                    if (q.boundary > slo) {
                        shared_range.push_back(q);
                    } else if (q.required != s) {
                        return std::nullopt;
                    }
                }
                if (!detail::fill_staircase(slo, lo, s, std::move(shared_range), nodes)) {
                    return std::nullopt;
                }
                std::sort(nodes.begin(), nodes.end());
                return nodes;
            }
            if (link.branch != Branch::expand) {
                throw InternalError("reconstruction reached an unsolved dp state");
            }

            below.push_back(IndexQuota{picks_.col(t), s});
            quotas = std::move(below);
            const SplitBoundsProper& b = bounds_[static_cast<std::size_t>(t)];
            const int deep_fresh = link.y + (b.deep_overlap ? 0 : link.z);
            const int deep_shared = (b.deep_overlap ? link.z : 0) + link.w;
            j -= x;
            x = deep_fresh;
            s = deep_shared;
            --t;
        }
    }

private:
    const SnirForm& form_;
    StairSet picks_;
    int maxj_;
    bool connected_;
    int m_;
    std::vector<SplitBoundsProper> bounds_;
    std::vector<int> xcap_;
    std::vector<int> scap_;
    std::optional<DpStore> store_;
    std::int64_t states_ = 0;
};

struct Aggregate {
    DpValue value;
    int x = 0;
    int s = 0;
};

Aggregate aggregate(StairDp& dp, int k) {
    Aggregate best;
    const int m = dp.cliques();
    for (int x = 0; x <= std::min(k, dp.xcap(m)); ++x) {
        for (int s = 0; s + x <= k && s <= dp.scap(m); ++s) {
            const DpValue v = dp.eval(m, k, x, s);
            if (!v.feasible) continue;
            if (!best.value.feasible || v.edges > best.value.edges) {
                best = Aggregate{v, x, s};
            }
        }
    }
    return best;
}

std::optional<std::int64_t> proper_value_only(const NirForm& g, int k, bool connected,
                                              const SolveOptions& options) {
    const auto snir = SnirForm::adopt(g);
    if (!snir) throw InternalError("node deletion broke the stair property");
    StairDp dp(*snir, k, connected, options);
    const Aggregate a = aggregate(dp, k);
    if (!a.value.feasible) return std::nullopt;
    return a.value.edges;
}

void finish_witness(ClusterSolution& solution, StairDp& dp, const SnirForm& f, int k,
                    bool connected, const SolveOptions& options, const Aggregate& best) {
    auto walked = dp.reconstruct(k, best.x, best.s);
    if (walked && static_cast<int>(walked->size()) == k &&
        edge_count(f.nir(), *walked) == best.value.edges) {
        solution.nodes = *std::move(walked);
        solution.stats.witness_verified = true;
        return;
    }
    // The dp bookkeeping was not realizable by region placement; rebuild
    // the witness by value-preserving deletion.
    solution.stats.fallback_reconstruction = true;
    solution.nodes = detail::reduce_witness(
        f.nir(), k, connected, best.value.edges,
        [&options](const NirForm& g, int kk, bool conn) {
            return proper_value_only(g, kk, conn, options);
        });
    solution.stats.witness_verified =
        static_cast<int>(solution.nodes.size()) == k &&
        edge_count(f.nir(), solution.nodes) == best.value.edges;
}

} // namespace

ClusterSolution solve_proper(const SnirForm& f, int k, bool connected,
                             const SolveOptions& options) {
    if (f.n() < 1) throw ArgumentError("solve needs at least one node");
    if (k < 0) throw ArgumentError("k must be non-negative");
    if (k > f.n()) throw ArgumentError("k exceeds n");
    const auto started = std::chrono::steady_clock::now();

    StairDp dp(f, k, connected, options);
    const Aggregate best = aggregate(dp, k);

    ClusterSolution solution;
    solution.k = k;
    solution.connected = connected;
    if (best.value.feasible) {
        solution.value = best.value.edges;
        if (!options.value_only) {
            finish_witness(solution, dp, f, k, connected, options, best);
        }
    }
    solution.stats.states = dp.states();
    solution.stats.elapsed_ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() -
                                                             started)
            .count();
    return solution;
}

std::vector<ClusterSolution> solve_proper_all_k(const SnirForm& f, bool connected,
                                                const SolveOptions& options) {
    const int n = f.n();
    if (n < 1) throw ArgumentError("solve needs at least one node");
    const auto started = std::chrono::steady_clock::now();
    StairDp dp(f, n, connected, options);

    std::vector<ClusterSolution> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        const Aggregate best = aggregate(dp, k);
        ClusterSolution solution;
        solution.k = k;
        solution.connected = connected;
        if (best.value.feasible) {
            solution.value = best.value.edges;
            if (!options.value_only) {
                finish_witness(solution, dp, f, k, connected, options, best);
            }
        }
        solution.stats.states = dp.states();
        solution.stats.elapsed_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                                        std::chrono::steady_clock::now() - started)
                                        .count();
        out.push_back(std::move(solution));
    }
    return out;
}

} // namespace kcluster
