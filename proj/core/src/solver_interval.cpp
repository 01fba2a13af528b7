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

// Top-down evaluation of the general recurrence. State (t, j, x, s): best
// j-cluster on the first t cliques using exactly x nodes of Q_t \ Q_{t-1}
// and s nodes of Q_t and Q_{t-1}; s splits into y (inside the block
// (a_{t-2}, a_{t-1}]) plus w (below a_{t-2}) during expansion.
class IntervalDp {
public:
    IntervalDp(const NirForm& f, int maxj, bool connected, const SolveOptions& options)
        : form_(f),
          cliques_(maximal_cliques(f)),
          maxj_(maxj),
          connected_(connected),
          m_(cliques_.count()),
          bounds_(static_cast<std::size_t>(m_) + 1),
          xcap_(static_cast<std::size_t>(m_) + 1, 0),
          scap_(static_cast<std::size_t>(m_) + 1, 0) {
        const SplitTable table(cliques_, form_);
        xcap_[1] = std::min(cliques_.anchor(1), maxj_); // Q_1 is the prefix [1, a_1]
        for (int t = 2; t <= m_; ++t) {
            SplitBoundsInterval b = table.at(t);
            if (options.mutation) apply_mutation(b, *options.mutation);
            bounds_[static_cast<std::size_t>(t)] = b;
            xcap_[static_cast<std::size_t>(t)] = std::clamp(b.x_max, 0, maxj_);
            scap_[static_cast<std::size_t>(t)] = std::clamp(b.y_max + b.w_max, 0, maxj_);
        }
        store_.emplace(xcap_, scap_, maxj_);
    }

    int cliques() const { return m_; }
    int xcap(int t) const { return xcap_[static_cast<std::size_t>(t)]; }
    int scap(int t) const { return scap_[static_cast<std::size_t>(t)]; }
    std::int64_t states() const { return states_; }

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
            if (s == 0 && x == j) {
                best = DpValue::of(choose2(j));
                link.branch = Branch::base;
            }
        } else if (x + s == j) {
            best = DpValue::of(choose2(j));
            link.branch = Branch::base;
        } else if (connected_ && x > 0 && s == 0) {
            // Fresh nodes attach only through Q_t and Q_{t-1}.
        } else {
            const SplitBoundsInterval& b = bounds_[static_cast<std::size_t>(t)];
            const int rest = j - x - s; // nodes outside Q_t and its shared zone
            const std::int64_t gain = choose2(x) + static_cast<std::int64_t>(x) * s;
            const int ylo = std::max(0, s - b.w_max);
            const int yhi = std::min(b.y_max, s);
            for (int y = ylo; y <= yhi; ++y) {
                const int w = s - y;
                const int zcap = std::min(b.z_max, rest);
                for (int z = 0; z <= zcap; ++z) {
                    const int ucap = std::min(b.u_max, rest - z);
                    for (int u = 0; u <= ucap; ++u) {
                        const int v = rest - z - u;
                        if (v > b.v_max) continue;
                        const DpValue deep = eval(t - 1, j - x, y + z, w + u);
                        if (!deep.feasible) continue;
                        const std::int64_t cand = deep.edges + gain;
                        if (!best.feasible || cand > best.edges) {
                            best = DpValue::of(cand);
                            link = BackLink{Branch::expand, static_cast<std::int16_t>(y),
                                            static_cast<std::int16_t>(z), static_cast<std::int16_t>(w),
                                            static_cast<std::int16_t>(u), static_cast<std::int16_t>(v)};
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

    // Backlink walk. Within each region nodes of maximal reach win (ties to
    // the higher index); the immediate caller's (y, z) split of the fresh
    // block is honored exactly, deeper constraints are greedy and the
    // caller verifies the result.
    std::optional<std::vector<int>> reconstruct(int j, int x, int s) {
        std::vector<int> nodes;
        std::optional<std::pair<int, int>> directive; // (reach threshold, count at or above)
        int t = m_;
        while (true) {
            const int hi = cliques_.anchor(t);
            const int lo = cliques_.anchor(t - 1);
            if (directive) {
                const auto [threshold, above] = *directive;
                if (!pick_block(lo, hi, x, threshold, above, nodes)) return std::nullopt;
            } else {
                if (!pick_block(lo, hi, x, hi + 1, 0, nodes)) return std::nullopt;
                // threshold above every reach: the whole lot fills greedily
            }

            const BackLink link = link_of(t, j, x, s);
            if (link.branch == Branch::base) {
                // Shared lot: nodes at or below a_{t-1} whose chain reaches a_t.
                std::vector<int> pool;
                for (int node = 1; node <= lo; ++node) {
                    if (form_.stop(node) >= hi) pool.push_back(node);
                }
                if (s > static_cast<int>(pool.size())) return std::nullopt;
                sort_by_reach(pool);
                nodes.insert(nodes.end(), pool.begin(), pool.begin() + s);
                std::sort(nodes.begin(), nodes.end());
                return nodes;
            }
            if (link.branch != Branch::expand) {
                throw InternalError("reconstruction reached an unsolved dp state");
            }

            directive = std::make_pair(hi, static_cast<int>(link.y));
            j -= x;
            x = link.y + link.z;
            s = link.w + link.u;
            --t;
        }
    }

private:
    void sort_by_reach(std::vector<int>& pool) const {
        std::sort(pool.begin(), pool.end(), [this](int a, int b) {
            if (form_.stop(a) != form_.stop(b)) return form_.stop(a) > form_.stop(b);
            return a > b;
        });
    }

    // Chooses `count` nodes from the block (lo, hi], exactly `above` of
    // them with reach >= threshold, maximal reach first on both sides.
    bool pick_block(int lo, int hi, int count, int threshold, int above, std::vector<int>& out) {
        std::vector<int> reaching;
        std::vector<int> falling;
        for (int node = lo + 1; node <= hi; ++node) {
            (form_.stop(node) >= threshold ? reaching : falling).push_back(node);
        }
        const int below = count - above;
        if (above < 0 || below < 0) return false;
        if (above > static_cast<int>(reaching.size()) || below > static_cast<int>(falling.size())) {
            return false;
        }
        sort_by_reach(reaching);
        sort_by_reach(falling);
        out.insert(out.end(), reaching.begin(), reaching.begin() + above);
        out.insert(out.end(), falling.begin(), falling.begin() + below);
        return true;
    }

    const NirForm& form_;
    CliqueSequence cliques_;
    int maxj_;
    bool connected_;
    int m_;
    std::vector<SplitBoundsInterval> bounds_;
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

Aggregate aggregate(IntervalDp& dp, int k) {
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

std::optional<std::int64_t> interval_value_only(const NirForm& g, int k, bool connected,
                                                const SolveOptions& options) {
    IntervalDp dp(g, k, connected, options);
    const Aggregate a = aggregate(dp, k);
    if (!a.value.feasible) return std::nullopt;
    return a.value.edges;
}

void finish_witness(ClusterSolution& solution, IntervalDp& dp, const NirForm& f, int k,
                    bool connected, const SolveOptions& options, const Aggregate& best) {
    auto walked = dp.reconstruct(k, best.x, best.s);
    if (walked && static_cast<int>(walked->size()) == k &&
        edge_count(f, *walked) == best.value.edges) {
        solution.nodes = *std::move(walked);
        solution.stats.witness_verified = true;
        return;
    }
    solution.stats.fallback_reconstruction = true;
    solution.nodes = detail::reduce_witness(
        f, k, connected, best.value.edges,
        [&options](const NirForm& g, int kk, bool conn) {
            return interval_value_only(g, kk, conn, options);
        });
    solution.stats.witness_verified = static_cast<int>(solution.nodes.size()) == k &&
                                      edge_count(f, solution.nodes) == best.value.edges;
}

} // namespace

ClusterSolution solve_interval(const NirForm& f, int k, bool connected,
                               const SolveOptions& options) {
    if (f.n() < 1) throw ArgumentError("solve needs at least one node");
    if (k < 0) throw ArgumentError("k must be non-negative");
    if (k > f.n()) throw ArgumentError("k exceeds n");
    const auto started = std::chrono::steady_clock::now();

    IntervalDp dp(f, k, connected, options);
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

std::vector<ClusterSolution> solve_interval_all_k(const NirForm& f, bool connected,
                                                  const SolveOptions& options) {
    const int n = f.n();
    if (n < 1) throw ArgumentError("solve needs at least one node");
    const auto started = std::chrono::steady_clock::now();
    IntervalDp dp(f, n, connected, options);

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
