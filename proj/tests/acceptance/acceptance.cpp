// Acceptance suite: one check per command line criterion, each printing a
// single PASS/FAIL line. Exit status is the conjunction of everything run.
//
// Outcome note, recorded here on purpose: criterion 1 holds, and criterion
// 2 does not. Both recurrences carry too little state to stay exact on
// every instance (the shared count handed to the previous clique no longer
// says how far those nodes reach): the general one first fails at nine
// nodes, the stair one at ten. The differential run finds the value
// overcounts, prints their minimized records, and this suite reports the
// failure instead of hiding it. Criterion 3 inherits the same instances:
// an overclaimed value has no witness.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "kcluster/cliques.hpp"
#include "kcluster/harness.hpp"
#include "kcluster/instance_gen.hpp"
#include "kcluster/nir.hpp"
#include "kcluster/oracle.hpp"
#include "kcluster/realization.hpp"
#include "kcluster/solver.hpp"
#include "kcluster/split_bounds.hpp"

namespace {

using namespace kcluster;

constexpr std::uint64_t kSeed = 1;

struct Outcome {
    bool pass;
    std::string detail;
};

void print_record(const Counterexample& r) {
    std::string reach;
    for (std::size_t i = 0; i < r.reach.size(); ++i) {
        reach += (i ? "," : "") + std::to_string(r.reach[i]);
    }
    std::printf("    counterexample %s/%s reach=[%s] k=%d connected=%d dp=%s oracle=%s\n",
                r.algorithm.c_str(), r.kind.c_str(), reach.c_str(), r.k, r.connected ? 1 : 0,
                r.dp_value ? std::to_string(*r.dp_value).c_str() : "infeasible",
                r.oracle_value ? std::to_string(*r.oracle_value).c_str() : "infeasible");
}

struct Context {
    bool have_c1 = false;
    bool have_c2 = false;
    FuzzReport c1;
    FuzzReport c2;

    const FuzzReport& exhaustive() {
        if (!have_c1) {
            FuzzConfig config;
            config.exhaustive_n = 7;
            c1 = run_fuzz(config);
            have_c1 = true;
        }
        return c1;
    }

    const FuzzReport& randomized() {
        if (!have_c2) {
            FuzzConfig config;
            config.trials = 10000;
            config.rand_n_min = 8;
            config.rand_n_max = 14;
            config.seed = kSeed;
            c2 = run_fuzz(config);
            have_c2 = true;
        }
        return c2;
    }
};

Outcome criterion1(Context& ctx) {
    const auto& report = ctx.exhaustive();
    for (const auto& record : report.records) print_record(record);
    const bool pass = report.disagreements == 0;
    return Outcome{pass, "instances=" + std::to_string(report.instances) +
                             " comparisons=" + std::to_string(report.comparisons) +
                             " disagreements=" + std::to_string(report.disagreements)};
}

Outcome criterion2(Context& ctx) {
    const auto& report = ctx.randomized();
    int shown = 0;
    for (const auto& record : report.records) {
        if (record.kind != "value") continue;
        if (++shown > 8) break;
        print_record(record);
    }
    const bool pass = report.disagreements == 0;
    return Outcome{pass, "instances=" + std::to_string(report.instances) +
                             " disagreements=" + std::to_string(report.disagreements) +
                             " skipped=" + std::to_string(report.skipped)};
}

Outcome criterion3(Context& ctx) {
    const auto& a = ctx.exhaustive();
    const auto& b = ctx.randomized();
    for (const auto& record : b.records) {
        if (record.kind == "witness") print_record(record);
    }
    const auto total = a.soundness_violations + b.soundness_violations;
    return Outcome{total == 0,
                   "violations=" + std::to_string(total) + " (exhaustive " +
                       std::to_string(a.soundness_violations) + ", randomized " +
                       std::to_string(b.soundness_violations) + ")"};
}

Outcome criterion4(Context&) {
    std::int64_t instances = 0;
    std::int64_t clique_mismatches = 0;
    std::int64_t stair_mismatches = 0;
    for (int n = 1; n <= 8; ++n) {
        CanonicalEnumerator stream(n);
        while (auto form = stream.next()) {
            ++instances;
            const auto cliques = maximal_cliques(*form);
            std::vector<std::vector<int>> mine;
            for (int t = 1; t <= cliques.count(); ++t) {
                mine.push_back(clique_members(*form, cliques.anchor(t)));
            }
            if (mine != brute_force_cliques(*form)) ++clique_mismatches;

            if (!form->stops_monotone()) continue;
            const auto picks = stairs(SnirForm::require(*form));
            bool same = picks.count() == cliques.count();
            for (int t = 1; same && t <= picks.count(); ++t) {
                std::vector<int> block;
                for (int v = picks.col(t); v <= picks.row(t); ++v) block.push_back(v);
                same = picks.row(t) == cliques.anchor(t) &&
                       block == clique_members(*form, cliques.anchor(t));
            }
            if (!same) ++stair_mismatches;
        }
    }
    return Outcome{clique_mismatches == 0 && stair_mismatches == 0,
                   "instances=" + std::to_string(instances) +
                       " clique_mismatches=" + std::to_string(clique_mismatches) +
                       " stair_mismatches=" + std::to_string(stair_mismatches)};
}

Outcome criterion5(Context&) {
    SplitMix rng(kSeed);
    std::int64_t failures = 0;
    const std::int64_t trials = 10000;
    for (std::int64_t trial = 0; trial < trials; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(12));
        IntervalRealization r;
        const auto shape = rng.below(4);
        if (shape == 0) {
            // coarse grid: shared and touching endpoints everywhere
            const std::int64_t grid = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n) + 1));
            for (int i = 0; i < n; ++i) {
                std::int64_t a = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(grid) + 1));
                std::int64_t b = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(grid) + 1));
                if (b < a) std::swap(a, b);
                r.intervals.push_back(ClosedInterval{Rational(a), Rational(b)});
            }
        } else if (shape == 1) {
            // identical intervals plus a chain of touching ones
            const std::int64_t base = static_cast<std::int64_t>(rng.below(5));
            for (int i = 0; i < n; ++i) {
                if (i % 2 == 0) {
                    r.intervals.push_back(ClosedInterval{Rational(base), Rational(base + 2)});
                } else {
                    r.intervals.push_back(
                        ClosedInterval{Rational(base + i), Rational(base + i + 1)});
                }
            }
        } else if (shape == 2) {
            // rational endpoints with degenerate points mixed in
            for (int i = 0; i < n; ++i) {
                const std::int64_t a = static_cast<std::int64_t>(rng.below(20));
                const std::int64_t len = static_cast<std::int64_t>(rng.below(3));
                r.intervals.push_back(
                    ClosedInterval{Rational(a, 2), Rational(a + 2 * len, 2)});
            }
        } else {
            GenSpec spec;
            spec.n = n;
            spec.cls = GraphClass::proper;
            spec.seed = rng.next();
            r = gen_random(spec);
        }

        const auto conv = to_nir(r);
        bool ok = conv.form.well_formed();
        for (int i = 1; ok && i <= n; ++i) {
            for (int j = i + 1; ok && j <= n; ++j) {
                const bool want = intersects(r.at(conv.node_order[i - 1]),
                                             r.at(conv.node_order[j - 1]));
                const bool got = conv.form.stop(i) >= j;
                ok = want == got;
            }
        }
        if (ok && is_proper(r)) {
            const auto snir = to_snir(r);
            ok = snir.form.nir().stops_monotone();
        }
        if (!ok) ++failures;
    }
    return Outcome{failures == 0, "trials=" + std::to_string(trials) +
                                      " failures=" + std::to_string(failures)};
}

Outcome criterion6(Context&) {
    std::int64_t failures = 0;
    for (int n = 1; n <= 24; ++n) {
        std::vector<int> reach;
        for (int i = 0; i < n; ++i) reach.push_back(n - 1 - i);
        const NirForm complete{reach};
        if (maximal_cliques(complete).count() != 1) ++failures;
        const auto snir = SnirForm::require(complete);
        for (int k = 0; k <= n; ++k) {
            const std::int64_t want = static_cast<std::int64_t>(k) * (k - 1) / 2;
            const auto a = solve_proper(snir, k, false);
            const auto b = solve_interval(complete, k, true);
            if (!a.feasible() || *a.value != want) ++failures;
            if (!b.feasible() || *b.value != want) ++failures;
        }
    }
    return Outcome{failures == 0, "failures=" + std::to_string(failures)};
}

Outcome criterion7(Context&) {
    std::string detail;
    bool pass = true;

    const auto median_for = [](GraphClass cls, int n, int k) {
        std::vector<std::int64_t> samples;
        for (std::uint64_t instance = 0; instance < 3; ++instance) {
            const auto rows = run_bench({n}, {k}, cls, false, 7, kSeed + instance);
            samples.push_back(rows.at(0).median_ns);
        }
        std::sort(samples.begin(), samples.end());
        return samples[samples.size() / 2];
    };

    for (const auto cls : {GraphClass::proper, GraphClass::interval}) {
        const char* name = cls == GraphClass::proper ? "proper" : "interval";
        const auto t200 = median_for(cls, 200, 6);
        const auto t400 = median_for(cls, 400, 6);
        const auto t800 = median_for(cls, 800, 6);
        const double r1 = static_cast<double>(t400) / static_cast<double>(t200);
        const double r2 = static_cast<double>(t800) / static_cast<double>(t400);
        const bool linear = r1 >= 1.3 && r1 <= 3.5 && r2 >= 1.3 && r2 <= 3.5;
        pass = pass && linear;
        detail += std::string(name) + " n-ratios " + std::to_string(r1).substr(0, 4) + "/" +
                  std::to_string(r2).substr(0, 4) + (linear ? " ok" : " OUT") + "; ";
    }
    {
        // Doubling k must cost more than doubling the time. Measured on the
        // general solver, whose per-step enumeration shows the growth well
        // above the fixed per-solve setup cost at this size.
        const auto t4 = median_for(GraphClass::interval, 400, 4);
        const auto t8 = median_for(GraphClass::interval, 400, 8);
        const double growth = static_cast<double>(t8) / static_cast<double>(t4);
        const bool superlinear = growth > 2.0;
        pass = pass && superlinear;
        detail += "k-growth x" + std::to_string(growth).substr(0, 4) +
                  (superlinear ? " ok" : " OUT");
    }
    return Outcome{pass, detail};
}

Outcome criterion8(Context&) {
    const std::pair<SplitMutation, const char*> mutations[] = {
        {{SplitMutation::Field::x_max, +1}, "fresh-block count +1"},
        {{SplitMutation::Field::y_max, +1}, "shared-block count +1"},
        {{SplitMutation::Field::z_max, -1}, "leftover-block count -1"},
        {{SplitMutation::Field::w_max, +1}, "deep-shared count +1"},
        {{SplitMutation::Field::u_max, -1}, "dropped-shared count -1"},
        {{SplitMutation::Field::v_max, -1}, "remainder count -1"},
    };
    int caught = 0;
    std::string detail;
    for (const auto& [mutation, name] : mutations) {
        FuzzConfig config;
        config.exhaustive_n = 5;
        config.solver_options.mutation = mutation;
        const auto report = run_fuzz(config);
        const bool hit = !report.clean();
        caught += hit ? 1 : 0;
        detail += std::string(name) + (hit ? " caught; " : " MISSED; ");
    }
    return Outcome{caught == 6, detail + std::to_string(caught) + "/6"};
}

using Criterion = Outcome (*)(Context&);

struct Entry {
    int number;
    const char* title;
    Criterion fn;
};

const Entry kCriteria[] = {
    {1, "exhaustive small-instance optimality (n <= 7, every k, both modes)", criterion1},
    {2, "randomized optimality (10000 instances, n in 8..14, every k)", criterion2},
    {3, "witness soundness on every solve of criteria 1-2", criterion3},
    {4, "clique structure against brute force (n <= 8) and stair bijection", criterion4},
    {5, "conversion preserves adjacency on 10000 tied realizations", criterion5},
    {6, "closed forms on complete graphs and single-stair instances", criterion6},
    {7, "complexity observables: linear in n at fixed k, superlinear in k", criterion7},
    {8, "mutation sensitivity of the differential harness", criterion8},
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[i + 1]);
        }
    }

    Context ctx;
    bool all_pass = true;
    for (const auto& entry : kCriteria) {
        if (only != 0 && entry.number != only) continue;
        const Outcome outcome = entry.fn(ctx);
        all_pass = all_pass && outcome.pass;
        std::printf("%s criterion %d: %s [%s]\n", outcome.pass ? "PASS" : "FAIL", entry.number,
                    entry.title, outcome.detail.c_str());
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
