#include "kcluster/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "kcluster/errors.hpp"
#include "kcluster/oracle.hpp"

namespace kcluster {

namespace {

std::string reach_digest(const std::vector<int>& reach) {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : reach) {
        h ^= static_cast<std::uint64_t>(x) + 1;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

struct Mismatch {
    int k;
    std::optional<std::int64_t> dp_value;
    std::optional<std::int64_t> oracle_value;
    std::vector<int> dp_nodes;
    std::vector<int> oracle_nodes;
};

std::optional<std::int64_t> dp_value(const NirForm& f, const std::string& algorithm, int k,
                                     bool connected, const SolveOptions& base) {
    SolveOptions options = base;
    options.value_only = true;
    if (algorithm == "proper") {
        const auto snir = SnirForm::adopt(f);
        if (!snir) return std::nullopt;
        return solve_proper(*snir, k, connected, options).value;
    }
    return solve_interval(f, k, connected, options).value;
}

// First k where dp and oracle part ways on this form, or nullopt.
std::optional<Mismatch> find_mismatch(const NirForm& f, const std::string& algorithm,
                                      bool connected, const FuzzConfig& config) {
    OracleAllK oracle = oracle_all_k(f, OracleBudget{config.oracle_budget_n});
    const auto& reference = connected ? oracle.connected : oracle.plain;
    for (int k = 0; k <= f.n(); ++k) {
        const auto dp = dp_value(f, algorithm, k, connected, config.solver_options);
        const auto& oracle_sol = reference[static_cast<std::size_t>(k)];
        if (dp != oracle_sol.value) {
            return Mismatch{k, dp, oracle_sol.value, {}, oracle_sol.nodes};
        }
    }
    return std::nullopt;
}

Counterexample shrink(NirForm f, const std::string& algorithm, bool connected, Mismatch seed_hit,
                      const FuzzConfig& config) {
    Mismatch hit = std::move(seed_hit);
    bool improved = true;
    while (improved && f.n() > 1) {
        improved = false;
        for (int v = 1; v <= f.n(); ++v) {
            NirForm candidate = f.without_node(v);
            auto cand_hit = find_mismatch(candidate, algorithm, connected, config);
            if (cand_hit) {
                f = std::move(candidate);
                hit = *std::move(cand_hit);
                improved = true;
                break;
            }
        }
    }

    Counterexample record;
    record.digest = reach_digest(f.reach);
    record.reach = f.reach;
    record.k = hit.k;
    record.connected = connected;
    record.algorithm = algorithm;
    record.kind = "value";
    record.dp_value = hit.dp_value;
    record.oracle_value = hit.oracle_value;
    record.oracle_nodes = hit.oracle_nodes;
    if (algorithm == "proper") {
        if (const auto snir = SnirForm::adopt(f)) {
            record.dp_nodes = solve_proper(*snir, hit.k, connected, config.solver_options).nodes;
        }
    } else {
        record.dp_nodes = solve_interval(f, hit.k, connected, config.solver_options).nodes;
    }
    return record;
}

void compare_algorithm(const NirForm& f, const std::string& algorithm, bool connected,
                       const OracleAllK& oracle, const FuzzConfig& config, FuzzReport& report) {
    const auto& reference = connected ? oracle.connected : oracle.plain;

    std::vector<ClusterSolution> solutions;
    if (algorithm == "proper") {
        const auto snir = SnirForm::adopt(f);
        if (!snir) return;
        solutions = solve_proper_all_k(*snir, connected, config.solver_options);
    } else {
        solutions = solve_interval_all_k(f, connected, config.solver_options);
    }

    for (int k = 0; k <= f.n(); ++k) {
        ++report.comparisons;
        const ClusterSolution& dp = solutions[static_cast<std::size_t>(k)];
        const ClusterSolution& ref = reference[static_cast<std::size_t>(k)];

        if (dp.value != ref.value) {
            ++report.disagreements;
            report.records.push_back(shrink(
                f, algorithm, connected,
                Mismatch{k, dp.value, ref.value, dp.nodes, ref.nodes}, config));
            continue;
        }
        if (!dp.feasible()) continue;

        // Witness soundness, unconditional: right size, edge count equal to
        // the reported value, connected when requested.
        const bool size_ok = static_cast<int>(dp.nodes.size()) == k;
        const bool edges_ok = size_ok && edge_count(f, dp.nodes) == *dp.value;
        const bool conn_ok = !connected || connectivity_check(f, dp.nodes);
        if (!size_ok || !edges_ok || !conn_ok) {
            ++report.soundness_violations;
            Counterexample record;
            record.digest = reach_digest(f.reach);
            record.reach = f.reach;
            record.k = k;
            record.connected = connected;
            record.algorithm = algorithm;
            record.kind = "witness";
            record.dp_value = dp.value;
            record.oracle_value = ref.value;
            record.dp_nodes = dp.nodes;
            record.oracle_nodes = ref.nodes;
            report.records.push_back(std::move(record));
        }
    }
}

} // namespace

void fuzz_one(const NirForm& f, const FuzzConfig& config, FuzzReport& report) {
    ++report.instances;
    OracleAllK oracle;
    try {
        oracle = oracle_all_k(f, OracleBudget{config.oracle_budget_n});
    } catch (const BudgetError&) {
        ++report.skipped;
        return;
    }
    for (const bool connected : {false, true}) {
        compare_algorithm(f, "interval", connected, oracle, config, report);
        if (f.stops_monotone()) {
            compare_algorithm(f, "proper", connected, oracle, config, report);
        }
    }
}

FuzzReport run_fuzz(const FuzzConfig& config) {
    FuzzReport report;

    for (int n = 1; n <= config.exhaustive_n; ++n) {
        CanonicalEnumerator stream(n);
        while (auto form = stream.next()) {
            fuzz_one(*form, config, report);
        }
    }

    SplitMix rng(config.seed);
    for (int trial = 0; trial < config.trials; ++trial) {
        GenSpec spec;
        const int span = std::max(0, config.rand_n_max - config.rand_n_min);
        spec.n = config.rand_n_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(span) + 1));
        spec.cls = trial % 2 == 0 ? GraphClass::interval : GraphClass::proper;
        spec.seed = rng.next();
        const IntervalRealization r = gen_random(spec);
        fuzz_one(to_nir(r).form, config, report);
    }
    return report;
}

std::vector<BenchRow> run_bench(const std::vector<int>& ns, const std::vector<int>& ks,
                                GraphClass cls, bool connected, int repeats,
                                std::uint64_t seed) {
    std::vector<BenchRow> rows;
    for (int n : ns) {
        GenSpec spec;
        spec.n = n;
        spec.cls = cls;
        SplitMix mixer(seed ^ (static_cast<std::uint64_t>(n) * 0x9e3779b97f4a7c15ull));
        spec.seed = mixer.next();
        const IntervalRealization r = gen_random(spec);

        // Conversion happens once, outside the timed region.
        std::optional<SnirConversion> snir;
        std::optional<NirConversion> nir;
        if (cls == GraphClass::proper) {
            snir.emplace(to_snir(r));
        } else {
            nir.emplace(to_nir(r));
        }

        for (int k : ks) {
            if (k > n) continue;
            std::vector<std::int64_t> samples;
            samples.reserve(static_cast<std::size_t>(repeats));
            for (int rep = 0; rep < repeats; ++rep) {
                const auto started = std::chrono::steady_clock::now();
                if (cls == GraphClass::proper) {
                    (void)solve_proper(snir->form, k, connected);
                } else {
                    (void)solve_interval(nir->form, k, connected);
                }
                samples.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(
                                      std::chrono::steady_clock::now() - started)
                                      .count());
            }
            std::sort(samples.begin(), samples.end());
            rows.push_back(BenchRow{n, k, cls, connected,
                                    samples[samples.size() / 2]});
        }
    }
    return rows;
}

} // namespace kcluster
