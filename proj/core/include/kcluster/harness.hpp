#ifndef KCLUSTER_HARNESS_HPP
#define KCLUSTER_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kcluster/instance_gen.hpp"
#include "kcluster/nir.hpp"
#include "kcluster/solver.hpp"

namespace kcluster {

// Differential run: dp solvers against the exhaustive oracle, every k and
// both connectivity modes per instance. Instances come from the canonical
// enumeration first (n = 1..exhaustive_n) and then from seeded random
// realizations.
struct FuzzConfig {
    int exhaustive_n = 0;
    int trials = 0;
    int rand_n_min = 8;
    int rand_n_max = 14;
    std::uint64_t seed = 1;
    int oracle_budget_n = 24;
    SolveOptions solver_options;
};

// A minimized disagreement: the instance shrank node by node for as long
// as some k kept the dp and the oracle apart.
struct Counterexample {
    std::string digest; // fnv-1a over the reach vector, names the instance
    std::vector<int> reach;
    int k = 0;
    bool connected = false;
    std::string algorithm; // "interval" or "proper"
    std::string kind;      // "value" or "witness"
    std::optional<std::int64_t> dp_value;
    std::optional<std::int64_t> oracle_value;
    std::vector<int> dp_nodes;
    std::vector<int> oracle_nodes;
};

struct FuzzReport {
    std::int64_t instances = 0;
    std::int64_t comparisons = 0;
    std::int64_t disagreements = 0;
    std::int64_t soundness_violations = 0;
    std::int64_t skipped = 0; // oracle budget refusals
    std::vector<Counterexample> records;

    bool clean() const { return disagreements == 0 && soundness_violations == 0; }
};

FuzzReport run_fuzz(const FuzzConfig& config);

// Checks one form against the oracle (all k, both modes, both dp
// algorithms where applicable) and appends to the report.
void fuzz_one(const NirForm& f, const FuzzConfig& config, FuzzReport& report);

// Timing grid for the complexity observables. One seeded instance per n;
// median of `repeats` full solves.
struct BenchRow {
    int n = 0;
    int k = 0;
    GraphClass cls = GraphClass::interval;
    bool connected = false;
    std::int64_t median_ns = 0;
};

std::vector<BenchRow> run_bench(const std::vector<int>& ns, const std::vector<int>& ks,
                                GraphClass cls, bool connected, int repeats,
                                std::uint64_t seed);

} // namespace kcluster

#endif // KCLUSTER_HARNESS_HPP
