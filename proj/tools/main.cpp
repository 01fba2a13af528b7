#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kcluster/cliques.hpp"
#include "kcluster/errors.hpp"
#include "kcluster/harness.hpp"
#include "kcluster/instance_gen.hpp"
#include "kcluster/nir.hpp"
#include "kcluster/oracle.hpp"
#include "kcluster/realization.hpp"
#include "kcluster/solver.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw kcluster::ArgumentError("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct SolveArgs {
    std::string path;
    int k = 0;
    bool connected = false;
    std::string klass = "auto";
    bool json_out = false;
};

int cmd_solve(const SolveArgs& args) {
    const auto text = read_file(args.path);
    const kcluster::IntervalRealization realization = kcluster::parse_realization(text);

    std::string used_class;
    kcluster::NirForm form;
    std::vector<int> node_order;
    if (args.klass == "proper" ||
        (args.klass == "auto" && kcluster::is_proper(realization))) {
        // to_snir re-checks properness and names a witness pair on failure
        auto conv = kcluster::to_snir(realization);
        form = conv.form.nir();
        node_order = std::move(conv.node_order);
        used_class = "proper";
    } else {
        auto conv = kcluster::to_nir(realization);
        form = std::move(conv.form);
        node_order = std::move(conv.node_order);
        used_class = "interval";
    }

    kcluster::ClusterSolution solution;
    if (used_class == "proper") {
        solution = kcluster::solve_proper(kcluster::SnirForm::require(form), args.k,
                                          args.connected);
    } else {
        solution = kcluster::solve_interval(form, args.k, args.connected);
    }

    // Report witnesses under the caller's original node labels.
    std::vector<int> labels;
    labels.reserve(solution.nodes.size());
    for (int v : solution.nodes) labels.push_back(node_order[static_cast<std::size_t>(v) - 1]);
    std::sort(labels.begin(), labels.end());

    if (args.json_out) {
        json doc;
        doc["value"] = solution.value ? json(*solution.value) : json(nullptr);
        doc["nodes"] = labels;
        doc["k"] = solution.k;
        doc["class"] = used_class;
        doc["connected"] = solution.connected;
        doc["feasible"] = solution.feasible();
        doc["n"] = form.n();
        doc["elapsed_ns"] = solution.stats.elapsed_ns;
        std::cout << doc.dump() << "\n";
    } else {
        if (solution.feasible()) {
            std::cout << "value " << *solution.value << "\n";
            std::cout << "nodes";
            for (int v : labels) std::cout << " " << v;
            std::cout << "\n";
        } else {
            std::cout << "infeasible (no connected subset of size " << args.k << ")\n";
        }
        std::cout << "class " << used_class << "  n " << form.n() << "  k " << solution.k
                  << "  connected " << (solution.connected ? "yes" : "no") << "  elapsed_ns "
                  << solution.stats.elapsed_ns << "\n";
        if (solution.feasible() && !solution.stats.witness_verified) {
            std::cout << "warning: witness does not reach the reported value; "
                         "the dp bookkeeping is inconsistent on this instance\n";
        }
    }
    return solution.feasible() ? kExitOk : kExitInfeasible;
}

int cmd_inspect(const std::string& what, const std::string& path) {
    const auto text = read_file(path);
    const auto realization = kcluster::parse_realization(text);
    const auto conv = kcluster::to_nir(realization);
    const kcluster::NirForm& form = conv.form;
    const int n = form.n();

    std::cout << "node order";
    for (int v : conv.node_order) std::cout << " " << v;
    std::cout << "\n";

    if (what == "nir") {
        std::cout << "reach";
        for (int x : form.reach) std::cout << " " << x;
        std::cout << "\n";
        for (int i = 1; i <= n; ++i) {
            std::string row;
            for (int j = 1; j <= n; ++j) {
                row += j > i ? '.' : static_cast<char>('0' + kcluster::nir_entry(form, i, j));
            }
            std::cout << row << "\n";
        }
        return kExitOk;
    }

    // cliques
    const auto cliques = kcluster::maximal_cliques(form);
    std::optional<kcluster::StairSet> picks;
    if (auto snir = kcluster::SnirForm::adopt(form)) picks = kcluster::stairs(*snir);
    for (int t = 1; t <= cliques.count(); ++t) {
        std::cout << "Q" << t << "={";
        const auto members = kcluster::clique_members(form, cliques.anchor(t));
        for (std::size_t i = 0; i < members.size(); ++i) {
            std::cout << (i ? "," : "") << members[i];
        }
        std::cout << "} @row " << cliques.anchor(t);
        if (picks) std::cout << " pick=(" << picks->row(t) << "," << picks->col(t) << ")";
        std::cout << "\n";
    }
    return kExitOk;
}

json record_to_json(const kcluster::Counterexample& r) {
    json doc;
    doc["digest"] = r.digest;
    doc["reach"] = r.reach;
    doc["k"] = r.k;
    doc["connected"] = r.connected;
    doc["algorithm"] = r.algorithm;
    doc["kind"] = r.kind;
    doc["dp_value"] = r.dp_value ? json(*r.dp_value) : json(nullptr);
    doc["oracle_value"] = r.oracle_value ? json(*r.oracle_value) : json(nullptr);
    doc["dp_nodes"] = r.dp_nodes;
    doc["oracle_nodes"] = r.oracle_nodes;
    return doc;
}

int cmd_fuzz(const kcluster::FuzzConfig& config) {
    const kcluster::FuzzReport report = kcluster::run_fuzz(config);
    for (const auto& record : report.records) {
        std::cout << record_to_json(record).dump() << "\n";
    }
    std::cout << "instances=" << report.instances << " comparisons=" << report.comparisons
              << " disagreements=" << report.disagreements
              << " witness_violations=" << report.soundness_violations
              << " skipped=" << report.skipped << "\n";
    return report.clean() ? kExitOk : kExitError;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

int cmd_bench(const std::string& n_list, const std::string& k_list, const std::string& klass,
              bool connected, int repeats, std::uint64_t seed) {
    const auto ns = parse_int_list(n_list);
    const auto ks = parse_int_list(k_list);
    std::cout << "n,k,class,connected,median_ns\n";
    for (const auto cls : {kcluster::GraphClass::proper, kcluster::GraphClass::interval}) {
        if (klass == "proper" && cls != kcluster::GraphClass::proper) continue;
        if (klass == "interval" && cls != kcluster::GraphClass::interval) continue;
        for (const auto& row : kcluster::run_bench(ns, ks, cls, connected, repeats, seed)) {
            std::cout << row.n << "," << row.k << ","
                      << (row.cls == kcluster::GraphClass::proper ? "proper" : "interval") << ","
                      << (row.connected ? "true" : "false") << "," << row.median_ns << "\n";
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-cluster (densest k-subgraph) solver for interval graphs"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "solve one instance");
    solve->add_option("instance", solve_args.path, "instance file")->required();
    solve->add_option("--k", solve_args.k, "cluster size")->required();
    solve->add_flag("--connected", solve_args.connected, "require a connected subgraph");
    solve->add_option("--class", solve_args.klass, "solver selection")
        ->check(CLI::IsMember({"auto", "interval", "proper"}))
        ->capture_default_str();
    solve->add_flag("--json", solve_args.json_out, "emit a JSON result document");

    std::string inspect_what;
    std::string inspect_path;
    auto* inspect = app.add_subcommand("inspect", "print the derived structures");
    inspect->add_option("what", inspect_what, "nir | cliques")
        ->required()
        ->check(CLI::IsMember({"nir", "cliques"}));
    inspect->add_option("instance", inspect_path, "instance file")->required();

    kcluster::FuzzConfig fuzz_config;
    auto* fuzz = app.add_subcommand("fuzz", "differential test against the exhaustive oracle");
    fuzz->add_option("--exhaustive-n", fuzz_config.exhaustive_n,
                     "enumerate every instance for n = 1..this");
    fuzz->add_option("--trials", fuzz_config.trials, "random trials");
    fuzz->add_option("--nmin", fuzz_config.rand_n_min, "random n lower bound");
    fuzz->add_option("--nmax", fuzz_config.rand_n_max, "random n upper bound");
    fuzz->add_option("--seed", fuzz_config.seed, "random seed");
    fuzz->add_option("--budget", fuzz_config.oracle_budget_n, "oracle node budget");

    std::string bench_n = "200,400,800";
    std::string bench_k = "6";
    std::string bench_class = "both";
    bool bench_connected = false;
    int bench_repeats = 5;
    std::uint64_t bench_seed = 1;
    auto* bench = app.add_subcommand("bench", "timing grid, CSV on stdout");
    bench->add_option("--grid-n", bench_n, "comma list of n values")->capture_default_str();
    bench->add_option("--grid-k", bench_k, "comma list of k values")->capture_default_str();
    bench->add_option("--class", bench_class, "proper | interval | both")
        ->check(CLI::IsMember({"proper", "interval", "both"}))
        ->capture_default_str();
    bench->add_flag("--connected", bench_connected, "bench the connected variant");
    bench->add_option("--trials", bench_repeats, "repetitions per cell (median)")
        ->capture_default_str();
    bench->add_option("--seed", bench_seed, "instance seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(solve_args);
        if (inspect->parsed()) return cmd_inspect(inspect_what, inspect_path);
        if (fuzz->parsed()) return cmd_fuzz(fuzz_config);
        return cmd_bench(bench_n, bench_k, bench_class, bench_connected, bench_repeats,
                         bench_seed);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitError;
    }
}
