#include <doctest.h>

#include "kcluster/errors.hpp"
#include "kcluster/instance_gen.hpp"
#include "kcluster/nir.hpp"
#include "kcluster/oracle.hpp"
#include "test_support.hpp"

using namespace kcluster;

TEST_SUITE("oracle") {

TEST_CASE("path of four, best triple") {
    // Hand enumeration of the four 3-subsets: {1,2,3} and {2,3,4} have two
    // edges, the others one.
    const NirForm p4{{1, 1, 1, 0}};
    const auto s = brute_force_kcluster(p4, 3, false);
    CHECK(*s.value == 2);
    CHECK(s.nodes == std::vector<int>{1, 2, 3}); // colex-smallest optimum
}

TEST_CASE("clique subsets") {
    const NirForm k5{{4, 3, 2, 1, 0}};
    CHECK(*brute_force_kcluster(k5, 3, false).value == 3);
    CHECK(*brute_force_kcluster(k5, 3, true).value == 3);
}

TEST_CASE("two disjoint triangles, connected four impossible") {
    const NirForm f{{2, 1, 0, 2, 1, 0}};
    CHECK(*brute_force_kcluster(f, 4, false).value == 3);
    CHECK_FALSE(brute_force_kcluster(f, 4, true).feasible());
}

TEST_CASE("whole graph equals the full edge count") {
    SplitMix rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(9));
        const auto form = to_nir(kctest::random_tied_realization(rng, n)).form;
        std::vector<int> all;
        for (int v = 1; v <= n; ++v) all.push_back(v);
        CHECK(*brute_force_kcluster(form, n, false).value == edge_count(form, all));
    }
}

TEST_CASE("value grows with k") {
    SplitMix rng(62);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(8));
        const auto form = to_nir(kctest::random_tied_realization(rng, n)).form;
        const auto all = oracle_all_k(form);
        for (int k = 1; k <= n; ++k) {
            CHECK(*all.plain[k].value >= *all.plain[k - 1].value);
        }
    }
}

TEST_CASE("single sweep agrees with per-k enumeration") {
    SplitMix rng(63);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(8));
        const auto form = to_nir(kctest::random_tied_realization(rng, n)).form;
        const auto all = oracle_all_k(form);
        for (int k = 0; k <= n; ++k) {
            for (const bool connected : {false, true}) {
                const auto single = brute_force_kcluster(form, k, connected);
                const auto& batch = connected ? all.connected[k] : all.plain[k];
                CHECK(single.value == batch.value);
                CHECK(single.nodes == batch.nodes);
            }
        }
    }
}

TEST_CASE("clique enumeration spot checks") {
    CHECK(brute_force_cliques(NirForm{{2, 1, 0}}) ==
          std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(brute_force_cliques(NirForm{{1, 1, 0}}) ==
          std::vector<std::vector<int>>{{1, 2}, {2, 3}});
    CHECK(brute_force_cliques(NirForm{{3, 0, 0, 0}}) ==
          std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}});
}

TEST_CASE("connectivity check") {
    const NirForm p4{{1, 1, 1, 0}};
    CHECK(connectivity_check(p4, {1, 2, 3}));
    CHECK_FALSE(connectivity_check(p4, {1, 3}));
    CHECK(connectivity_check(p4, {}));
    CHECK(connectivity_check(p4, {4}));
    CHECK_THROWS_AS(connectivity_check(p4, {5}), ArgumentError);
}

TEST_CASE("budget is enforced, never approximated") {
    NirForm big;
    big.reach.assign(25, 0);
    CHECK_THROWS_AS(brute_force_kcluster(big, 3, false), BudgetError);
    CHECK_THROWS_AS(oracle_all_k(big), BudgetError);
    CHECK_THROWS_AS(brute_force_cliques(big), BudgetError);
    OracleBudget tight{4};
    CHECK_THROWS_AS(brute_force_kcluster(NirForm{{1, 1, 1, 1, 0}}, 2, false, tight), BudgetError);
}

} // TEST_SUITE
