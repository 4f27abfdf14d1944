#include <doctest.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "eafkit/attainment.hpp"
#include "eafkit/errors.hpp"
#include "support/oracles.hpp"

using eafkit::LevelSpec;
using eafkit::ObjectiveSet;
using eafkit::RunTensor;
using eafkit::SurfacePoint;
using eafkit::TransformSpec;
using oracle::kInf;

namespace {

// Run 0 has front {(1,3),(3,1)}; run 1 has front {(2,2)} plus the dominated (3,3).
RunTensor two_run_example() { return RunTensor({{{1, 3}, {3, 1}}, {{2, 2}, {3, 3}}}); }

std::vector<ObjectiveSet> two_fronts() { return {{{1, 3}, {3, 1}}, {{2, 2}}}; }

/// Every finite grid value compared with the lattice boundary search.
void check_against_lattice(const RunTensor& internal_costs, const eafkit::SurfaceStack& canonical, int lo, int hi) {
    const auto runs = oracle::raw_runs(internal_costs);
    for (std::size_t k = 0; k < canonical.size(); ++k) {
        const int level = canonical.levels[k];
        for (const auto& p : canonical.surfaces[k]) {
            if (!std::isfinite(p.first)) continue;
            REQUIRE(p.second == oracle::lattice_boundary(runs, p.first, level, lo, hi));
        }
    }
}

RunTensor permute_runs(const RunTensor& costs, const std::vector<std::size_t>& order) {
    std::vector<double> values;
    for (std::size_t s : order) {
        for (std::size_t n = 0; n < costs.steps(); ++n) {
            for (std::size_t m = 0; m < costs.objectives(); ++m) values.push_back(costs.at(s, n, m));
        }
    }
    return RunTensor(costs.runs(), costs.steps(), costs.objectives(), std::move(values));
}

}  // namespace

TEST_CASE("attainment fraction") {
    const auto fronts = two_fronts();
    CHECK(eafkit::attainment_fraction(fronts, {2, 2}) == 0.5);
    CHECK(eafkit::attainment_fraction(fronts, {3, 3}) == 1.0);
    CHECK(eafkit::attainment_fraction(fronts, {0, 0}) == 0.0);
    CHECK_THROWS_AS(eafkit::attainment_fraction({}, {0, 0}), eafkit::ContractViolation);
}

TEST_CASE("per-run attainment value") {
    const ObjectiveSet front{{1, 3}, {3, 1}};
    CHECK(eafkit::per_run_attainment_value(front, 2) == 3);
    CHECK(eafkit::per_run_attainment_value(front, 0.5) == kInf);
    CHECK(eafkit::per_run_attainment_value(front, 3) == 1);
    CHECK(eafkit::per_run_attainment_value(front, kInf) == 1);
    CHECK(eafkit::per_run_attainment_value(front, -kInf) == kInf);
}

TEST_CASE("two-run example surfaces") {
    const auto costs = two_run_example();

    const auto level1 = eafkit::empirical_attainment_surfaces(costs, LevelSpec({1}));
    CHECK(level1.grid == std::vector<double>{-kInf, 1, 2, 3, kInf});
    CHECK(level1.surfaces.at(0) ==
          std::vector<SurfacePoint>{{-kInf, kInf}, {1, 3}, {2, 2}, {3, 1}, {kInf, 1}});

    const auto level2 = eafkit::empirical_attainment_surfaces(costs, LevelSpec({2}));
    CHECK(level2.surfaces.at(0) ==
          std::vector<SurfacePoint>{{-kInf, kInf}, {1, kInf}, {2, 3}, {3, 2}, {kInf, 2}});

    const auto both = eafkit::empirical_attainment_surfaces(costs, LevelSpec({1, 2}));
    check_against_lattice(costs, both, -1, 5);
    CHECK(oracle::surface_invariant_violation(both).empty());
}

TEST_CASE("single run reproduces its own staircase") {
    const RunTensor costs({{{4, 1}, {1, 4}, {2, 2}, {3, 3}}});
    const auto stack = eafkit::empirical_attainment_surfaces(costs, LevelSpec({1}));
    CHECK(stack.surfaces[0] == std::vector<SurfacePoint>{{-kInf, kInf}, {1, 4}, {2, 2}, {4, 1}, {kInf, 1}});
}

TEST_CASE("surface errors") {
    const auto costs = two_run_example();
    CHECK_THROWS_AS(eafkit::empirical_attainment_surfaces(costs, LevelSpec({3})), eafkit::ValidationError);
    CHECK_THROWS_AS(LevelSpec({0}), eafkit::ValidationError);
    CHECK_THROWS_AS(LevelSpec({2, 2}), eafkit::ValidationError);
    CHECK_THROWS_AS(LevelSpec({2, 1}), eafkit::ValidationError);
    CHECK_THROWS_AS(LevelSpec(std::vector<int>{}), eafkit::ValidationError);

    const RunTensor three_objectives({{{1, 2, 3}}});
    CHECK_THROWS_AS(eafkit::empirical_attainment_surfaces(three_objectives, LevelSpec({1})),
                    eafkit::UnsupportedDimension);

    const RunTensor with_zero({{{0, 2}, {1, 1}}});
    TransformSpec log_first;
    log_first.log_indices = {0};
    CHECK_THROWS_AS(eafkit::empirical_attainment_surfaces(with_zero, LevelSpec({1}), log_first), eafkit::DataError);

    TransformSpec out_of_range;
    out_of_range.maximize_indices = {2};
    CHECK_THROWS_AS(eafkit::empirical_attainment_surfaces(costs, LevelSpec({1}), out_of_range),
                    eafkit::ValidationError);
}

TEST_CASE("log-scale errors name run, row and objective") {
    const RunTensor costs({{{1, 2}, {1, 1}}, {{3, 4}, {2, -1}}});
    TransformSpec log_second;
    log_second.log_indices = {1};
    try {
        eafkit::apply_transform(costs, log_second);
        FAIL("expected DataError");
    } catch (const eafkit::DataError& e) {
        const std::string message = e.what();
        CHECK(message.find("run 1") != std::string::npos);
        CHECK(message.find("row 1") != std::string::npos);
        CHECK(message.find("objective 1") != std::string::npos);
    }
}

TEST_CASE("log scale leaves geometry unchanged") {
    const RunTensor costs({{{1, 30}, {10, 3}}, {{5, 5}, {50, 1}}});
    TransformSpec log_both;
    log_both.log_indices = {0, 1};
    auto logged = eafkit::empirical_attainment_surfaces(costs, LevelSpec({1, 2}), log_both);
    const auto plain = eafkit::empirical_attainment_surfaces(costs, LevelSpec({1, 2}));
    CHECK(logged.transform.log_indices == std::set<std::size_t>{0, 1});
    logged.transform = {};
    CHECK(logged == plain);
}

TEST_CASE("maximization round-trips to the caller's sign convention") {
    TransformSpec max_second;
    max_second.maximize_indices = {1};
    const RunTensor costs({{{1, 5}}});
    const auto internal = eafkit::apply_transform(costs, max_second);
    CHECK(internal.at(0, 0, 0) == 1);
    CHECK(internal.at(0, 0, 1) == -5);

    const auto stack = eafkit::empirical_attainment_surfaces(costs, LevelSpec({1}), max_second);
    CHECK(stack.surfaces[0] == std::vector<SurfacePoint>{{-kInf, -kInf}, {1, 5}, {kInf, 5}});

    CHECK(eafkit::apply_transform(costs, {}) == costs);
}

TEST_CASE("maximizing both objectives matches the lattice oracle on negated data") {
    std::mt19937_64 rng(21);
    TransformSpec max_both;
    max_both.maximize_indices = {0, 1};
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t runs = 1 + rng() % 4;
        const auto costs = oracle::lattice_tensor(rng, runs, 1 + rng() % 6, 8);
        std::vector<int> levels(runs);
        std::iota(levels.begin(), levels.end(), 1);
        const auto stack = eafkit::empirical_attainment_surfaces(costs, LevelSpec(levels), max_both);
        const auto canonical = eafkit::canonical_orientation(stack);
        REQUIRE(oracle::surface_invariant_violation(canonical).empty());
        check_against_lattice(eafkit::apply_transform(costs, max_both), canonical, -9, 1);
    }
}

TEST_CASE("surfaces agree with brute-force attainment on small lattices") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t runs = 1 + rng() % 5;
        const auto costs = oracle::lattice_tensor(rng, runs, 1 + rng() % 8, 16);
        std::vector<int> levels(runs);
        std::iota(levels.begin(), levels.end(), 1);
        const auto stack = eafkit::empirical_attainment_surfaces(costs, LevelSpec(levels));
        REQUIRE(oracle::surface_invariant_violation(stack).empty());
        check_against_lattice(costs, stack, -1, 17);
    }
}

TEST_CASE("order-statistic identity and median property") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t runs = 1 + 2 * (rng() % 5);  // odd
        const auto costs = oracle::real_tensor(rng, runs, 1 + rng() % 20, 0.0, 10.0);
        const int median_level = static_cast<int>((runs + 1) / 2);
        const auto stack = eafkit::empirical_attainment_surfaces(costs, LevelSpec({median_level}));
        const auto raw = oracle::raw_runs(costs);
        for (const auto& p : stack.surfaces[0]) {
            std::vector<double> values;
            for (const auto& run : raw) values.push_back(oracle::step_value(run, p.first));
            std::sort(values.begin(), values.end());
            REQUIRE(p.second == values[runs / 2]);
        }
    }
}

TEST_CASE("run permutation and dominated points leave surfaces unchanged") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t runs = 1 + rng() % 6;
        const std::size_t steps = 1 + rng() % 10;
        const auto costs = oracle::real_tensor(rng, runs, steps, -5.0, 5.0);
        std::vector<int> levels(runs);
        std::iota(levels.begin(), levels.end(), 1);
        const auto reference = eafkit::empirical_attainment_surfaces(costs, LevelSpec(levels));

        std::vector<std::size_t> order(runs);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        CHECK(eafkit::empirical_attainment_surfaces(permute_runs(costs, order), LevelSpec(levels)) == reference);

        // One extra row per run, strictly dominated by that run's first observation.
        std::vector<double> extended;
        for (std::size_t s = 0; s < runs; ++s) {
            for (std::size_t n = 0; n < steps; ++n) {
                extended.push_back(costs.at(s, n, 0));
                extended.push_back(costs.at(s, n, 1));
            }
            extended.push_back(costs.at(s, 0, 0) + 1.0);
            extended.push_back(costs.at(s, 0, 1) + 0.5);
        }
        const RunTensor padded(runs, steps + 1, 2, std::move(extended));
        CHECK(eafkit::empirical_attainment_surfaces(padded, LevelSpec(levels)) == reference);
    }
}

TEST_CASE("run tensor validation") {
    CHECK_THROWS_AS(RunTensor({{{1, 2}, {3, 4}}, {{1, 2}}}), eafkit::FormatError);
    CHECK_THROWS_AS(RunTensor(1, 1, 2, {std::numeric_limits<double>::quiet_NaN(), 1.0}), eafkit::DataError);
    CHECK_THROWS_AS(RunTensor(1, 1, 2, {kInf, 1.0}), eafkit::DataError);
    CHECK_THROWS_AS(RunTensor(1, 2, 2, {1.0, 1.0}), eafkit::FormatError);
}
