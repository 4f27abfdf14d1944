#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "eafkit/errors.hpp"
#include "eafkit/hypervolume.hpp"
#include "support/oracles.hpp"

using eafkit::HvConfig;
using eafkit::ObjectivePoint;
using eafkit::ObjectiveSet;
using eafkit::RunTensor;

namespace {

std::vector<oracle::Point> as_pairs(const ObjectiveSet& set) {
    std::vector<oracle::Point> out;
    for (const auto& p : set) out.emplace_back(p[0], p[1]);
    return out;
}

ObjectiveSet random_lattice_set(std::mt19937_64& rng, std::size_t n, int rx, int ry) {
    std::vector<ObjectivePoint> points;
    for (std::size_t i = 0; i < n; ++i) {
        points.push_back(ObjectivePoint{static_cast<double>(rng() % rx), static_cast<double>(rng() % ry)});
    }
    return ObjectiveSet(std::move(points));
}

}  // namespace

TEST_CASE("hypervolume examples") {
    CHECK(eafkit::hypervolume_2d({{0, 0}}, {1, 1}) == 1.0);
    CHECK(eafkit::hypervolume_2d({{1, 1}}, {1, 1}) == 0.0);

    // 3*1 + 2*1 + 1*1 by rectangles; cell counting and sampling agree.
    const ObjectiveSet staircase{{1, 3}, {2, 2}, {3, 1}};
    CHECK(eafkit::hypervolume_2d(staircase, {4, 4}) == 6.0);
    CHECK(oracle::lattice_cell_hv(as_pairs(staircase), 4, 4) == 6);
    const auto mc = oracle::monte_carlo_hv(as_pairs(staircase), {0, 0}, {4, 4}, 200000, 1);
    CHECK(std::abs(mc.estimate - 6.0) <= 3 * mc.standard_deviation);
}

TEST_CASE("unsorted and dominated input is handled") {
    CHECK(eafkit::hypervolume_2d({{3, 1}, {2, 3}, {1, 3}, {2, 2}, {3, 3}}, {4, 4}) == 6.0);
}

TEST_CASE("points outside the reference box are clipped with a warning") {
    eafkit::WarningLog log;
    CHECK(eafkit::hypervolume_2d({{1, 3}, {5, 0}, {0, 4}}, {4, 4}, &log) == 3.0);
    CHECK(log.messages.size() == 1);

    eafkit::WarningLog empty_log;
    CHECK(eafkit::hypervolume_2d({{5, 5}}, {4, 4}, &empty_log) == 0.0);
    CHECK_FALSE(empty_log.empty());
    CHECK(eafkit::hypervolume_2d({}, {4, 4}) == 0.0);
}

TEST_CASE("hypervolume errors") {
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(eafkit::hypervolume_2d({{0, 0}}, {inf, 1}), eafkit::ValidationError);
    CHECK_THROWS_AS(eafkit::hypervolume_2d({{0, 0, 0}}, {1, 1}), eafkit::UnsupportedDimension);
    CHECK_THROWS_AS(eafkit::hypervolume_2d({{0, 0, 0}}, {1, 1, 1}), eafkit::UnsupportedDimension);
}

TEST_CASE("normalized hypervolume") {
    HvConfig config;
    config.ref_point = {2, 2};
    config.true_pareto_front = ObjectiveSet{{0, 0}};
    CHECK(eafkit::normalized_hypervolume_2d({{0, 0}}, config) == 1.0);
    CHECK(eafkit::normalized_hypervolume_2d({{1, 1}}, config) == 0.25);
    CHECK(eafkit::normalized_hypervolume_2d({{3, 0}, {0, 5}}, config) == 0.0);

    HvConfig missing;
    missing.ref_point = {2, 2};
    CHECK_THROWS_AS(eafkit::normalized_hypervolume_2d({{1, 1}}, missing), eafkit::ConfigurationError);

    HvConfig degenerate;
    degenerate.ref_point = {2, 0};
    degenerate.true_pareto_front = ObjectiveSet{{0, 0}};
    CHECK_THROWS_AS(eafkit::normalized_hypervolume_2d({{1, 1}}, degenerate), eafkit::ValidationError);
}

TEST_CASE("hypervolume traces") {
    HvConfig config;
    config.ref_point = {4, 4};
    const RunTensor one_run({{{3, 3}, {1, 3}, {2, 2}}});
    const auto traces = eafkit::hv_over_time(one_run, config, false);
    CHECK(traces.traces.at(0) == std::vector<double>{1, 3, 5});
    CHECK(traces.center == std::vector<double>{1, 3, 5});
    CHECK(traces.band_halfwidth == std::vector<double>{0, 0, 0});

    const auto summary = eafkit::summarize_traces({{1, 3}, {3, 5}});
    CHECK(summary.center == std::vector<double>{2, 4});
    CHECK(summary.band_halfwidth == std::vector<double>{1, 1});

    const auto deviation = eafkit::summarize_traces({{1, 3}, {3, 5}}, eafkit::BandStatistic::StandardDeviation);
    CHECK(deviation.band_halfwidth[0] == doctest::Approx(std::sqrt(2.0)));

    CHECK_THROWS_AS(eafkit::hv_over_time(one_run, config, true), eafkit::ConfigurationError);
    CHECK_THROWS_AS(eafkit::summarize_traces({{1, 2}, {1}}), eafkit::ContractViolation);
}

TEST_CASE("traces honor maximization and normalization") {
    // Maximizing the second objective: (1, 3) becomes (1, -3) against ref (4, -0).
    HvConfig config;
    config.ref_point = {4, 0};
    config.transform.maximize_indices = {1};
    const RunTensor costs({{{1, 3}, {2, 4}}});
    const auto traces = eafkit::hv_over_time(costs, config, false);
    CHECK(traces.traces[0] == std::vector<double>{9, 3 * 3 + 2 * 1});

    config.true_pareto_front = ObjectiveSet{{0, 4}};
    const auto normalized = eafkit::hv_over_time(costs, config, true);
    CHECK(normalized.traces[0][1] == doctest::Approx(11.0 / 16.0));
}

TEST_CASE("traces equal prefix hypervolumes and are monotone") {
    std::mt19937_64 rng(17);
    HvConfig config;
    config.ref_point = {10, 10};
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t runs = 1 + rng() % 5;
        const std::size_t steps = 1 + rng() % 15;
        const auto costs = oracle::real_tensor(rng, runs, steps, 0.0, 12.0);
        const auto traces = eafkit::hv_over_time(costs, config, false);
        for (std::size_t s = 0; s < runs; ++s) {
            for (std::size_t n = 0; n < steps; ++n) {
                REQUIRE(traces.traces[s][n] ==
                        doctest::Approx(eafkit::hypervolume_2d(costs.run_points(s, n + 1), config.ref_point)));
                if (n > 0) REQUIRE(traces.traces[s][n] >= traces.traces[s][n - 1]);
            }
        }
        for (double h : traces.band_halfwidth) REQUIRE(h >= 0.0);

        // Reversing run order permutes traces only.
        std::vector<double> reversed;
        for (std::size_t s = runs; s-- > 0;) {
            for (std::size_t n = 0; n < steps; ++n) {
                reversed.push_back(costs.at(s, n, 0));
                reversed.push_back(costs.at(s, n, 1));
            }
        }
        const auto flipped = eafkit::hv_over_time(RunTensor(runs, steps, 2, std::move(reversed)), config, false);
        for (std::size_t n = 0; n < steps; ++n) {
            REQUIRE(flipped.center[n] == doctest::Approx(traces.center[n]).epsilon(1e-12));
            REQUIRE(flipped.band_halfwidth[n] == doctest::Approx(traces.band_halfwidth[n]).epsilon(1e-9));
        }
    }
}

TEST_CASE("rectangle decomposition equals lattice cell counting") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const int rx = 2 + static_cast<int>(rng() % 15);
        const int ry = 2 + static_cast<int>(rng() % 15);
        const auto front = random_lattice_set(rng, 1 + rng() % 12, rx, ry);
        const double hv = eafkit::hypervolume_2d(front, {static_cast<double>(rx), static_cast<double>(ry)});
        REQUIRE(hv == static_cast<double>(oracle::lattice_cell_hv(as_pairs(front), rx, ry)));
    }
}

TEST_CASE("dominance consistency and normalization order") {
    std::mt19937_64 rng(29);
    HvConfig config;
    config.ref_point = {10, 20};
    config.true_pareto_front = ObjectiveSet{{-1, 2}, {3, -4}};
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_lattice_set(rng, 1 + rng() % 8, 12, 22);
        // b: each point of a pushed away, so a weakly dominates all of b.
        std::vector<ObjectivePoint> worse;
        for (const auto& p : a) worse.push_back(ObjectivePoint{p[0] + static_cast<double>(rng() % 3), p[1] + static_cast<double>(rng() % 3)});
        const ObjectiveSet b(std::move(worse));
        const double hv_a = eafkit::hypervolume_2d(a, config.ref_point);
        const double hv_b = eafkit::hypervolume_2d(b, config.ref_point);
        REQUIRE(hv_a >= hv_b);

        const double norm_a = eafkit::normalized_hypervolume_2d(a, config);
        const double norm_b = eafkit::normalized_hypervolume_2d(b, config);
        // Mapped space is a per-axis affine rescale: HV scales by 1 / (11 * 24).
        CHECK(norm_a == doctest::Approx(hv_a / (11.0 * 24.0)));
        CHECK((norm_a >= norm_b) == (hv_a >= hv_b));
    }
}
