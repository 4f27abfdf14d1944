#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "eafkit/pareto.hpp"

namespace eafkit {

/// Objective vectors of S independent runs, N evaluations each, M objectives.
///
/// Always rectangular and finite. Stored row-major as [run][step][objective].
class RunTensor {
public:
    RunTensor() = default;
    /// Takes ownership of S*N*M values. Throws FormatError on size mismatch,
    /// DataError (naming run, row, objective) on a non-finite value.
    RunTensor(std::size_t runs, std::size_t steps, std::size_t objectives, std::vector<double> values);
    /// Nested [run][step][objective] form; ragged input throws FormatError naming the run.
    explicit RunTensor(const std::vector<std::vector<std::vector<double>>>& nested);

    std::size_t runs() const noexcept { return runs_; }
    std::size_t steps() const noexcept { return steps_; }
    std::size_t objectives() const noexcept { return objectives_; }

    double at(std::size_t run, std::size_t step, std::size_t objective) const noexcept {
        return values_[(run * steps_ + step) * objectives_ + objective];
    }
    ObjectivePoint point(std::size_t run, std::size_t step) const;
    /// Observations of one run, optionally only the first `prefix` steps.
    ObjectiveSet run_points(std::size_t run) const;
    ObjectiveSet run_points(std::size_t run, std::size_t prefix) const;

    const std::vector<double>& values() const noexcept { return values_; }

    friend bool operator==(const RunTensor&, const RunTensor&) = default;

private:
    std::size_t runs_ = 0;
    std::size_t steps_ = 0;
    std::size_t objectives_ = 0;
    std::vector<double> values_;
};

/// Objectives to maximize and objectives displayed on a log scale (0-based indices).
struct TransformSpec {
    std::set<std::size_t> maximize_indices;
    std::set<std::size_t> log_indices;

    bool maximizes(std::size_t m) const { return maximize_indices.count(m) != 0; }
    bool is_log(std::size_t m) const { return log_indices.count(m) != 0; }
    /// Throws ValidationError for any index outside [0, objectives).
    void validate(std::size_t objectives) const;

    friend bool operator==(const TransformSpec&, const TransformSpec&) = default;
};

/// Strictly increasing attainment levels L_1 < ... < L_K, each >= 1.
class LevelSpec {
public:
    LevelSpec() = default;
    /// Throws ValidationError when empty, not strictly increasing, or below 1.
    explicit LevelSpec(std::vector<int> levels);

    /// Throws ValidationError if any level exceeds the run count.
    void validate_for(std::size_t runs) const;

    std::size_t size() const noexcept { return levels_.size(); }
    int operator[](std::size_t k) const noexcept { return levels_[k]; }
    const std::vector<int>& values() const noexcept { return levels_; }

    friend bool operator==(const LevelSpec&, const LevelSpec&) = default;

private:
    std::vector<int> levels_;
};

struct SurfacePoint {
    double first = 0.0;
    double second = 0.0;

    friend bool operator==(const SurfacePoint&, const SurfacePoint&) = default;
};

/// K attainment surfaces on one shared first-objective grid.
///
/// grid[i] == surfaces[k][i].first for every k. The grid starts and ends with
/// the -inf/+inf sentinels (in minimization orientation); surface rows whose
/// level is not attained at that grid value carry +inf in the second objective.
/// Values are stored in the caller's orientation: maximized objectives are
/// already negated back.
struct SurfaceStack {
    std::vector<double> grid;
    std::vector<std::vector<SurfacePoint>> surfaces;
    LevelSpec levels;
    TransformSpec transform;

    std::size_t size() const noexcept { return surfaces.size(); }

    friend bool operator==(const SurfaceStack&, const SurfaceStack&) = default;
};

/// Negates maximized objectives so every objective is minimized. Log indices
/// are only validated (every such value must be > 0, else DataError naming
/// run, row and objective).
RunTensor apply_transform(const RunTensor& costs, const TransformSpec& transform);

/// Same stack with maximized axes negated, i.e. in minimize-all orientation.
SurfaceStack canonical_orientation(const SurfaceStack& stack);

/// Per-run nondominated fronts of a tensor already in minimize-all orientation.
std::vector<ObjectiveSet> run_fronts(const RunTensor& costs);

/// Number of fronts that weakly dominate y.
std::size_t attainment_count(const std::vector<ObjectiveSet>& fronts, const ObjectivePoint& y);

/// Fraction of fronts weakly dominating y. Throws ContractViolation for no fronts.
double attainment_fraction(const std::vector<ObjectiveSet>& fronts, const ObjectivePoint& y);

/// min{ y2 : (y1, y2) in front, y1 <= x }, or +inf if no point qualifies.
/// `front` must be a 2D nondominated set sorted by the first objective.
double per_run_attainment_value(const ObjectiveSet& front, double x);

/// Level-L_k empirical attainment surfaces of bi-objective runs.
///
/// At each grid value x the level-L second coordinate is the L-th smallest of
/// the S per-run attainment values at x. Throws UnsupportedDimension for
/// M != 2, ValidationError for levels outside [1, S], DataError for
/// nonpositive values in a log-scaled objective.
SurfaceStack empirical_attainment_surfaces(const RunTensor& costs, const LevelSpec& levels,
                                           const TransformSpec& transform = {});

}  // namespace eafkit
