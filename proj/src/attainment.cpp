#include "eafkit/attainment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eafkit/errors.hpp"
#include "eafkit/parallel.hpp"

namespace eafkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string location(std::size_t run, std::size_t step, std::size_t objective) {
    return "run " + std::to_string(run) + ", row " + std::to_string(step) + ", objective " +
           std::to_string(objective);
}

}  // namespace

RunTensor::RunTensor(std::size_t runs, std::size_t steps, std::size_t objectives,
                     std::vector<double> values)
    : runs_(runs), steps_(steps), objectives_(objectives), values_(std::move(values)) {
    if (runs_ * steps_ * objectives_ != values_.size()) {
        throw FormatError("run tensor of shape [" + std::to_string(runs_) + "," +
                          std::to_string(steps_) + "," + std::to_string(objectives_) + "] needs " +
                          std::to_string(runs_ * steps_ * objectives_) + " values, got " +
                          std::to_string(values_.size()));
    }
    for (std::size_t s = 0; s < runs_; ++s) {
        for (std::size_t n = 0; n < steps_; ++n) {
            for (std::size_t m = 0; m < objectives_; ++m) {
                const double v = at(s, n, m);
                if (std::isnan(v)) throw DataError("NaN at " + location(s, n, m));
                if (!std::isfinite(v)) throw DataError("non-finite value at " + location(s, n, m));
            }
        }
    }
}

namespace {

std::vector<double> flatten(const std::vector<std::vector<std::vector<double>>>& nested,
                            std::size_t& steps, std::size_t& objectives) {
    steps = nested.empty() ? 0 : nested.front().size();
    objectives = (nested.empty() || nested.front().empty()) ? 0 : nested.front().front().size();
    std::vector<double> flat;
    flat.reserve(nested.size() * steps * objectives);
    for (std::size_t s = 0; s < nested.size(); ++s) {
        if (nested[s].size() != steps) {
            throw FormatError("ragged runs: run " + std::to_string(s) + " has " +
                              std::to_string(nested[s].size()) + " steps, run 0 has " +
                              std::to_string(steps));
        }
        for (std::size_t n = 0; n < steps; ++n) {
            if (nested[s][n].size() != objectives) {
                throw FormatError("ragged objectives at run " + std::to_string(s) + ", row " +
                                  std::to_string(n) + ": expected " + std::to_string(objectives) +
                                  " values, got " + std::to_string(nested[s][n].size()));
            }
            flat.insert(flat.end(), nested[s][n].begin(), nested[s][n].end());
        }
    }
    return flat;
}

}  // namespace

RunTensor::RunTensor(const std::vector<std::vector<std::vector<double>>>& nested) {
    std::size_t steps = 0;
    std::size_t objectives = 0;
    auto flat = flatten(nested, steps, objectives);
    *this = RunTensor(nested.size(), steps, objectives, std::move(flat));
}

ObjectivePoint RunTensor::point(std::size_t run, std::size_t step) const {
    const auto first = values_.begin() + static_cast<std::ptrdiff_t>((run * steps_ + step) * objectives_);
    return ObjectivePoint(std::vector<double>(first, first + static_cast<std::ptrdiff_t>(objectives_)));
}

ObjectiveSet RunTensor::run_points(std::size_t run) const { return run_points(run, steps_); }

ObjectiveSet RunTensor::run_points(std::size_t run, std::size_t prefix) const {
    std::vector<ObjectivePoint> points;
    points.reserve(prefix);
    for (std::size_t n = 0; n < prefix; ++n) points.push_back(point(run, n));
    return ObjectiveSet(std::move(points));
}

void TransformSpec::validate(std::size_t objectives) const {
    for (const auto* indices : {&maximize_indices, &log_indices}) {
        for (std::size_t m : *indices) {
            if (m >= objectives) {
                throw ValidationError("objective index " + std::to_string(m) +
                                      " out of range for M = " + std::to_string(objectives));
            }
        }
    }
}

LevelSpec::LevelSpec(std::vector<int> levels) : levels_(std::move(levels)) {
    if (levels_.empty()) throw ValidationError("at least one level is required");
    for (std::size_t k = 0; k < levels_.size(); ++k) {
        if (levels_[k] < 1) {
            throw ValidationError("level " + std::to_string(levels_[k]) + " is below 1");
        }
        if (k > 0 && levels_[k] <= levels_[k - 1]) {
            throw ValidationError("levels must be strictly increasing (" +
                                  std::to_string(levels_[k - 1]) + " then " +
                                  std::to_string(levels_[k]) + ")");
        }
    }
}

void LevelSpec::validate_for(std::size_t runs) const {
    for (int level : levels_) {
        if (static_cast<std::size_t>(level) > runs) {
            throw ValidationError("level " + std::to_string(level) + " exceeds the number of runs (" +
                                  std::to_string(runs) + ")");
        }
    }
}

RunTensor apply_transform(const RunTensor& costs, const TransformSpec& transform) {
    transform.validate(costs.objectives());
    if (transform.maximize_indices.empty() && transform.log_indices.empty()) return costs;

    std::vector<double> values = costs.values();
    const std::size_t m_count = costs.objectives();
    for (std::size_t s = 0; s < costs.runs(); ++s) {
        for (std::size_t n = 0; n < costs.steps(); ++n) {
            for (std::size_t m = 0; m < m_count; ++m) {
                double& v = values[(s * costs.steps() + n) * m_count + m];
                if (transform.is_log(m) && !(v > 0.0)) {
                    throw DataError("log-scaled objective needs positive values; got " +
                                    std::to_string(v) + " at " + location(s, n, m));
                }
                if (transform.maximizes(m)) v = -v;
            }
        }
    }
    return RunTensor(costs.runs(), costs.steps(), m_count, std::move(values));
}

SurfaceStack canonical_orientation(const SurfaceStack& stack) {
    SurfaceStack out = stack;
    const bool flip_first = stack.transform.maximizes(0);
    const bool flip_second = stack.transform.maximizes(1);
    if (flip_first) {
        for (double& x : out.grid) x = -x;
    }
    for (auto& surface : out.surfaces) {
        for (auto& p : surface) {
            if (flip_first) p.first = -p.first;
            if (flip_second) p.second = -p.second;
        }
    }
    return out;
}

std::vector<ObjectiveSet> run_fronts(const RunTensor& costs) {
    std::vector<ObjectiveSet> fronts(costs.runs());
    parallel_for(costs.runs(), [&](std::size_t s) { fronts[s] = nondominated_filter(costs.run_points(s)); });
    return fronts;
}

std::size_t attainment_count(const std::vector<ObjectiveSet>& fronts, const ObjectivePoint& y) {
    return static_cast<std::size_t>(std::count_if(
        fronts.begin(), fronts.end(), [&](const ObjectiveSet& f) { return set_attains(f, y); }));
}

double attainment_fraction(const std::vector<ObjectiveSet>& fronts, const ObjectivePoint& y) {
    if (fronts.empty()) throw ContractViolation("attainment fraction needs at least one front");
    return static_cast<double>(attainment_count(fronts, y)) / static_cast<double>(fronts.size());
}

double per_run_attainment_value(const ObjectiveSet& front, double x) {
    // Sorted ascending in y1 and nondominated, so y2 is descending and the
    // last eligible point carries the minimum.
    const auto& pts = front.points();
    const auto past = std::upper_bound(pts.begin(), pts.end(), x,
                                       [](double value, const ObjectivePoint& p) { return value < p[0]; });
    if (past == pts.begin()) return kInf;
    return (*std::prev(past))[1];
}

SurfaceStack empirical_attainment_surfaces(const RunTensor& costs, const LevelSpec& levels,
                                           const TransformSpec& transform) {
    if (costs.objectives() != 2) {
        throw UnsupportedDimension("attainment surfaces need M = 2, got M = " +
                                   std::to_string(costs.objectives()));
    }
    if (levels.size() == 0) throw ValidationError("at least one level is required");
    levels.validate_for(costs.runs());

    const RunTensor internal = apply_transform(costs, transform);
    const std::vector<ObjectiveSet> fronts = run_fronts(internal);
    const std::size_t runs = fronts.size();

    std::vector<double> grid{-kInf, kInf};
    for (const auto& front : fronts) {
        for (const auto& p : front) grid.push_back(p[0]);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    SurfaceStack stack;
    stack.levels = levels;
    stack.transform = transform;
    stack.surfaces.assign(levels.size(), std::vector<SurfacePoint>(grid.size()));

    // Sweep the grid once per run with a cursor into its sorted front.
    std::vector<double> column(runs);
    std::vector<std::size_t> cursor(runs, 0);
    for (std::size_t g = 0; g < grid.size(); ++g) {
        const double x = grid[g];
        for (std::size_t s = 0; s < runs; ++s) {
            const auto& pts = fronts[s].points();
            while (cursor[s] < pts.size() && pts[cursor[s]][0] <= x) ++cursor[s];
            column[s] = cursor[s] == 0 ? kInf : pts[cursor[s] - 1][1];
        }
        std::sort(column.begin(), column.end());
        for (std::size_t k = 0; k < levels.size(); ++k) {
            stack.surfaces[k][g] = {x, column[static_cast<std::size_t>(levels[k]) - 1]};
        }
    }
    stack.grid = std::move(grid);

    // Negation is an involution, so the same map restores the caller's orientation.
    return canonical_orientation(stack);
}

}  // namespace eafkit
