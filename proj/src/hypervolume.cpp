#include "eafkit/hypervolume.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "eafkit/errors.hpp"
#include "eafkit/parallel.hpp"

namespace eafkit {

namespace {

struct Box {
    double x;
    double y;
};

Box checked_ref(const ObjectivePoint& ref) {
    if (ref.dimension() != 2) {
        throw UnsupportedDimension("2D hypervolume needs a 2D reference point, got M = " +
                                   std::to_string(ref.dimension()));
    }
    if (!std::isfinite(ref[0]) || !std::isfinite(ref[1])) {
        throw ValidationError("reference point must be finite");
    }
    return {ref[0], ref[1]};
}

/// Rectangle sum over a front sorted ascending in x (so descending in y),
/// every point strictly inside the box.
double staircase_area(const std::vector<std::pair<double, double>>& front, Box ref) {
    double area = 0.0;
    double previous_y = ref.y;
    for (const auto& [x, y] : front) {
        area += (ref.x - x) * (previous_y - y);
        previous_y = y;
    }
    return area;
}

void warn_clipped(WarningLog* warnings, std::size_t clipped, std::size_t total) {
    if (warnings == nullptr || clipped == 0) return;
    warnings->add(std::to_string(clipped) + " of " + std::to_string(total) +
                  " points lie outside the reference box and contribute zero hypervolume");
}

/// Inserts p into a sorted nondominated front kept strictly inside the box.
void insert_into_front(std::vector<std::pair<double, double>>& front, std::pair<double, double> p) {
    auto pos = std::lower_bound(front.begin(), front.end(), p);
    // Any earlier point (smaller x, or equal x and smaller y) with y <= p.y covers p.
    if (pos != front.begin() && std::prev(pos)->second <= p.second) return;
    if (pos != front.end() && *pos == p) return;
    auto last = pos;
    while (last != front.end() && last->second >= p.second) ++last;
    pos = front.erase(pos, last);
    front.insert(pos, p);
}

struct AffineMap {
    double low[2];
    double scale[2];

    std::pair<double, double> operator()(double x, double y) const {
        return {(x - low[0]) / scale[0], (y - low[1]) / scale[1]};
    }
};

AffineMap normalization_map(const ObjectiveSet& true_front, Box ref) {
    if (true_front.empty()) throw ValidationError("true Pareto front is empty");
    if (true_front.dimension() != 2) {
        throw UnsupportedDimension("true Pareto front must be 2D, got M = " +
                                   std::to_string(true_front.dimension()));
    }
    AffineMap map{};
    const double ref_values[2] = {ref.x, ref.y};
    for (std::size_t m = 0; m < 2; ++m) {
        double low = true_front[0][m];
        for (const auto& p : true_front) low = std::min(low, p[m]);
        if (!std::isfinite(low)) throw ValidationError("true Pareto front must be finite");
        const double range = ref_values[m] - low;
        if (!(range > 0.0)) {
            throw ValidationError(
                "degenerate normalization range in objective " + std::to_string(m) +
                ": the reference point must exceed the true-front minimum (HV is highly "
                "sensitive to the reference point, so pick it just beyond the worst value)");
        }
        map.low[m] = low;
        map.scale[m] = range;
    }
    return map;
}

ObjectiveSet negate_maximized(const ObjectiveSet& set, const TransformSpec& transform) {
    std::vector<ObjectivePoint> out;
    out.reserve(set.size());
    for (const auto& p : set) {
        std::vector<double> v(p.values().begin(), p.values().end());
        for (std::size_t m = 0; m < v.size(); ++m) {
            if (transform.maximizes(m)) v[m] = -v[m];
        }
        out.emplace_back(std::move(v));
    }
    return ObjectiveSet(std::move(out));
}

}  // namespace

double hypervolume_2d(const ObjectiveSet& front, const ObjectivePoint& ref, WarningLog* warnings) {
    const Box box = checked_ref(ref);
    if (!front.empty() && front.dimension() != 2) {
        throw UnsupportedDimension("2D hypervolume needs M = 2, got M = " +
                                   std::to_string(front.dimension()));
    }
    std::vector<std::pair<double, double>> inside;
    for (const auto& p : front) {
        if (p[0] < box.x && p[1] < box.y) inside.emplace_back(p[0], p[1]);
    }
    warn_clipped(warnings, front.size() - inside.size(), front.size());
    if (inside.empty()) {
        if (warnings != nullptr) warnings->add("no point dominates the reference point; hypervolume is 0");
        return 0.0;
    }
    std::vector<std::pair<double, double>> nondominated;
    for (const auto& p : inside) insert_into_front(nondominated, p);
    return staircase_area(nondominated, box);
}

double normalized_hypervolume_2d(const ObjectiveSet& front, const HvConfig& config, WarningLog* warnings) {
    if (!config.true_pareto_front) {
        throw ConfigurationError("normalized hypervolume requires a true Pareto front");
    }
    const Box box = checked_ref(config.ref_point);
    const AffineMap map = normalization_map(*config.true_pareto_front, box);
    if (!front.empty() && front.dimension() != 2) {
        throw UnsupportedDimension("2D hypervolume needs M = 2, got M = " +
                                   std::to_string(front.dimension()));
    }
    std::vector<ObjectivePoint> mapped;
    mapped.reserve(front.size());
    for (const auto& p : front) {
        const auto [x, y] = map(p[0], p[1]);
        mapped.push_back(ObjectivePoint{x, y});
    }
    return hypervolume_2d(ObjectiveSet(std::move(mapped)), ObjectivePoint{1.0, 1.0}, warnings);
}

HvTraceSet hv_over_time(const RunTensor& costs, const HvConfig& config, bool normalize, WarningLog* warnings) {
    if (costs.objectives() != 2) {
        throw UnsupportedDimension("hypervolume traces need M = 2, got M = " +
                                   std::to_string(costs.objectives()));
    }
    if (normalize && !config.true_pareto_front) {
        throw ConfigurationError("normalize requires a true Pareto front");
    }
    config.transform.validate(2);
    const ObjectivePoint ref = negate_maximized(ObjectiveSet{config.ref_point}, config.transform)[0];
    Box box = checked_ref(ref);
    std::optional<AffineMap> map;
    if (normalize) {
        map = normalization_map(negate_maximized(*config.true_pareto_front, config.transform), box);
        box = {1.0, 1.0};
    }
    const RunTensor internal = apply_transform(costs, config.transform);

    std::vector<std::vector<double>> traces(internal.runs(), std::vector<double>(internal.steps()));
    std::vector<std::size_t> clipped(internal.runs(), 0);
    parallel_for(internal.runs(), [&](std::size_t s) {
        std::vector<std::pair<double, double>> front;
        for (std::size_t n = 0; n < internal.steps(); ++n) {
            std::pair<double, double> p{internal.at(s, n, 0), internal.at(s, n, 1)};
            if (map) p = (*map)(p.first, p.second);
            if (p.first < box.x && p.second < box.y) {
                insert_into_front(front, p);
            } else {
                ++clipped[s];
            }
            traces[s][n] = staircase_area(front, box);
        }
    });

    std::size_t total_clipped = 0;
    for (std::size_t c : clipped) total_clipped += c;
    warn_clipped(warnings, total_clipped, internal.runs() * internal.steps());
    return summarize_traces(std::move(traces), config.band_statistic);
}

HvTraceSet summarize_traces(std::vector<std::vector<double>> traces, BandStatistic statistic) {
    HvTraceSet out;
    out.statistic = statistic;
    const std::size_t runs = traces.size();
    const std::size_t steps = runs == 0 ? 0 : traces.front().size();
    for (std::size_t s = 0; s < runs; ++s) {
        if (traces[s].size() != steps) {
            throw ContractViolation("trace of run " + std::to_string(s) + " has " +
                                    std::to_string(traces[s].size()) + " steps, expected " +
                                    std::to_string(steps));
        }
    }
    out.center.assign(steps, 0.0);
    out.band_halfwidth.assign(steps, 0.0);
    for (std::size_t n = 0; n < steps; ++n) {
        double sum = 0.0;
        for (std::size_t s = 0; s < runs; ++s) sum += traces[s][n];
        const double mean = sum / static_cast<double>(runs);
        out.center[n] = mean;
        if (runs < 2) continue;
        double squares = 0.0;
        for (std::size_t s = 0; s < runs; ++s) squares += (traces[s][n] - mean) * (traces[s][n] - mean);
        const double stddev = std::sqrt(squares / static_cast<double>(runs - 1));
        out.band_halfwidth[n] = statistic == BandStatistic::StandardError
                                    ? stddev / std::sqrt(static_cast<double>(runs))
                                    : stddev;
    }
    out.traces = std::move(traces);
    return out;
}

}  // namespace eafkit
