#include "eafkit/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "eafkit/errors.hpp"

namespace eafkit {

namespace {

void require_same_dimension(const ObjectivePoint& a, const ObjectivePoint& b) {
    if (a.dimension() != b.dimension()) {
        throw ContractViolation("dimension mismatch: " + std::to_string(a.dimension()) + " vs " +
                                std::to_string(b.dimension()));
    }
}

}  // namespace

ObjectivePoint::ObjectivePoint(std::vector<double> values) : values_(std::move(values)) {
    for (std::size_t m = 0; m < values_.size(); ++m) {
        if (std::isnan(values_[m])) {
            throw DataError("NaN in objective " + std::to_string(m));
        }
    }
}

ObjectivePoint::ObjectivePoint(std::initializer_list<double> values)
    : ObjectivePoint(std::vector<double>(values)) {}

ObjectiveSet::ObjectiveSet(std::vector<ObjectivePoint> points) : points_(std::move(points)) {
    for (const auto& p : points_) {
        if (p.dimension() != points_.front().dimension()) {
            throw ContractViolation("objective set mixes dimensions " +
                                    std::to_string(points_.front().dimension()) + " and " +
                                    std::to_string(p.dimension()));
        }
    }
}

ObjectiveSet::ObjectiveSet(std::initializer_list<ObjectivePoint> points)
    : ObjectiveSet(std::vector<ObjectivePoint>(points)) {}

bool weakly_dominates(const ObjectivePoint& a, const ObjectivePoint& b) {
    require_same_dimension(a, b);
    for (std::size_t m = 0; m < a.dimension(); ++m) {
        if (!(a[m] <= b[m])) return false;
    }
    return true;
}

bool dominates(const ObjectivePoint& a, const ObjectivePoint& b) {
    require_same_dimension(a, b);
    bool strict = false;
    for (std::size_t m = 0; m < a.dimension(); ++m) {
        if (a[m] > b[m]) return false;
        if (a[m] < b[m]) strict = true;
    }
    return strict;
}

bool set_attains(const ObjectiveSet& front, const ObjectivePoint& y) {
    return std::any_of(front.begin(), front.end(),
                       [&](const ObjectivePoint& p) { return weakly_dominates(p, y); });
}

ObjectiveSet nondominated_filter(const ObjectiveSet& points) {
    if (points.dimension() == 2) return nondominated_filter_2d(points);
    return nondominated_filter_pairwise(points);
}

ObjectiveSet nondominated_filter_pairwise(const ObjectiveSet& points) {
    std::vector<ObjectivePoint> kept;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
            dominated = j != i && dominates(points[j], points[i]);
        }
        if (!dominated) kept.push_back(points[i]);
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    return ObjectiveSet(std::move(kept));
}

ObjectiveSet nondominated_filter_2d(const ObjectiveSet& points) {
    if (points.empty()) return {};
    if (points.dimension() != 2) {
        throw UnsupportedDimension("sort-based filter needs M = 2, got M = " +
                                   std::to_string(points.dimension()));
    }
    std::vector<ObjectivePoint> sorted = points.points();
    std::sort(sorted.begin(), sorted.end());

    // Ascending (f1, f2): a point survives iff its f2 beats every earlier f2.
    // Equal-f1 ties therefore keep only the minimal f2.
    std::vector<ObjectivePoint> front;
    double best_second = std::numeric_limits<double>::infinity();
    for (auto& p : sorted) {
        if (front.empty() || p[1] < best_second) {
            best_second = p[1];
            front.push_back(std::move(p));
        }
    }
    return ObjectiveSet(std::move(front));
}

}  // namespace eafkit
