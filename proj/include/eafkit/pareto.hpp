#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace eafkit {

/// One vector in objective space. All objectives are minimized.
///
/// Values may be finite or +/- infinity (used as sentinels by the attainment
/// surfaces); NaN is rejected with a DataError on construction.
class ObjectivePoint {
public:
    ObjectivePoint() = default;
    explicit ObjectivePoint(std::vector<double> values);
    ObjectivePoint(std::initializer_list<double> values);

    std::size_t dimension() const noexcept { return values_.size(); }
    double operator[](std::size_t m) const noexcept { return values_[m]; }
    std::span<const double> values() const noexcept { return values_; }

    friend bool operator==(const ObjectivePoint&, const ObjectivePoint&) = default;
    /// Lexicographic order; used for canonical sorting of fronts.
    friend auto operator<=>(const ObjectivePoint& a, const ObjectivePoint& b) {
        return a.values_ <=> b.values_;
    }

private:
    std::vector<double> values_;
};

/// A finite collection of objective vectors sharing one dimensionality.
class ObjectiveSet {
public:
    ObjectiveSet() = default;
    explicit ObjectiveSet(std::vector<ObjectivePoint> points);
    ObjectiveSet(std::initializer_list<ObjectivePoint> points);

    /// 0 for an empty set.
    std::size_t dimension() const noexcept { return points_.empty() ? 0 : points_.front().dimension(); }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }

    const ObjectivePoint& operator[](std::size_t i) const noexcept { return points_[i]; }
    const std::vector<ObjectivePoint>& points() const noexcept { return points_; }
    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    friend bool operator==(const ObjectiveSet&, const ObjectiveSet&) = default;

private:
    std::vector<ObjectivePoint> points_;
};

/// a_m <= b_m for every objective m. Throws ContractViolation on dimension mismatch.
bool weakly_dominates(const ObjectivePoint& a, const ObjectivePoint& b);

/// Weak dominance plus strict improvement in at least one objective.
bool dominates(const ObjectivePoint& a, const ObjectivePoint& b);

/// True iff some member of `front` weakly dominates `y`. False for an empty front.
bool set_attains(const ObjectiveSet& front, const ObjectivePoint& y);

/// Points of `points` not dominated by any other point, duplicates collapsed.
///
/// M = 2 takes the O(N log N) sweep, any other M the pairwise O(N^2) filter.
/// Output is sorted lexicographically, so for M = 2 it is ascending in the
/// first objective and descending in the second.
ObjectiveSet nondominated_filter(const ObjectiveSet& points);

/// Pairwise filter for any M. Same output contract as nondominated_filter.
ObjectiveSet nondominated_filter_pairwise(const ObjectiveSet& points);

/// Sort-and-sweep filter; requires M = 2 (UnsupportedDimension otherwise).
ObjectiveSet nondominated_filter_2d(const ObjectiveSet& points);

}  // namespace eafkit
