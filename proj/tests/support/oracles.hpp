#pragma once

// Test-only reference computations. None of these call into the code paths
// they are used to check: attainment is counted over raw observations,
// hypervolume by cell counting or sampling, and SVG geometry is recovered by
// parsing the emitted text.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <regex>
#include <string>
#include <utility>
#include <vector>

#include "eafkit/attainment.hpp"

namespace oracle {

using Point = std::pair<double, double>;
using Runs = std::vector<std::vector<Point>>;  // raw observations per run

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline Runs raw_runs(const eafkit::RunTensor& costs) {
    Runs runs(costs.runs());
    for (std::size_t s = 0; s < costs.runs(); ++s) {
        for (std::size_t n = 0; n < costs.steps(); ++n) runs[s].emplace_back(costs.at(s, n, 0), costs.at(s, n, 1));
    }
    return runs;
}

/// Number of runs with an observation weakly dominating y (minimization).
inline int attained_by(const Runs& runs, Point y) {
    int count = 0;
    for (const auto& run : runs) {
        const bool hit = std::any_of(run.begin(), run.end(),
                                     [&](const Point& p) { return p.first <= y.first && p.second <= y.second; });
        count += hit ? 1 : 0;
    }
    return count;
}

/// Smallest integer y2 in [lo, hi] with attained_by((x, y2)) >= level, or +inf.
inline double lattice_boundary(const Runs& runs, double x, int level, int lo, int hi) {
    for (int y = lo; y <= hi; ++y) {
        if (attained_by(runs, {x, static_cast<double>(y)}) >= level) return y;
    }
    return kInf;
}

/// Brute-force per-run attainment value: min y2 over raw observations with y1 <= x.
inline double step_value(const std::vector<Point>& run, double x) {
    double best = kInf;
    for (const auto& p : run) {
        if (p.first <= x) best = std::min(best, p.second);
    }
    return best;
}

/// Area dominated by integer points inside [0, rx) x [0, ry), by unit-cell counting.
inline long long lattice_cell_hv(const std::vector<Point>& points, int rx, int ry) {
    long long cells = 0;
    for (int i = 0; i < rx; ++i) {
        for (int j = 0; j < ry; ++j) {
            const bool covered = std::any_of(points.begin(), points.end(), [&](const Point& p) {
                return p.first <= i && p.second <= j;
            });
            cells += covered ? 1 : 0;
        }
    }
    return cells;
}

struct MonteCarlo {
    double estimate;
    double standard_deviation;
};

/// Uniform sampling over [lo, ref] box.
inline MonteCarlo monte_carlo_hv(const std::vector<Point>& points, Point lo, Point ref, std::size_t samples,
                                 std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    std::uniform_real_distribution<double> ux(lo.first, ref.first);
    std::uniform_real_distribution<double> uy(lo.second, ref.second);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = ux(engine);
        const double y = uy(engine);
        for (const auto& p : points) {
            if (p.first <= x && p.second <= y) {
                ++hits;
                break;
            }
        }
    }
    const double area = (ref.first - lo.first) * (ref.second - lo.second);
    const double frac = static_cast<double>(hits) / static_cast<double>(samples);
    return {area * frac, area * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples))};
}

/// Random S x N x 2 tensor on the integer lattice [0, max]^2.
inline eafkit::RunTensor lattice_tensor(std::mt19937_64& rng, std::size_t runs, std::size_t steps, int max) {
    std::uniform_int_distribution<int> value(0, max);
    std::vector<double> values(runs * steps * 2);
    for (double& v : values) v = value(rng);
    return eafkit::RunTensor(runs, steps, 2, std::move(values));
}

inline eafkit::RunTensor real_tensor(std::mt19937_64& rng, std::size_t runs, std::size_t steps, double lo,
                                     double hi) {
    std::uniform_real_distribution<double> value(lo, hi);
    std::vector<double> values(runs * steps * 2);
    for (double& v : values) v = value(rng);
    return eafkit::RunTensor(runs, steps, 2, std::move(values));
}

// ------------------------------------------------------------------ SVG parsing

struct SvgFrame {
    double left, top, width, height;
    double x_min, x_max, y_min, y_max;
    bool x_log, y_log;

    double data_x(double px) const { return invert(px - left, width, x_min, x_max, x_log, false); }
    double data_y(double py) const { return invert(py - top, height, y_min, y_max, y_log, true); }

private:
    static double invert(double offset, double extent, double lo, double hi, bool log, bool flipped) {
        double t = offset / extent;
        if (flipped) t = 1.0 - t;
        if (log) return std::pow(10.0, std::log10(lo) + t * (std::log10(hi) - std::log10(lo)));
        return lo + t * (hi - lo);
    }
};

inline std::string attribute(const std::string& element, const std::string& name) {
    const std::regex re("\\s" + name + "=\"([^\"]*)\"");
    std::smatch m;
    if (!std::regex_search(element, m, re)) return {};
    return m[1];
}

/// Lines of the SVG whose element carries the given class attribute.
inline std::vector<std::string> elements_with_class(const std::string& svg, const std::string& css_class) {
    std::vector<std::string> out;
    const std::string needle = "class=\"" + css_class + "\"";
    std::size_t pos = 0;
    while ((pos = svg.find(needle, pos)) != std::string::npos) {
        const std::size_t start = svg.rfind('<', pos);
        const std::size_t end = svg.find('>', pos);
        out.push_back(svg.substr(start, end - start + 1));
        pos = end;
    }
    return out;
}

inline SvgFrame frame_of(const std::string& svg) {
    const auto group = elements_with_class(svg, "plot-area").at(0);
    auto num = [&](const char* name) { return std::stod(attribute(group, name)); };
    return {num("data-left"),  num("data-top"),   num("data-width"), num("data-height"),
            num("data-x-min"), num("data-x-max"), num("data-y-min"), num("data-y-max"),
            attribute(group, "data-x-log") == "1", attribute(group, "data-y-log") == "1"};
}

/// Pixel vertices of an "M x y L x y ... [Z]" path.
inline std::vector<Point> path_vertices(const std::string& element) {
    std::vector<Point> out;
    const std::string d = attribute(element, "d");
    const std::regex re("[ML] ([-0-9.e+]+) ([-0-9.e+]+)");
    for (auto it = std::sregex_iterator(d.begin(), d.end(), re); it != std::sregex_iterator(); ++it) {
        out.emplace_back(std::stod((*it)[1]), std::stod((*it)[2]));
    }
    return out;
}

inline std::vector<Point> data_vertices(const std::string& svg, const std::string& element) {
    const SvgFrame frame = frame_of(svg);
    std::vector<Point> out;
    for (const auto& [px, py] : path_vertices(element)) out.emplace_back(frame.data_x(px), frame.data_y(py));
    return out;
}

inline bool close_rel(double a, double b, double rel = 1e-6) {
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) + 1e-12;
}

/// Shoelace area in pixel units.
inline double polygon_area(const std::vector<Point>& vertices) {
    double twice = 0.0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const auto& a = vertices[i];
        const auto& b = vertices[(i + 1) % vertices.size()];
        twice += a.first * b.second - b.first * a.second;
    }
    return std::abs(twice) / 2.0;
}

}  // namespace oracle

namespace oracle {

/// Empty if the canonical-orientation stack satisfies the shared-grid,
/// staircase and level-nesting invariants; otherwise a description.
inline std::string surface_invariant_violation(const eafkit::SurfaceStack& canonical) {
    const auto& grid = canonical.grid;
    if (grid.size() < 2 || grid.front() != -kInf || grid.back() != kInf) return "grid lacks sentinels";
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i - 1] < grid[i])) return "grid not strictly increasing";
    }
    for (std::size_t k = 0; k < canonical.surfaces.size(); ++k) {
        const auto& surface = canonical.surfaces[k];
        if (surface.size() != grid.size()) return "surface length differs from grid";
        for (std::size_t i = 0; i < surface.size(); ++i) {
            if (surface[i].first != grid[i]) return "surface off the shared grid";
            if (i > 0 && surface[i].second > surface[i - 1].second) {
                return "staircase not monotone in surface " + std::to_string(k);
            }
            if (k > 0 && canonical.surfaces[k - 1][i].second > surface[i].second) {
                return "levels not nested at grid index " + std::to_string(i);
            }
        }
    }
    return {};
}

}  // namespace oracle
