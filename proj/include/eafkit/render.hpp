#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "eafkit/attainment.hpp"
#include "eafkit/hypervolume.hpp"

namespace eafkit {

enum class LineStyle { Solid, Dashed, Dotted };
enum class Marker { None, Circle, Square };

/// Appearance of one plotted series. Color and label are required.
struct SeriesStyle {
    std::string color;
    std::string label;
    LineStyle line_style = LineStyle::Solid;
    Marker marker = Marker::None;
};

/// Unset bounds default to the finite data extent padded by 5% per side
/// (in log10 space for log axes).
struct AxisSpec {
    std::optional<double> min;
    std::optional<double> max;
    bool log = false;
    std::string label;
};

struct PlotSpec {
    std::vector<SeriesStyle> series;
    AxisSpec x;
    AxisSpec y;
    std::string title;
    int width = 640;
    int height = 480;
};

/// Data-to-pixel map of one plot. Inside the plot box a value v maps to
///   px = left + width  * (f(v) - f(x_min)) / (f(x_max) - f(x_min))
///   py = top  + height * (f(y_max) - f(v)) / (f(y_max) - f(y_min))
/// where f is log10 on log axes and the identity otherwise. Results are
/// clamped to the box, so +/-inf land on its edges. Every SVG carries these
/// parameters as data-* attributes on its plot-area group.
struct PlotFrame {
    double left = 0.0;
    double top = 0.0;
    double width = 0.0;
    double height = 0.0;
    double x_min = 0.0;
    double x_max = 1.0;
    double y_min = 0.0;
    double y_max = 1.0;
    bool x_log = false;
    bool y_log = false;

    double to_pixel_x(double x) const;
    double to_pixel_y(double y) const;
};

/// Vertices of a surface's staircase in data coordinates: horizontal then
/// vertical between consecutive points, led by a vertical segment from the
/// unattained head (+/-inf) down to the first attained point.
std::vector<SurfacePoint> staircase_vertices(const std::vector<SurfacePoint>& surface);

/// One step path per surface, one legend entry per series style.
/// Throws ValidationError unless there is exactly one style per surface.
std::string render_multiple_surfaces(const SurfaceStack& stack, const PlotSpec& spec);

/// Translucent band between surfaces 0 and 2, solid line for surface 1.
/// Throws ValidationError unless K = 3 and exactly one style is given.
std::string render_surface_with_band(const SurfaceStack& stack, const PlotSpec& spec);

/// Mean line and mean +/- half-width band per trace set over evaluations 1..N.
/// Throws ValidationError for mismatched N or style count.
std::string render_hv_with_band(const std::vector<HvTraceSet>& traces, const PlotSpec& spec);

void plot_multiple_surfaces(const SurfaceStack& stack, const PlotSpec& spec, const std::filesystem::path& path);
void plot_surface_with_band(const SurfaceStack& stack, const PlotSpec& spec, const std::filesystem::path& path);
void plot_hv_with_band(const std::vector<HvTraceSet>& traces, const PlotSpec& spec,
                       const std::filesystem::path& path);

LineStyle parse_line_style(const std::string& name);
Marker parse_marker(const std::string& name);

}  // namespace eafkit
