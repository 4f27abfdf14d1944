#include "eafkit/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <tuple>

#include "eafkit/dataio.hpp"
#include "eafkit/errors.hpp"
#include "eafkit/number_format.hpp"

namespace eafkit {

namespace {

constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 50.0;
constexpr double kPadFraction = 0.05;
constexpr double kLegendWidth = 160.0;
constexpr double kLegendRow = 18.0;

double axis_transform(double v, bool log) { return log ? std::log10(v) : v; }

double map_unit(double v, double lo, double hi, bool log) {
    if (std::isinf(v)) return v > 0 ? 1.0 : 0.0;
    const double t = (axis_transform(v, log) - axis_transform(lo, log)) /
                     (axis_transform(hi, log) - axis_transform(lo, log));
    return std::clamp(t, 0.0, 1.0);
}

std::string num(double v) { return format_double(v); }

std::string escape_xml(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string dash_attribute(LineStyle style) {
    switch (style) {
        case LineStyle::Solid: return "";
        case LineStyle::Dashed: return " stroke-dasharray=\"6,4\"";
        case LineStyle::Dotted: return " stroke-dasharray=\"2,3\"";
    }
    return "";
}

/// Collects finite data extents per axis.
struct Extent {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double v) {
        if (!std::isfinite(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    bool empty() const { return lo > hi; }
};

std::pair<double, double> resolve_bounds(const AxisSpec& axis, const Extent& extent, const char* name) {
    if (axis.log && !extent.empty() && !(extent.lo > 0.0)) {
        throw ValidationError(std::string("log-scaled ") + name + " axis needs positive data, got " +
                              num(extent.lo));
    }
    double lo = 0.0;
    double hi = 1.0;
    if (!extent.empty()) {
        double a = axis_transform(extent.lo, axis.log);
        double b = axis_transform(extent.hi, axis.log);
        double span = b - a;
        if (span == 0.0) span = a == 0.0 ? 1.0 : std::abs(a);
        a -= kPadFraction * span;
        b += kPadFraction * span;
        lo = axis.log ? std::pow(10.0, a) : a;
        hi = axis.log ? std::pow(10.0, b) : b;
    } else if (axis.log) {
        lo = 1.0;
        hi = 10.0;
    }
    if (axis.min) lo = *axis.min;
    if (axis.max) hi = *axis.max;
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
        throw ValidationError(std::string(name) + " axis bounds must be finite with min < max");
    }
    if (axis.log && !(lo > 0.0)) {
        throw ValidationError(std::string("log-scaled ") + name + " axis needs a positive lower bound");
    }
    return {lo, hi};
}

void validate_styles(const PlotSpec& spec, std::size_t expected, const char* what) {
    if (spec.series.size() != expected) {
        throw ValidationError("expected " + std::to_string(expected) + " color/label pair(s) for " + what + ", got " +
                              std::to_string(spec.series.size()));
    }
    for (const auto& s : spec.series) {
        if (s.color.empty()) throw ValidationError("every series needs a color");
        if (s.label.empty()) throw ValidationError("every series needs a label");
    }
    if (spec.width < 200 || spec.height < 150) throw ValidationError("figure must be at least 200x150 pixels");
}

std::vector<double> linear_ticks(double lo, double hi) {
    const double raw = (hi - lo) / 5.0;
    const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
    double step = magnitude;
    for (double factor : {1.0, 2.0, 5.0, 10.0}) {
        step = factor * magnitude;
        if (step >= raw) break;
    }
    std::vector<double> ticks;
    for (double k = std::ceil(lo / step); k * step <= hi + 1e-9 * step && ticks.size() < 50; k += 1.0) {
        const double t = k * step;
        ticks.push_back(t == 0.0 ? 0.0 : t);
    }
    return ticks;
}

std::vector<double> log_ticks(double lo, double hi) {
    std::vector<double> ticks;
    for (double e = std::ceil(std::log10(lo)); e <= std::floor(std::log10(hi)) && ticks.size() < 50; e += 1.0) {
        ticks.push_back(std::pow(10.0, e));
    }
    if (ticks.empty()) ticks = {lo, hi};
    return ticks;
}

std::string tick_label(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.4g", v);
    return buffer;
}

/// Accumulates SVG text for one figure.
class SvgCanvas {
public:
    SvgCanvas(const PlotSpec& spec, const PlotFrame& frame) : spec_(spec), frame_(frame) {
        out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
        out_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(spec.width) +
                "\" height=\"" + std::to_string(spec.height) + "\" viewBox=\"0 0 " + std::to_string(spec.width) +
                " " + std::to_string(spec.height) + "\">\n";
        out_ += "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" + std::to_string(spec.width) +
                "\" height=\"" + std::to_string(spec.height) + "\" fill=\"white\"/>\n";
        if (!spec.title.empty()) {
            out_ += "<text class=\"title\" x=\"" + num(spec.width / 2.0) +
                    "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
                    escape_xml(spec.title) + "</text>\n";
        }
        draw_axes();
        out_ += "<g class=\"plot-area\" data-left=\"" + num(frame.left) + "\" data-top=\"" + num(frame.top) +
                "\" data-width=\"" + num(frame.width) + "\" data-height=\"" + num(frame.height) +
                "\" data-x-min=\"" + num(frame.x_min) + "\" data-x-max=\"" + num(frame.x_max) +
                "\" data-x-log=\"" + (frame.x_log ? "1" : "0") + "\" data-y-min=\"" + num(frame.y_min) +
                "\" data-y-max=\"" + num(frame.y_max) + "\" data-y-log=\"" + (frame.y_log ? "1" : "0") + "\">\n";
    }

    std::string path_data(const std::vector<SurfacePoint>& vertices, bool close) const {
        std::string d;
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            d += (i == 0 ? "M " : " L ") + num(frame_.to_pixel_x(vertices[i].first)) + " " +
                 num(frame_.to_pixel_y(vertices[i].second));
        }
        if (close && !vertices.empty()) d += " Z";
        return d;
    }

    void line(const char* css_class, const std::vector<SurfacePoint>& vertices, const SeriesStyle& style) {
        if (vertices.empty()) return;
        out_ += "<path class=\"" + std::string(css_class) + "\" data-label=\"" + escape_xml(style.label) +
                "\" d=\"" + path_data(vertices, false) + "\" fill=\"none\" stroke=\"" + escape_xml(style.color) +
                "\" stroke-width=\"2\"" + dash_attribute(style.line_style) + "/>\n";
    }

    void band(const std::vector<SurfacePoint>& polygon, const SeriesStyle& style) {
        if (polygon.empty()) return;
        out_ += "<path class=\"band\" data-label=\"" + escape_xml(style.label) + "\" d=\"" +
                path_data(polygon, true) + "\" fill=\"" + escape_xml(style.color) +
                "\" fill-opacity=\"0.2\" stroke=\"none\"/>\n";
    }

    void markers(const std::vector<SurfacePoint>& points, const SeriesStyle& style) {
        if (style.marker == Marker::None) return;
        for (const auto& p : points) {
            if (!std::isfinite(p.first) || !std::isfinite(p.second)) continue;
            const double px = frame_.to_pixel_x(p.first);
            const double py = frame_.to_pixel_y(p.second);
            if (style.marker == Marker::Circle) {
                out_ += "<circle class=\"marker\" cx=\"" + num(px) + "\" cy=\"" + num(py) + "\" r=\"3\" fill=\"" +
                        escape_xml(style.color) + "\"/>\n";
            } else {
                const double x = std::clamp(px - 3.0, frame_.left, frame_.left + frame_.width - 6.0);
                const double y = std::clamp(py - 3.0, frame_.top, frame_.top + frame_.height - 6.0);
                out_ += "<rect class=\"marker\" x=\"" + num(x) + "\" y=\"" + num(y) +
                        "\" width=\"6\" height=\"6\" fill=\"" + escape_xml(style.color) + "\"/>\n";
            }
        }
    }

    /// Closes the plot area and writes the legend; one entry per style.
    std::string finish(const std::vector<SeriesStyle>& legend, bool with_band_swatch) {
        out_ += "</g>\n<g class=\"legend\">\n";
        const double x = frame_.left + std::max(0.0, frame_.width - kLegendWidth);
        for (std::size_t i = 0; i < legend.size(); ++i) {
            const auto& style = legend[i];
            const double y = frame_.top + 14.0 + kLegendRow * static_cast<double>(i);
            out_ += "<g class=\"legend-entry\">";
            if (with_band_swatch) {
                out_ += "<rect x=\"" + num(x + 8.0) + "\" y=\"" + num(y - 6.0) + "\" width=\"24\" height=\"12\" fill=\"" +
                        escape_xml(style.color) + "\" fill-opacity=\"0.2\"/>";
            }
            out_ += "<line x1=\"" + num(x + 8.0) + "\" y1=\"" + num(y) + "\" x2=\"" + num(x + 32.0) + "\" y2=\"" +
                    num(y) + "\" stroke=\"" + escape_xml(style.color) + "\" stroke-width=\"2\"" +
                    dash_attribute(style.line_style) + "/>";
            out_ += "<text x=\"" + num(x + 38.0) + "\" y=\"" + num(y + 4.0) +
                    "\" font-family=\"sans-serif\" font-size=\"12\">" + escape_xml(style.label) + "</text>";
            out_ += "</g>\n";
        }
        out_ += "</g>\n</svg>\n";
        return std::move(out_);
    }

private:
    void draw_axes() {
        const double bottom = frame_.top + frame_.height;
        out_ += "<g class=\"axes\" font-family=\"sans-serif\" font-size=\"11\">\n";
        out_ += "<rect class=\"frame\" x=\"" + num(frame_.left) + "\" y=\"" + num(frame_.top) + "\" width=\"" +
                num(frame_.width) + "\" height=\"" + num(frame_.height) + "\" fill=\"none\" stroke=\"black\"/>\n";
        const auto xticks = frame_.x_log ? log_ticks(frame_.x_min, frame_.x_max) : linear_ticks(frame_.x_min, frame_.x_max);
        for (double t : xticks) {
            const double px = frame_.to_pixel_x(t);
            out_ += "<line class=\"tick\" x1=\"" + num(px) + "\" y1=\"" + num(bottom) + "\" x2=\"" + num(px) +
                    "\" y2=\"" + num(bottom + 5.0) + "\" stroke=\"black\"/>";
            out_ += "<text x=\"" + num(px) + "\" y=\"" + num(bottom + 18.0) + "\" text-anchor=\"middle\">" +
                    tick_label(t) + "</text>\n";
        }
        const auto yticks = frame_.y_log ? log_ticks(frame_.y_min, frame_.y_max) : linear_ticks(frame_.y_min, frame_.y_max);
        for (double t : yticks) {
            const double py = frame_.to_pixel_y(t);
            out_ += "<line class=\"tick\" x1=\"" + num(frame_.left - 5.0) + "\" y1=\"" + num(py) + "\" x2=\"" +
                    num(frame_.left) + "\" y2=\"" + num(py) + "\" stroke=\"black\"/>";
            out_ += "<text x=\"" + num(frame_.left - 8.0) + "\" y=\"" + num(py + 4.0) + "\" text-anchor=\"end\">" +
                    tick_label(t) + "</text>\n";
        }
        if (!spec_.x.label.empty()) {
            out_ += "<text class=\"x-label\" x=\"" + num(frame_.left + frame_.width / 2.0) + "\" y=\"" +
                    num(bottom + 38.0) + "\" text-anchor=\"middle\" font-size=\"13\">" + escape_xml(spec_.x.label) +
                    "</text>\n";
        }
        if (!spec_.y.label.empty()) {
            const double cy = frame_.top + frame_.height / 2.0;
            out_ += "<text class=\"y-label\" x=\"16\" y=\"" + num(cy) + "\" transform=\"rotate(-90 16 " + num(cy) +
                    ")\" text-anchor=\"middle\" font-size=\"13\">" + escape_xml(spec_.y.label) + "</text>\n";
        }
        out_ += "</g>\n";
    }

    const PlotSpec& spec_;
    PlotFrame frame_;
    std::string out_;
};

PlotFrame make_frame(const PlotSpec& spec, const AxisSpec& x_axis, const AxisSpec& y_axis, const Extent& xs,
                     const Extent& ys) {
    PlotFrame frame;
    frame.left = kMarginLeft;
    frame.top = kMarginTop;
    frame.width = spec.width - kMarginLeft - kMarginRight;
    frame.height = spec.height - kMarginTop - kMarginBottom;
    std::tie(frame.x_min, frame.x_max) = resolve_bounds(x_axis, xs, "x");
    std::tie(frame.y_min, frame.y_max) = resolve_bounds(y_axis, ys, "y");
    frame.x_log = x_axis.log;
    frame.y_log = y_axis.log;
    return frame;
}

void surface_extent(const SurfaceStack& stack, Extent& xs, Extent& ys) {
    for (const auto& surface : stack.surfaces) {
        for (const auto& p : surface) {
            xs.add(p.first);
            ys.add(p.second);
        }
    }
}

/// Log flags from the spec, or from the transform recorded on the stack.
std::pair<AxisSpec, AxisSpec> surface_axes(const SurfaceStack& stack, const PlotSpec& spec) {
    AxisSpec x = spec.x;
    AxisSpec y = spec.y;
    x.log = x.log || stack.transform.is_log(0);
    y.log = y.log || stack.transform.is_log(1);
    return {x, y};
}

}  // namespace

double PlotFrame::to_pixel_x(double x) const { return left + width * map_unit(x, x_min, x_max, x_log); }

double PlotFrame::to_pixel_y(double y) const { return top + height * (1.0 - map_unit(y, y_min, y_max, y_log)); }

std::vector<SurfacePoint> staircase_vertices(const std::vector<SurfacePoint>& surface) {
    std::vector<SurfacePoint> vertices;
    auto push = [&](SurfacePoint p) {
        if (vertices.empty() || !(vertices.back() == p)) vertices.push_back(p);
    };
    const SurfacePoint* previous = nullptr;
    for (std::size_t i = 0; i < surface.size(); ++i) {
        const SurfacePoint& p = surface[i];
        if (!std::isfinite(p.second)) continue;
        if (previous == nullptr) {
            // Unattained head: the level reaches p only from +/-inf in y.
            if (i > 0) push({p.first, surface[i - 1].second});
        } else {
            push({p.first, previous->second});
        }
        push(p);
        previous = &p;
    }
    return vertices;
}

std::string render_multiple_surfaces(const SurfaceStack& stack, const PlotSpec& spec) {
    validate_styles(spec, stack.size(), "the surfaces");
    Extent xs;
    Extent ys;
    surface_extent(stack, xs, ys);
    const auto [x_axis, y_axis] = surface_axes(stack, spec);
    const PlotFrame frame = make_frame(spec, x_axis, y_axis, xs, ys);
    SvgCanvas canvas(spec, frame);
    for (std::size_t k = 0; k < stack.size(); ++k) {
        canvas.line("surface", staircase_vertices(stack.surfaces[k]), spec.series[k]);
        canvas.markers(stack.surfaces[k], spec.series[k]);
    }
    return canvas.finish(spec.series, false);
}

std::string render_surface_with_band(const SurfaceStack& stack, const PlotSpec& spec) {
    if (stack.size() != 3) {
        throw ValidationError("band plots need exactly 3 surfaces (lower, center, upper), got " +
                              std::to_string(stack.size()));
    }
    validate_styles(spec, 1, "a band plot");
    Extent xs;
    Extent ys;
    surface_extent(stack, xs, ys);
    const auto [x_axis, y_axis] = surface_axes(stack, spec);
    const PlotFrame frame = make_frame(spec, x_axis, y_axis, xs, ys);
    SvgCanvas canvas(spec, frame);

    std::vector<SurfacePoint> polygon = staircase_vertices(stack.surfaces[0]);
    const std::vector<SurfacePoint> upper = staircase_vertices(stack.surfaces[2]);
    polygon.insert(polygon.end(), upper.rbegin(), upper.rend());
    canvas.band(polygon, spec.series[0]);
    canvas.line("surface", staircase_vertices(stack.surfaces[1]), spec.series[0]);
    canvas.markers(stack.surfaces[1], spec.series[0]);
    return canvas.finish(spec.series, true);
}

std::string render_hv_with_band(const std::vector<HvTraceSet>& traces, const PlotSpec& spec) {
    validate_styles(spec, traces.size(), "the trace sets");
    if (traces.empty()) throw ValidationError("nothing to plot");
    const std::size_t steps = traces.front().steps();
    Extent xs;
    Extent ys;
    for (const auto& t : traces) {
        if (t.steps() != steps) {
            throw ValidationError("trace sets have different evaluation counts (" + std::to_string(steps) + " vs " +
                                  std::to_string(t.steps()) + ")");
        }
        if (t.band_halfwidth.size() != steps) throw ValidationError("band and center lengths differ");
        for (std::size_t n = 0; n < steps; ++n) {
            ys.add(t.center[n] - t.band_halfwidth[n]);
            ys.add(t.center[n] + t.band_halfwidth[n]);
        }
    }
    if (steps == 0) throw ValidationError("trace sets are empty");
    xs.add(1.0);
    xs.add(static_cast<double>(steps));
    const PlotFrame frame = make_frame(spec, spec.x, spec.y, xs, ys);
    SvgCanvas canvas(spec, frame);
    for (std::size_t i = 0; i < traces.size(); ++i) {
        const auto& t = traces[i];
        std::vector<SurfacePoint> polygon;
        std::vector<SurfacePoint> line;
        for (std::size_t n = 0; n < steps; ++n) {
            polygon.push_back({static_cast<double>(n + 1), t.center[n] + t.band_halfwidth[n]});
            line.push_back({static_cast<double>(n + 1), t.center[n]});
        }
        for (std::size_t n = steps; n-- > 0;) {
            polygon.push_back({static_cast<double>(n + 1), t.center[n] - t.band_halfwidth[n]});
        }
        canvas.band(polygon, spec.series[i]);
        canvas.line("hv-line", line, spec.series[i]);
        canvas.markers(line, spec.series[i]);
    }
    return canvas.finish(spec.series, true);
}

void plot_multiple_surfaces(const SurfaceStack& stack, const PlotSpec& spec, const std::filesystem::path& path) {
    write_text_file(path, render_multiple_surfaces(stack, spec));
}

void plot_surface_with_band(const SurfaceStack& stack, const PlotSpec& spec, const std::filesystem::path& path) {
    write_text_file(path, render_surface_with_band(stack, spec));
}

void plot_hv_with_band(const std::vector<HvTraceSet>& traces, const PlotSpec& spec,
                       const std::filesystem::path& path) {
    write_text_file(path, render_hv_with_band(traces, spec));
}

LineStyle parse_line_style(const std::string& name) {
    if (name == "solid") return LineStyle::Solid;
    if (name == "dashed") return LineStyle::Dashed;
    if (name == "dotted") return LineStyle::Dotted;
    throw ValidationError("unknown line style '" + name + "' (solid, dashed, dotted)");
}

Marker parse_marker(const std::string& name) {
    if (name == "none") return Marker::None;
    if (name == "circle") return Marker::Circle;
    if (name == "square") return Marker::Square;
    throw ValidationError("unknown marker '" + name + "' (none, circle, square)");
}

}  // namespace eafkit
